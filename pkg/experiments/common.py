"""Shared helpers for the experiment scripts (dataset paths, resumable result files)."""
import json
import time
from pathlib import Path

from qcnet import training
from qcnet.config import load_config

ROOT = Path(__file__).resolve().parents[1]
RESULTS = ROOT / "experiments" / "results"


def _find(directory: Path, *stems) -> str:
    for stem in stems:
        for name in (stem, stem + ".gz"):
            if (directory / name).exists():
                return str(directory / name)
    raise SystemExit(f"none of {stems} (optionally .gz) found in {directory}")


def dataset_overrides(data_dir) -> dict:
    """IDX paths in ``data_dir``; test files may be named ``t10k-*`` (MNIST style) or ``test-*``."""
    d = Path(data_dir)
    return {"train_images": _find(d, "train-images-idx3-ubyte"),
            "train_labels": _find(d, "train-labels-idx1-ubyte"),
            "test_images": _find(d, "t10k-images-idx3-ubyte", "test-images-idx3-ubyte"),
            "test_labels": _find(d, "t10k-labels-idx1-ubyte", "test-labels-idx1-ubyte")}


def load_results(path) -> dict:
    path = Path(path)
    return json.loads(path.read_text()) if path.exists() else {}


def save_results(path, results: dict) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(results, indent=2, sort_keys=True) + "\n")


def train_and_evaluate(overrides: dict, run_dir) -> dict:
    """Train with ``overrides`` and report the final test accuracy plus wall time."""
    cfg = load_config(None, {k: str(v) for k, v in overrides.items()})
    start = time.perf_counter()
    model = training.train(cfg, run_dir)
    test = training.load_split(cfg.test_images, cfg.test_labels, cfg.n_test)
    report = training.evaluate(model, test)
    report["wall_seconds"] = round(time.perf_counter() - start, 1)
    report["config"] = json.loads(cfg.to_json())
    return report
