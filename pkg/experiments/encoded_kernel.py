"""Encode images with a single-circuit net, then classify with a fidelity-kernel SVM.

Desk-scale default: m = C = 256, 2,000 training and 1,000 test images,
MLP depth 4 and width 512, for both the scaling and the normalization
activations.  Each stage goes through the ``qcnet`` command line
(train -> encode -> kernel -> svm).  ``--full`` switches to m = C = 1024
on whatever dataset is given (no pass/fail gate is attached to it).

    python3 experiments/encoded_kernel.py --data data/mnist5k
    python3 experiments/encoded_kernel.py --data ~/datasets/mnist --full --n-train 60000 --n-test 10000
"""
import argparse
import json
from pathlib import Path

import numpy as np

from common import RESULTS, ROOT, dataset_overrides, load_results, save_results
from qcnet import cli, dataio, training


def write_subset(images_path, labels_path, n, out_dir: Path, name: str):
    ds = training.load_split(images_path, labels_path, n)
    out_dir.mkdir(parents=True, exist_ok=True)
    dataio.write_idx_images(out_dir / f"{name}-images", np.rint(ds.images * 255).astype(np.uint8).reshape(-1, 28, 28))
    dataio.write_idx_labels(out_dir / f"{name}-labels", ds.labels)
    return str(out_dir / f"{name}-images"), str(out_dir / f"{name}-labels"), len(ds)


def run(cmd):
    code = cli.main([str(c) for c in cmd])
    if code != 0:
        raise SystemExit(f"qcnet {cmd[0]} failed with exit code {code}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data", default=str(ROOT / "data" / "mnist5k"))
    ap.add_argument("--tag", default="mnist5k")
    ap.add_argument("--n-train", type=int, default=2000)
    ap.add_argument("--n-test", type=int, default=1000)
    ap.add_argument("--m", type=int, default=256)
    ap.add_argument("--full", action="store_true", help="m = C = 1024 as in the original setting")
    ap.add_argument("--activations", nargs="+", default=["scale", "normalize"])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--set", nargs="*", default=[], metavar="KEY=VALUE", help="extra config overrides")
    args = ap.parse_args()

    m = 1024 if args.full else args.m
    tag = f"{args.tag}_m{m}"
    out = RESULTS / f"encoding_{tag}.json"
    results = load_results(out)
    base = ROOT / "runs" / f"encoding_{tag}"
    paths = dataset_overrides(args.data)
    tr_img, tr_lab, n_train = write_subset(paths["train_images"], paths["train_labels"], args.n_train, base / "data", "train")
    te_img, te_lab, n_test = write_subset(paths["test_images"], paths["test_labels"], args.n_test, base / "data", "test")

    for act in args.activations:
        if act in results:
            continue
        run_dir = base / act
        config = {"mode": "encode", "d": 1, "m": m, "C": m, "L": 4, "mlp_depth": 4, "mlp_width": 512,
                  "activation": act, "per_circuit_train": n_train, "seed": args.seed,
                  "train_images": tr_img, "train_labels": tr_lab}
        config.update(dict(kv.split("=", 1) for kv in args.set))
        flags = [x for k, v in config.items() for x in (f"--{k}", v)]
        run(["train", "--out", run_dir, "--quiet"] + flags)
        ckpt = run_dir / training.CHECKPOINT_NAME
        run(["encode", ckpt, "--out", run_dir, "--name", "train.qcst", "--images", tr_img, "--labels", tr_lab])
        run(["encode", ckpt, "--out", run_dir, "--name", "test.qcst", "--images", te_img, "--labels", te_lab])
        run(["kernel", run_dir / "train.qcst", "--labels", run_dir / "train.labels",
             "--out", run_dir, "--name", "k_train.csv"])
        run(["kernel", run_dir / "test.qcst", "--against", run_dir / "train.qcst",
             "--labels", run_dir / "test.labels", "--out", run_dir, "--name", "k_test.csv"])
        run(["svm", run_dir / "k_train.csv", run_dir / "k_test.csv", "--out", run_dir])
        report = json.loads((run_dir / "svm.json").read_text())
        metrics = [json.loads(line) for line in (run_dir / training.METRICS_NAME).read_text().splitlines()]
        report["final_train_loss"] = metrics[-1]["train_loss"] if metrics else None
        results[act] = report
        save_results(out, results)
        print(f"{act}: accuracy={report['accuracy']:.4f} (n_train={n_train}, n_test={n_test})", flush=True)


if __name__ == "__main__":
    main()
