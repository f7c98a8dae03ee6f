"""Interaction vs no-interaction on Fashion-MNIST and Kuzushiji-MNIST (direction of the gap only).

Point ``--fashion`` / ``--kmnist`` at directories holding the four IDX files
of each dataset (``train-images-idx3-ubyte[.gz]``, ``t10k-...``).  Both
variants are trained per seed through ``interaction_gain.py`` and the script
exits non-zero unless interaction beats no-interaction on the seed majority.

    python3 experiments/interaction_gain_other.py --fashion ~/datasets/fashion --kmnist ~/datasets/kmnist
"""
import argparse
import subprocess
import sys
from pathlib import Path

from common import RESULTS, load_results

HERE = Path(__file__).resolve().parent


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fashion")
    ap.add_argument("--kmnist")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    args = ap.parse_args()

    ok = True
    for tag, path in (("fashion", args.fashion), ("kmnist", args.kmnist)):
        if path is None:
            continue
        seeds = [str(s) for s in args.seeds]
        subprocess.run([sys.executable, str(HERE / "interaction_gain.py"), "--data", path, "--tag", tag,
                        "--seeds", *seeds], check=True)
        res = load_results(RESULTS / f"interaction_{tag}.json")
        wins = sum(res[f"interaction/seed{s}"]["mean_acc"] > res[f"no_interaction/seed{s}"]["mean_acc"]
                   for s in args.seeds)
        verdict = wins * 2 > len(args.seeds)
        ok &= verdict
        print(f"{tag}: interaction ahead on {wins}/{len(args.seeds)} seeds -> {'PASS' if verdict else 'FAIL'}")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
