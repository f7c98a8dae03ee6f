"""Classification with and without circuit interaction (m=128, d=4, 1,000 images per circuit).

Trains both variants for each seed with the default hyperparameters and
stores mean test accuracies in a JSON file that the acceptance suite
reads.  Finished runs are skipped, so the script can be resumed.

    python3 experiments/interaction_gain.py --data data/mnist5k --seeds 0 1 2
    python3 experiments/interaction_gain.py --data ~/datasets/fashion --tag fashion
"""
import argparse

from common import RESULTS, ROOT, dataset_overrides, load_results, save_results, train_and_evaluate

VARIANTS = {"interaction": {"interaction": True}, "no_interaction": {"interaction": False}}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data", default=str(ROOT / "data" / "mnist5k"))
    ap.add_argument("--tag", default="mnist5k", help="dataset label used in the result file name")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--variants", nargs="+", choices=sorted(VARIANTS), default=sorted(VARIANTS))
    ap.add_argument("--set", nargs="*", default=[], metavar="KEY=VALUE", help="extra config overrides")
    ap.add_argument("--out", help="result JSON (default experiments/results/interaction_<tag>.json)")
    args = ap.parse_args()

    extra = dict(kv.split("=", 1) for kv in args.set)
    out = args.out or RESULTS / f"interaction_{args.tag}.json"
    results = load_results(out)
    for seed in args.seeds:
        for variant in args.variants:
            key = f"{variant}/seed{seed}"
            if key in results:
                continue
            overrides = {**dataset_overrides(args.data), **VARIANTS[variant], **extra, "seed": seed}
            run_dir = ROOT / "runs" / f"interaction_{args.tag}" / f"{variant}_seed{seed}"
            results[key] = train_and_evaluate(overrides, run_dir)
            save_results(out, results)
            print(f"{key}: mean_acc={results[key]['mean_acc']:.4f} "
                  f"per_circuit={results[key]['per_circuit_acc']} ({results[key]['wall_seconds']} s)", flush=True)
    for variant in args.variants:
        accs = [results[f"{variant}/seed{s}"]["mean_acc"] for s in args.seeds if f"{variant}/seed{s}" in results]
        print(f"{variant}: " + ", ".join(f"{a:.4f}" for a in accs))


if __name__ == "__main__":
    main()
