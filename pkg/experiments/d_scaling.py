"""Mean test accuracy of the interaction model as the number of circuits grows (d = 4, 8, 16).

Every circuit keeps its own disjoint training subset, so ``d * per_circuit``
images are needed.  The full MNIST training split allows the original 1,000
per circuit; the bundled 4,000-image subset supports at most 250 at d = 16.

    python3 experiments/d_scaling.py --data data/mnist5k --per-circuit 250
    python3 experiments/d_scaling.py --data ~/datasets/mnist --per-circuit 1000 --tag mnist
"""
import argparse

from common import RESULTS, ROOT, dataset_overrides, load_results, save_results, train_and_evaluate


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data", default=str(ROOT / "data" / "mnist5k"))
    ap.add_argument("--tag", default="mnist5k")
    ap.add_argument("--ds", type=int, nargs="+", default=[4, 8, 16])
    ap.add_argument("--per-circuit", type=int, default=250)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out = RESULTS / f"dscaling_{args.tag}.json"
    results = load_results(out)
    for d in args.ds:
        key = f"d{d}"
        if key in results:
            continue
        overrides = {**dataset_overrides(args.data), "d": d, "per_circuit_train": args.per_circuit,
                     "seed": args.seed}
        results[key] = train_and_evaluate(overrides, ROOT / "runs" / f"dscaling_{args.tag}" / key)
        save_results(out, results)
        print(f"d={d}: mean_acc={results[key]['mean_acc']:.4f} ({results[key]['wall_seconds']} s)", flush=True)
    accs = [results[f"d{d}"]["mean_acc"] for d in args.ds]
    monotone = all(b >= a - 0.01 for a, b in zip(accs, accs[1:]))
    print("non-decreasing within 0.01:", monotone)


if __name__ == "__main__":
    main()
