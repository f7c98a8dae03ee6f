"""Build IDX files from the 5,000-image MNIST sample shipped inside mlxtend.

The full MNIST download is out of reach offline, so the experiments run on
this sample: a stratified, seeded split of 400 train and 100 test images per
digit (4,000 / 1,000 overall), written as gzipped IDX pairs.

    python3 experiments/prepare_mnist5k.py [--wheel PATH | --csv PATH] [--out data/mnist5k]
"""
import argparse
import glob
import gzip
import io
import zipfile
from pathlib import Path

import numpy as np

from qcnet import dataio

MEMBER = "mlxtend/data/data/mnist_5k.csv.gz"


def read_csv_bytes(args) -> bytes:
    if args.csv:
        return Path(args.csv).read_bytes()
    wheel = args.wheel or next(iter(sorted(glob.glob("/tmp/probe/mlxtend-*.whl"))), None)
    if wheel is None:
        raise SystemExit("no mlxtend wheel found; pass --wheel or --csv")
    with zipfile.ZipFile(wheel) as zf:
        return zf.read(MEMBER)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--wheel")
    ap.add_argument("--csv", help="mnist_5k.csv.gz extracted from mlxtend")
    ap.add_argument("--out", default="data/mnist5k")
    ap.add_argument("--seed", type=int, default=20240101)
    args = ap.parse_args()

    raw = read_csv_bytes(args)
    table = np.loadtxt(io.BytesIO(gzip.decompress(raw)), delimiter=",")
    pixels = table[:, :-1].astype(np.uint8).reshape(-1, 28, 28)
    labels = table[:, -1].astype(np.int64)

    rng = np.random.default_rng(args.seed)
    train_idx, test_idx = [], []
    for c in range(10):
        idx = rng.permutation(np.flatnonzero(labels == c))
        train_idx.append(idx[:400])
        test_idx.append(idx[400:])
    train_idx = rng.permutation(np.concatenate(train_idx))
    test_idx = rng.permutation(np.concatenate(test_idx))

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, idx in (("train", train_idx), ("test", test_idx)):
        img_path, lab_path = out / f"{name}-images-idx3-ubyte", out / f"{name}-labels-idx1-ubyte"
        dataio.write_idx_images(img_path, pixels[idx])
        dataio.write_idx_labels(lab_path, labels[idx])
        for p in (img_path, lab_path):
            gz = p.with_name(p.name + ".gz")
            gz.write_bytes(gzip.compress(p.read_bytes(), mtime=0))
            p.unlink()
        print(f"{name}: {idx.size} images -> {img_path}.gz")


if __name__ == "__main__":
    main()
