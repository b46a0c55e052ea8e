#!/usr/bin/env python3
"""Regenerate data/digits.csv from scikit-learn's bundled digits dataset.

Each row: 64 integer pixel values in 0..16, then the label 0..9.
"""
import os
import sys

from sklearn.datasets import load_digits


def main() -> int:
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data", "digits.csv")
    ds = load_digits()
    with open(out, "w", encoding="ascii") as f:
        for row, label in zip(ds.data, ds.target):
            f.write(",".join(str(int(v)) for v in row))
            f.write(f",{int(label)}\n")
    print(f"wrote {len(ds.target)} rows to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
