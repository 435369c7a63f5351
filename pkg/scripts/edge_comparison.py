"""Data behind the three panels of the n = 10, p = 40 density comparison.

Writes one CSV per beta (s, exact, m0, m1, m2, err0, err1, err2) and prints
the max-norm error of each truncation.

    python3 scripts/edge_comparison.py --outdir out/
"""

import argparse
from pathlib import Path

import numpy as np

from softedge.cli import csv_text
from softedge.densities import EnsembleSpec
from softedge.validation import compare_grid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--p", type=float, default=40.0)
    ap.add_argument("--points", type=int, default=161)
    ap.add_argument("--outdir", default="edge_out")
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    s = np.linspace(-4, 4, args.points)
    for beta in (1, 2, 4):
        exact, terms, errs = compare_grid(EnsembleSpec(beta, args.n, args.p), s)
        header = ["s", "exact", "m0", "m1", "m2", "err0", "err1", "err2"]
        (out / f"beta{beta}.csv").write_text(csv_text(header, [s, exact, *terms, *errs]))
        mx = "  ".join(f"m={m}: {np.max(e):.3e}" for m, e in enumerate(errs))
        print(f"beta={beta}  {mx}")


if __name__ == "__main__":
    main()
