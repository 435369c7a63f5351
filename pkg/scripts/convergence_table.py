"""Empirical convergence orders of the density and wave-function expansions.

For each ensemble the error at a few fixed s is fitted against log(1/h)
along an n-ladder; the expected slope for truncation order m is -(m+1).

    python3 scripts/convergence_table.py --ladder 16,32,64,128
"""

import argparse

import numpy as np

from softedge.validation import S_PANEL, ConvergenceConfig, density_slopes, wave_slopes


def show(label, slopes, s_points):
    for m, row in enumerate(slopes):
        cells = "  ".join(f"s={s:+.1f}: {v:6.2f}" for s, v in zip(s_points, row))
        print(f"{label:<22} m={m} (expect {-(m + 1)})  {cells}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ladder", default="16,32,64,128")
    ap.add_argument("--s", default=",".join(str(v) for v in S_PANEL))
    ap.add_argument("--ratio", type=float, default=2.0, help="p / n for the Laguerre rows")
    args = ap.parse_args()
    ladder = tuple(int(v) for v in args.ladder.split(","))
    s_points = tuple(float(v) for v in args.s.split(","))

    for beta in (1, 2, 4):
        for label, ratio in (("gaussian", None), ("laguerre", args.ratio)):
            cfg = ConvergenceConfig(s_points=s_points, n_ladder=ladder, p_ratio=ratio)
            show(f"beta={beta} {label}", density_slopes(beta, cfg), s_points)
    for which in ("psi", "Psi"):
        for label, ratio in (("hermite", None), ("laguerre", args.ratio)):
            cfg = ConvergenceConfig(s_points=s_points, n_ladder=ladder, p_ratio=ratio)
            show(f"{which}_sharp {label}", wave_slopes(which, cfg), s_points)


if __name__ == "__main__":
    main()
