#!/usr/bin/env python3
"""Produce the correlations sweep data (discord, classical, total) at N=10.

The resulting CSV feeds the `correlations` renderer in frontend/; the
entangled-flag column is where the renderer reads the boundary markers from.
"""

import argparse

from mixedmetro.cli import main


def run() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10)
    parser.add_argument("--p-steps", type=int, default=1001)
    parser.add_argument("--out", default="data/correlations_n10.csv")
    args = parser.parse_args()
    return main([
        "correlations",
        "--strategies", "Cl,Q1,Q2",
        "--n", str(args.n),
        "--p-min", "0", "--p-max", "1", "--p-steps", str(args.p_steps),
        "--out", args.out,
    ])


if __name__ == "__main__":
    raise SystemExit(run())
