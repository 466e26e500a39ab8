#!/usr/bin/env python3
"""Produce the phase-uncertainty sweep data: all four strategies at N=10.

The resulting CSV feeds the `uncertainty` renderer in frontend/.
"""

import argparse

from mixedmetro.cli import main


def run() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10)
    parser.add_argument("--p-steps", type=int, default=201)
    parser.add_argument("--out", default="data/uncertainty_n10.csv")
    args = parser.parse_args()
    return main([
        "qfi",
        "--strategies", "S,Cl,Q1,Q2",
        "--n", str(args.n),
        "--p-min", "0", "--p-max", "1", "--p-steps", str(args.p_steps),
        "--out", args.out,
    ])


if __name__ == "__main__":
    raise SystemExit(run())
