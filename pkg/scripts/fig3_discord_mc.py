#!/usr/bin/env python3
"""Produce a discord Monte Carlo family: one samples+summary pair per p.

Each output file holds the dephasing-entropy samples at a single mixedness
value; the `discord_mc` renderer in frontend/ consumes the whole family and
draws the scatter between the conjectured and maximal lines.
"""

import argparse
from pathlib import Path

from mixedmetro.cli import main


def run() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--strategy", default="Q1", choices=("Q1", "Q2"))
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--trials", type=int, default=10000)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--p-values", type=float, nargs="+",
                        default=[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0])
    parser.add_argument("--out-dir", default="data/discord_mc")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for p in args.p_values:
        tag = f"{args.strategy.lower()}_n{args.n}_p{p:.3f}".replace(".", "_")
        out = out_dir / f"{tag}.csv"
        code = main([
            "discord-mc",
            "--strategies", args.strategy,
            "--n", str(args.n),
            "--p-min", str(p), "--p-max", str(p), "--p-steps", "1",
            "--trials", str(args.trials),
            "--seed", str(args.seed),
            "--out", str(out),
        ])
        if code != 0:
            return code
        print(f"wrote {out} and {out.with_suffix('.summary.csv')}")
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
