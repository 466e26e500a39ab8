"""Command-line front end: sweeps, table emission, and verification runs.

Subcommands: ``qfi``, ``correlations``, ``discord-mc``, ``boundaries``,
``verify``.  Exit codes: 0 success, 1 verification failure, 2 configuration
error, 3 compute-limit violation.

Every emitted file starts with ``#``-prefixed metadata lines carrying the
tool version, the seed, and the full configuration, enough to reproduce the
file exactly.  Floats are written in shortest round-trip form, so re-parsing
a file and recomputing a derived column reproduces it byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import __version__
from .correlations import (
    MC_MAX_QUBITS,
    correlation_report,
    discord_mc,
    discord_mc_bounds,
    entanglement_boundary,
)
from .fisher import phase_uncertainty, qfi_closed, qfi_spectral
from .linalg import hamming_weights, hermitian_eigensystem
from .probes import Strategy, prepare_probe
from .verify import run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_CONFIG = 2
EXIT_COMPUTE_LIMIT = 3

QFI_HEADER = "strategy,N,p,fisher_closed,fisher_spectral,delta_phi"
CORRELATIONS_HEADER = "strategy,N,p,discord,classical,total,entangled,min_pt_eig"
MC_HEADER = "trial,value_bits"
MC_SUMMARY_HEADER = "min,max,conjectured,upper_bound"
BOUNDARIES_HEADER = "strategy,N,p_star"

# Materializing 2^N matrices for the spectral cross-check stops being a desk
# job beyond this size.
SPECTRAL_HARD_CAP = 12


class ConfigError(ValueError):
    """Invalid sweep configuration (exit code 2)."""


class ComputeLimitError(ValueError):
    """Request exceeds a documented compute cap (exit code 3)."""


@dataclass(frozen=True)
class SweepConfig:
    """One sweep request; defaults are echoed into the output metadata."""

    strategies: tuple[Strategy, ...]
    n_values: tuple[int, ...]
    p_min: float = 0.0
    p_max: float = 1.0
    p_steps: int = 11
    seed: int = 42
    trials: int = 1000
    output_format: str = "csv"
    output_path: str | None = None
    spectral_max: int = 8
    workers: int = 1

    def validate(self) -> None:
        if not self.strategies:
            raise ConfigError("at least one strategy is required")
        if not self.n_values:
            raise ConfigError("at least one qubit count is required")
        if any(n < 1 for n in self.n_values):
            raise ConfigError("qubit counts must be positive")
        if not 0.0 <= self.p_min <= self.p_max <= 1.0:
            raise ConfigError("require 0 <= p_min <= p_max <= 1")
        if self.p_steps < 1:
            raise ConfigError("p_steps must be at least 1")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(f"unknown output format {self.output_format!r}")

    def p_grid(self) -> list[float]:
        # Inclusive of both endpoints; a single step degenerates to p_min.
        if self.p_steps == 1:
            return [float(self.p_min)]
        return [float(p) for p in np.linspace(self.p_min, self.p_max, self.p_steps)]

    def as_dict(self) -> dict:
        # Execution details (where the file goes, how many processes ran) do
        # not affect the rows and are omitted so identical sweeps produce
        # byte-identical files regardless of destination or worker count.
        data = asdict(self)
        data.pop("output_path")
        data.pop("workers")
        data["strategies"] = [s.value for s in self.strategies]
        data["n_values"] = list(self.n_values)
        return data


def format_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if value is None:
        return ""
    return str(value)


def metadata_lines(command: str, config: SweepConfig) -> list[str]:
    return [
        f"# mixedmetro {__version__}",
        f"# command: {command}",
        f"# seed: {config.seed}",
        f"# config: {json.dumps(config.as_dict(), sort_keys=True)}",
    ]


def render_csv(command: str, config: SweepConfig, header: str, rows: Iterable[Sequence]) -> str:
    lines = metadata_lines(command, config)
    lines.append(header)
    for row in rows:
        lines.append(",".join(format_value(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _json_safe(value: object) -> object:
    if isinstance(value, (float, np.floating)):
        value = float(value)
        # Infinity is not valid JSON; keep the same spelling the CSV uses.
        return value if value == value and abs(value) != float("inf") else "inf"
    if isinstance(value, (np.integer,)):
        return int(value)
    return value


def render_json(command: str, config: SweepConfig, header: str, rows: Iterable[Sequence]) -> str:
    columns = header.split(",")
    payload = {
        "tool": "mixedmetro",
        "version": __version__,
        "command": command,
        "seed": config.seed,
        "config": config.as_dict(),
        "rows": [
            {column: _json_safe(cell) for column, cell in zip(columns, row)}
            for row in rows
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def emit(
    command: str,
    config: SweepConfig,
    header: str,
    rows: list[Sequence],
    path: str | None,
) -> None:
    if config.output_format == "json":
        text = render_json(command, config, header, rows)
    else:
        text = render_csv(command, config, header, rows)
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_qfi(config: SweepConfig) -> int:
    config.validate()
    if config.spectral_max > SPECTRAL_HARD_CAP:
        raise ComputeLimitError(
            f"spectral cross-check capped at {SPECTRAL_HARD_CAP} qubits"
        )
    rows = []
    for strategy in config.strategies:
        for n in config.n_values:
            run_spectral = strategy.min_qubits <= n <= config.spectral_max
            for p in config.p_grid():
                closed = qfi_closed(strategy, n, p)
                spectral = None
                if run_spectral:
                    spectral = qfi_spectral(
                        hermitian_eigensystem(prepare_probe(strategy, n, p).matrix),
                        hamming_weights(n),
                    )
                rows.append(
                    (strategy.value, n, p, closed, spectral, phase_uncertainty(closed))
                )
    emit("qfi", config, QFI_HEADER, rows, config.output_path)
    return EXIT_OK


def cmd_correlations(config: SweepConfig) -> int:
    config.validate()
    for strategy in config.strategies:
        for n in config.n_values:
            if n < strategy.min_qubits:
                raise ConfigError(
                    f"strategy {strategy.value} needs at least "
                    f"{strategy.min_qubits} qubits, got {n}"
                )
    rows = []
    for strategy in config.strategies:
        for n in config.n_values:
            for p in config.p_grid():
                report = correlation_report(strategy, n, p)
                rows.append(
                    (
                        strategy.value,
                        n,
                        p,
                        report.discord_bits,
                        report.classical_bits,
                        report.total_bits,
                        report.entangled,
                        report.min_pt_eigenvalue,
                    )
                )
    emit("correlations", config, CORRELATIONS_HEADER, rows, config.output_path)
    return EXIT_OK


def _summary_path(path: str) -> str:
    return str(Path(path).with_suffix(".summary.csv"))


def cmd_discord_mc(config: SweepConfig) -> int:
    config.validate()
    if len(config.strategies) != 1 or config.strategies[0] not in (
        Strategy.Q1,
        Strategy.Q2,
    ):
        raise ConfigError("discord-mc needs exactly one strategy, Q1 or Q2")
    if len(config.n_values) != 1:
        raise ConfigError("discord-mc needs exactly one qubit count")
    grid = config.p_grid()
    if len(grid) != 1:
        raise ConfigError(
            "discord-mc samples a single mixedness point; "
            "set --p-steps 1 (or --p-min equal to --p-max)"
        )
    if config.output_format != "csv":
        raise ConfigError("discord-mc emits the pinned CSV sample format only")
    strategy, n, p = config.strategies[0], config.n_values[0], grid[0]
    if n > MC_MAX_QUBITS:
        raise ComputeLimitError(
            f"discord-mc diagonalizes 2^N matrices per trial; N is capped at {MC_MAX_QUBITS}"
        )

    result = discord_mc(strategy, n, p, config.trials, config.seed, config.workers)
    conjectured, upper = discord_mc_bounds(strategy, n, p)

    sample_rows = [(trial, s.value_bits) for trial, s in enumerate(result.samples)]
    summary_rows = [(result.min_bits, result.max_bits, conjectured, upper)]

    # Per-point context beyond the generic metadata, for downstream plotting.
    extra = [f"# strategy: {strategy.value}", f"# n: {n}", f"# p: {format_value(p)}"]

    def block(command: str, header: str, rows: list) -> str:
        lines = metadata_lines(command, config) + extra + [header]
        lines += [",".join(format_value(cell) for cell in row) for row in rows]
        return "\n".join(lines) + "\n"

    sample_text = block("discord-mc", MC_HEADER, sample_rows)
    summary_text = block("discord-mc-summary", MC_SUMMARY_HEADER, summary_rows)

    if config.output_path is None:
        sys.stdout.write(sample_text)
        sys.stdout.write(summary_text)
        return EXIT_OK

    Path(config.output_path).write_text(sample_text, encoding="utf-8")
    Path(_summary_path(config.output_path)).write_text(summary_text, encoding="utf-8")
    print(
        f"min={format_value(result.min_bits)} max={format_value(result.max_bits)} "
        f"conjectured={format_value(conjectured)} upper_bound={format_value(upper)}"
    )
    return EXIT_OK


def cmd_boundaries(config: SweepConfig) -> int:
    config.validate()
    for strategy in config.strategies:
        if strategy not in (Strategy.Q1, Strategy.Q2):
            raise ConfigError("boundaries are defined for Q1 and Q2 only")
    for n in config.n_values:
        if n < 2:
            raise ConfigError("boundaries need at least two qubits")
    rows = [
        (strategy.value, n, entanglement_boundary(strategy, n))
        for strategy in config.strategies
        for n in config.n_values
    ]
    emit("boundaries", config, BOUNDARIES_HEADER, rows, config.output_path)
    return EXIT_OK


def cmd_verify(level: str) -> int:
    code, lines = run_suite(level)
    print("\n".join(lines))
    return EXIT_OK if code == 0 else EXIT_CHECK_FAILED


def _parse_strategies(text: str) -> tuple[Strategy, ...]:
    names = [part for part in text.split(",") if part.strip()]
    if not names:
        raise argparse.ArgumentTypeError("empty strategy list")
    try:
        parsed = tuple(Strategy.parse(name) for name in names)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from err
    seen: list[Strategy] = []
    for strategy in parsed:
        if strategy not in seen:
            seen.append(strategy)
    return tuple(seen)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedmetro",
        description="Mixed-state phase estimation sweeps and cross-checks.",
    )
    parser.add_argument("--version", action="version", version=f"mixedmetro {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_sweep_flags(sub: argparse.ArgumentParser, default_strategies: str) -> None:
        sub.add_argument(
            "--strategies",
            type=_parse_strategies,
            default=_parse_strategies(default_strategies),
            help=f"comma-separated subset of S,Cl,Q1,Q2 (default {default_strategies})",
        )
        sub.add_argument("--n", type=int, nargs="+", default=[10], help="qubit counts")
        sub.add_argument("--p-min", type=float, default=0.0)
        sub.add_argument("--p-max", type=float, default=1.0)
        sub.add_argument("--p-steps", type=int, default=11, help="grid points, endpoints included")
        sub.add_argument("--seed", type=int, default=42)
        sub.add_argument("--trials", type=int, default=1000)
        sub.add_argument("--format", choices=("csv", "json"), default="csv")
        sub.add_argument("--out", default=None, help="output path (default stdout)")
        sub.add_argument("--workers", type=int, default=1)

    qfi = subparsers.add_parser("qfi", help="Fisher information sweep")
    add_sweep_flags(qfi, "S,Cl,Q1,Q2")
    qfi.add_argument(
        "--spectral-max",
        type=int,
        default=8,
        help="largest N for the spectral cross-check column",
    )

    corr = subparsers.add_parser("correlations", help="discord/classical/total sweep")
    add_sweep_flags(corr, "Cl,Q1,Q2")

    mc = subparsers.add_parser("discord-mc", help="Monte Carlo discord sampling")
    add_sweep_flags(mc, "Q1")

    bounds = subparsers.add_parser("boundaries", help="entanglement vanishing points")
    add_sweep_flags(bounds, "Q1,Q2")

    verify = subparsers.add_parser("verify", help="oracle and invariant suites")
    verify.add_argument("level", nargs="?", choices=("quick", "full"), default="quick")

    return parser


def _config_from_args(args: argparse.Namespace) -> SweepConfig:
    return SweepConfig(
        strategies=args.strategies,
        n_values=tuple(args.n),
        p_min=args.p_min,
        p_max=args.p_max,
        p_steps=args.p_steps,
        seed=args.seed,
        trials=args.trials,
        output_format=args.format,
        output_path=args.out,
        spectral_max=getattr(args, "spectral_max", 8),
        workers=args.workers,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args.level)
        config = _config_from_args(args)
        if args.command == "qfi":
            return cmd_qfi(config)
        if args.command == "correlations":
            return cmd_correlations(config)
        if args.command == "discord-mc":
            return cmd_discord_mc(config)
        if args.command == "boundaries":
            return cmd_boundaries(config)
    except ComputeLimitError as err:
        print(f"compute limit: {err}", file=sys.stderr)
        return EXIT_COMPUTE_LIMIT
    except ConfigError as err:
        print(f"configuration error: {err}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except ValueError as err:
        print(f"configuration error: {err}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    raise AssertionError(f"unhandled command {args.command!r}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
