"""End-to-end cross-checks behind the ``verify`` subcommand.

Every check pits an independent route against the supported one: circuits
against block matrices, the spectral Fisher functional against the closed
forms, brute-force partial transposition against the boundary expressions,
matrix-level dephasing entropies against the discord formulas.  A check
returns a list of failure descriptions; empty means pass.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .correlations import (
    PT_DEAD_ZONE,
    classical_correlations,
    conjectured_discord,
    discord_mc,
    discord_mc_bounds,
    entanglement_boundary,
    min_pt_eigenvalue_brute,
    min_pt_eigenvalue_closed,
    relative_entropy_to_dephased,
)
from .linalg import (
    ProductBasis,
    dephase,
    hamming_weights,
    hermitian_eigensystem,
    von_neumann_entropy,
)
from .probes import (
    MixednessParams,
    Strategy,
    closed_form_density,
    closed_form_eigensystem,
    prepare_probe,
)
from .correlations import random_product_basis
from .fisher import q1_leading_term, q2_leading_term, qfi_closed, qfi_spectral

ALL_STRATEGIES = (Strategy.S, Strategy.CL, Strategy.Q1, Strategy.Q2)
QUANTUM = (Strategy.Q1, Strategy.Q2)


@dataclass(frozen=True)
class VerifyParams:
    label: str
    max_qubits: int
    p_grid: tuple[float, ...]
    mc_trials: int
    mc_qubits: tuple[int, ...]


QUICK = VerifyParams(
    label="quick",
    max_qubits=4,
    p_grid=tuple(np.linspace(0.0, 1.0, 5)),
    mc_trials=100,
    mc_qubits=(2, 3),
)
FULL = VerifyParams(
    label="full",
    max_qubits=6,
    p_grid=tuple(np.linspace(0.0, 1.0, 21)),
    mc_trials=300,
    mc_qubits=(2, 3, 4, 5),
)


def _sizes(strategy: Strategy, params: VerifyParams) -> range:
    return range(strategy.min_qubits, params.max_qubits + 1)


def check_probe_forms_agree(params: VerifyParams) -> list[str]:
    failures = []
    for strategy in ALL_STRATEGIES:
        for n in _sizes(strategy, params):
            for p in params.p_grid:
                gap = np.abs(
                    prepare_probe(strategy, n, p).matrix
                    - closed_form_density(strategy, n, p).matrix
                ).max()
                if gap > 1e-10:
                    failures.append(
                        f"{strategy.value} N={n} p={p:.3f}: circuit/block gap {gap:.3e}"
                    )
    return failures


def check_probe_spectrum_preserved(params: VerifyParams) -> list[str]:
    failures = []
    for strategy in ALL_STRATEGIES:
        for n in _sizes(strategy, params):
            for p in params.p_grid:
                mix = MixednessParams.from_p(p)
                expected = np.sort(
                    np.concatenate(
                        [
                            np.full(
                                math.comb(n, m),
                                mix.lambda0 ** (n - m) * mix.lambda1**m,
                            )
                            for m in range(n + 1)
                        ]
                    )
                )
                actual = np.sort(
                    np.linalg.eigvalsh(prepare_probe(strategy, n, p).matrix)
                )
                gap = np.abs(actual - expected).max()
                if gap > 1e-9:
                    failures.append(
                        f"{strategy.value} N={n} p={p:.3f}: spectrum drift {gap:.3e}"
                    )
    return failures


def check_labeled_eigensystem_residuals(params: VerifyParams) -> list[str]:
    failures = []
    for strategy in ALL_STRATEGIES:
        for n in _sizes(strategy, params):
            for p in params.p_grid:
                probe = prepare_probe(strategy, n, p).matrix
                spectrum = closed_form_eigensystem(strategy, n, p)
                if abs(spectrum.total_weight() - 1.0) > 1e-10:
                    failures.append(
                        f"{strategy.value} N={n} p={p:.3f}: eigenvalue weights "
                        f"sum to {spectrum.total_weight()!r}"
                    )
                worst = 0.0
                for value, vector in spectrum.iter_pairs():
                    worst = max(
                        worst, float(np.linalg.norm(probe @ vector - value * vector))
                    )
                if worst > 1e-9:
                    failures.append(
                        f"{strategy.value} N={n} p={p:.3f}: eigenpair residual {worst:.3e}"
                    )
    return failures


def check_fisher_oracle_equivalence(params: VerifyParams) -> list[str]:
    failures = []
    for strategy in ALL_STRATEGIES:
        for n in _sizes(strategy, params):
            for p in params.p_grid:
                closed = qfi_closed(strategy, n, p)
                spectral = qfi_spectral(
                    hermitian_eigensystem(prepare_probe(strategy, n, p).matrix),
                    hamming_weights(n),
                )
                if abs(spectral - closed) > 1e-7 * max(1.0, abs(closed)):
                    failures.append(
                        f"fisher oracle mismatch for {strategy.value} N={n} "
                        f"p={p:.3f}: spectral={spectral!r} closed={closed!r}"
                    )
    return failures


def check_fisher_pure_limits(params: VerifyParams) -> list[str]:
    failures = []
    for n in range(2, 11):
        expected = {
            Strategy.S: float(n),
            Strategy.CL: float(n),
            Strategy.Q1: float(n * n),
            Strategy.Q2: float(n * n),
        }
        for strategy, target in expected.items():
            value = qfi_closed(strategy, n, 1.0)
            if abs(value - target) > 1e-9:
                failures.append(
                    f"{strategy.value} N={n} p=1: closed form {value!r} != {target}"
                )
    return failures


def check_q2_lower_bound(params: VerifyParams) -> list[str]:
    failures = []
    for n in range(2, 13):
        for p in np.linspace(0.0, 1.0, 101):
            value = qfi_closed(Strategy.Q2, n, p)
            if value < n * n * p * p - 1e-9:
                failures.append(
                    f"Q2 N={n} p={p:.3f}: closed form {value!r} below N^2 p^2"
                )
    return failures


def check_leading_term_bounds(params: VerifyParams) -> list[str]:
    failures = []
    for n in range(2, params.max_qubits + 1):
        for p in params.p_grid:
            q1 = q1_leading_term(n, p)
            q2 = q2_leading_term(n, p)
            full = qfi_closed(Strategy.Q2, n, p)
            if q1 > q2 + 1e-12:
                failures.append(f"N={n} p={p:.3f}: Q1 leading {q1!r} above Q2 {q2!r}")
            if q2 > full + 1e-9:
                failures.append(f"N={n} p={p:.3f}: leading term {q2!r} above F_Q2 {full!r}")
    return failures


def check_ppt_sign_agreement(params: VerifyParams) -> list[str]:
    failures = []
    for strategy in QUANTUM:
        for n in range(2, params.max_qubits + 1):
            boundary = entanglement_boundary(strategy, n)
            for p in params.p_grid:
                if abs(p - boundary) <= 1e-3:
                    continue
                closed = min_pt_eigenvalue_closed(strategy, n, p)
                brute = min_pt_eigenvalue_brute(prepare_probe(strategy, n, p))
                closed_neg = closed < -PT_DEAD_ZONE
                brute_neg = brute < -PT_DEAD_ZONE
                if closed_neg != brute_neg:
                    failures.append(
                        f"{strategy.value} N={n} p={p:.3f}: closed {closed!r} vs "
                        f"brute {brute!r} disagree on sign"
                    )
    return failures


def check_entanglement_boundaries(params: VerifyParams) -> list[str]:
    failures = []
    cases = [
        (Strategy.Q1, 2, math.sqrt(2.0) - 1.0, 1e-5),
        (Strategy.Q1, 10, 0.118, 1e-3),
        (Strategy.Q2, 10, 0.088, 1e-3),
    ]
    for strategy, n, target, tol in cases:
        value = entanglement_boundary(strategy, n)
        if abs(value - target) > tol:
            failures.append(
                f"{strategy.value} N={n}: boundary {value!r} not within {tol} of {target}"
            )
    return failures


def check_discord_dephasing_agreement(params: VerifyParams) -> list[str]:
    failures = []
    for strategy in QUANTUM:
        for n in range(2, params.max_qubits + 1):
            for p in params.p_grid:
                probe = closed_form_density(strategy, n, p)
                chi = dephase(probe, ProductBasis.computational(n))
                matrix_route = von_neumann_entropy(chi) - von_neumann_entropy(probe)
                formula = conjectured_discord(strategy, n, p)
                if abs(matrix_route - formula) > 1e-9:
                    failures.append(
                        f"{strategy.value} N={n} p={p:.3f}: dephasing entropy "
                        f"{matrix_route!r} vs formula {formula!r}"
                    )
    return failures


def check_correlation_identities(params: VerifyParams) -> list[str]:
    failures = []
    reference_discord = None
    for n in range(2, 9):
        for p in params.p_grid:
            mix = MixednessParams.from_p(p)
            total_target = n * (1.0 - mix.entropy_bits)
            d_q1 = conjectured_discord(Strategy.Q1, n, p)
            d_q2 = conjectured_discord(Strategy.Q2, n, p)
            c_q1 = classical_correlations(Strategy.Q1, n, p)
            c_q2 = classical_correlations(Strategy.Q2, n, p)
            c_cl = classical_correlations(Strategy.CL, n, p)
            if abs((d_q1 + c_q1) - total_target) > 1e-9:
                failures.append(f"N={n} p={p:.3f}: T_Q1 off N[1-S]")
            if abs((d_q2 + c_q2) - total_target) > 1e-9:
                failures.append(f"N={n} p={p:.3f}: T_Q2 off N[1-S]")
            if abs((c_q2 + d_q2) - total_target) > 1e-12:
                failures.append(f"N={n} p={p:.3f}: C_Q2 + D_Q2 identity broken")
            if min(c_q1, c_q2, c_cl) < -1e-10:
                failures.append(f"N={n} p={p:.3f}: negative classical correlations")
        if reference_discord is None:
            reference_discord = [conjectured_discord(Strategy.Q1, n, p) for p in params.p_grid]
        else:
            drift = max(
                abs(conjectured_discord(Strategy.Q1, n, p) - ref)
                for p, ref in zip(params.p_grid, reference_discord)
            )
            if drift > 1e-12:
                failures.append(f"N={n}: D_Q1 depends on N (drift {drift:.3e})")
    return failures


def check_relative_entropy_shortcut(params: VerifyParams) -> list[str]:
    failures = []
    for strategy in QUANTUM:
        for n in range(2, min(params.max_qubits, 5) + 1):
            probe = closed_form_density(strategy, n, 0.6)
            for trial in range(1, 6):
                basis = random_product_basis(n, seed=7, trial=trial)
                direct = von_neumann_entropy(dephase(probe, basis)) - von_neumann_entropy(
                    probe
                )
                shortcut = relative_entropy_to_dephased(probe, basis)
                if abs(direct - shortcut) > 1e-8:
                    failures.append(
                        f"{strategy.value} N={n} trial={trial}: relative entropy "
                        f"{shortcut!r} vs entropy gap {direct!r}"
                    )
    return failures


def check_discord_mc_sandwich(params: VerifyParams) -> list[str]:
    # The strict lower line is asserted for Q1 only: for Q2 the all-Hadamard
    # product basis dephases to (N-1)[1-S(rho)] bits, which undercuts the
    # computational-basis value at small N and p, and random bases land in
    # that basin.  For Q2 the sound checks are the upper line, entropy
    # monotonicity, and the pinned trial-0 identity.
    failures = []
    for strategy in QUANTUM:
        for n in params.mc_qubits:
            for p in (0.2, 0.5, 0.8):
                conjectured, upper = discord_mc_bounds(strategy, n, p)
                result = discord_mc(strategy, n, p, trials=params.mc_trials, seed=42)
                if strategy is Strategy.Q1 and result.min_bits < conjectured - 1e-9:
                    failures.append(
                        f"{strategy.value} N={n} p={p}: sample {result.min_bits!r} "
                        f"below conjectured discord {conjectured!r}"
                    )
                if result.min_bits < -1e-10:
                    failures.append(
                        f"{strategy.value} N={n} p={p}: dephasing lowered entropy "
                        f"({result.min_bits!r})"
                    )
                if abs(result.samples[0].value_bits - conjectured) > 1e-9:
                    failures.append(
                        f"{strategy.value} N={n} p={p}: trial 0 gap "
                        f"{result.samples[0].value_bits - conjectured!r}"
                    )
                if result.max_bits > upper + 1e-9:
                    failures.append(
                        f"{strategy.value} N={n} p={p}: sample {result.max_bits!r} "
                        f"above bound {upper!r}"
                    )
    return failures


CHECKS: tuple[tuple[str, Callable[[VerifyParams], list[str]]], ...] = (
    ("probe-forms-agree", check_probe_forms_agree),
    ("probe-spectrum-preserved", check_probe_spectrum_preserved),
    ("labeled-eigensystem-residuals", check_labeled_eigensystem_residuals),
    ("fisher-oracle-equivalence", check_fisher_oracle_equivalence),
    ("fisher-pure-limits", check_fisher_pure_limits),
    ("fisher-q2-lower-bound", check_q2_lower_bound),
    ("fisher-leading-terms", check_leading_term_bounds),
    ("ppt-sign-agreement", check_ppt_sign_agreement),
    ("entanglement-boundaries", check_entanglement_boundaries),
    ("discord-dephasing-agreement", check_discord_dephasing_agreement),
    ("correlation-identities", check_correlation_identities),
    ("relative-entropy-shortcut", check_relative_entropy_shortcut),
    ("discord-mc-sandwich", check_discord_mc_sandwich),
)


def run_suite(level: str) -> tuple[int, list[str]]:
    """Run every check at the requested level.

    Returns (exit_code, report_lines); exit code 0 means all checks passed,
    1 means at least one failed and the first ten failures are listed.
    """
    if level == "quick":
        params = QUICK
    elif level == "full":
        params = FULL
    else:
        raise ValueError(f"unknown verify level {level!r}")

    lines = [f"verification level: {params.label}"]
    all_failures: list[str] = []
    for name, check in CHECKS:
        started = time.perf_counter()
        failures = check(params)
        elapsed = time.perf_counter() - started
        status = "PASS" if not failures else f"FAIL ({len(failures)} findings)"
        lines.append(f"[{status:>4}] {name} ({elapsed:.2f}s)")
        all_failures.extend(f"{name}: {f}" for f in failures)
    if all_failures:
        lines.append("")
        lines.append(f"{len(all_failures)} failure(s); first 10:")
        lines.extend(f"  - {f}" for f in all_failures[:10])
        return 1, lines
    lines.append("all checks passed")
    return 0, lines
