"""Acceptance suite: one test per headline criterion, tolerances pinned.

Each test prints a single [PASS]/[FAIL] line (visible with ``pytest -s``;
``pytest -v`` shows the same verdict per test).  The Q2 half of the discord
sandwich is a strict expected failure: an explicit product basis undercuts
the conjectured Q2 discord at small registers, so the sampled lower line
cannot hold there; see TestQ2ConjectureCounterexample in
test_correlations.py for the constructive demonstration.
"""

import math
import time

import numpy as np
import pytest

from mixedmetro.cli import main
from mixedmetro.correlations import (
    classical_correlations,
    conjectured_discord,
    discord_mc,
    discord_mc_bounds,
    entanglement_boundary,
    min_pt_eigenvalue_brute,
    min_pt_eigenvalue_closed,
)
from mixedmetro.fisher import (
    classical_q1_crossing,
    qfi_cl_approx,
    qfi_closed,
    qfi_spectral,
    quantum_advantage,
)
from mixedmetro.linalg import hamming_weights, hermitian_eigensystem
from mixedmetro.probes import MixednessParams, Strategy, prepare_probe

ALL = (Strategy.S, Strategy.CL, Strategy.Q1, Strategy.Q2)
QUANTUM = (Strategy.Q1, Strategy.Q2)
P_GRID_21 = np.linspace(0.0, 1.0, 21)
PT_DEAD = 1e-10


def report(line: str) -> None:
    print(line)


def test_oracle_equivalence():
    """Spectral functional on prepared probes equals the closed forms."""
    started = time.perf_counter()
    worst = 0.0
    for strategy in ALL:
        sizes = range(1 if strategy is Strategy.S else 2, 7)
        for n in sizes:
            weights = hamming_weights(n)
            for p in P_GRID_21:
                closed = qfi_closed(strategy, n, p)
                spectral = qfi_spectral(
                    hermitian_eigensystem(prepare_probe(strategy, n, p).matrix),
                    weights,
                )
                gap = abs(spectral - closed) / max(1.0, abs(closed))
                worst = max(worst, gap)
                assert gap <= 1e-7, (strategy, n, p, spectral, closed)
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0, f"oracle sweep took {elapsed:.1f}s"
    report(f"[PASS] oracle equivalence (worst relative gap {worst:.2e}, {elapsed:.1f}s)")


def test_pure_state_limits():
    """At p=1 the closed forms hit N (S, Cl) and N^2 (Q1, Q2) exactly."""
    for n in range(2, 11):
        assert abs(qfi_closed(Strategy.S, n, 1.0) - n) <= 1e-9
        assert abs(qfi_closed(Strategy.CL, n, 1.0) - n) <= 1e-9
        assert abs(qfi_closed(Strategy.Q1, n, 1.0) - n * n) <= 1e-9
        assert abs(qfi_closed(Strategy.Q2, n, 1.0) - n * n) <= 1e-9
    report("[PASS] pure-state limits (N and N^2 at p=1, N=2..10)")


def test_q2_quadratic_lower_bound():
    """F_Q2 >= N^2 p^2 across the full grid."""
    worst = math.inf
    for n in range(2, 13):
        for p in np.linspace(0.0, 1.0, 101):
            slack = qfi_closed(Strategy.Q2, n, p) - n * n * p * p
            worst = min(worst, slack)
            assert slack >= -1e-9, (n, p, slack)
    report(f"[PASS] Q2 bound F >= N^2 p^2 (minimum slack {worst:.2e})")


def test_cl_approximation_quality():
    """The exponential shorthand stays within 0.1 of the exact Cl sum at N=10."""
    worst = max(
        abs(qfi_closed(Strategy.CL, 10, p) - qfi_cl_approx(10, p))
        for p in np.linspace(0.0, 1.0, 101)
    )
    assert worst <= 0.1
    report(f"[PASS] Cl approximation within 0.1 (max gap {worst:.4f})")


def test_entanglement_boundaries_and_ppt_agreement():
    """Ten-qubit boundaries land at the reference values; closed form and
    brute-force transposition agree in sign away from each boundary."""
    q1_star = entanglement_boundary(Strategy.Q1, 10)
    q2_star = entanglement_boundary(Strategy.Q2, 10)
    assert abs(q1_star - 0.118) <= 1e-3, q1_star
    assert abs(q2_star - 0.088) <= 1e-3, q2_star
    checked = 0
    for strategy in QUANTUM:
        for n in range(2, 7):
            star = entanglement_boundary(strategy, n)
            for p in P_GRID_21:
                if abs(p - star) <= 1e-3:
                    continue
                closed = min_pt_eigenvalue_closed(strategy, n, p)
                brute = min_pt_eigenvalue_brute(prepare_probe(strategy, n, p))
                assert (closed < -PT_DEAD) == (brute < -PT_DEAD), (strategy, n, p)
                checked += 1
    report(
        f"[PASS] entanglement boundaries ({q1_star:.4f}, {q2_star:.4f}) "
        f"and PPT sign agreement at {checked} points"
    )


def test_quantum_advantage_floor():
    """sqrt(F_Q2/F_S) never drops below sqrt(N) and equals it at p=1."""
    for n in range(2, 11):
        root = math.sqrt(n)
        for p in P_GRID_21:
            if p == 0.0:
                continue
            assert quantum_advantage(n, p) >= root - 1e-9, (n, p)
        assert abs(quantum_advantage(n, 1.0) - root) <= 1e-9
    report("[PASS] quantum advantage >= sqrt(N) with equality at p=1")


def test_classical_q1_crossing():
    """The Cl/Q1 crossover exists near 1/sqrt(N) and orders the curves."""
    star = classical_q1_crossing(10)
    assert 0.0 < star < 1.0
    ratio = star * math.sqrt(10.0)
    assert 0.5 <= ratio <= 2.0, star
    below, above = star - 1e-4, star + 1e-4
    assert qfi_closed(Strategy.CL, 10, below) > qfi_closed(Strategy.Q1, 10, below)
    assert qfi_closed(Strategy.Q1, 10, above) > qfi_closed(Strategy.CL, 10, above)
    report(f"[PASS] Cl/Q1 crossing at p*={star:.4f} (1/sqrt(10)={1/math.sqrt(10):.4f})")


def _sandwich_violations(strategy: Strategy) -> tuple[list[str], float]:
    started = time.perf_counter()
    violations = []
    for n in range(2, 6):
        for p in (0.2, 0.5, 0.8):
            conjectured, upper = discord_mc_bounds(strategy, n, p)
            result = discord_mc(strategy, n, p, trials=1000, seed=42)
            if result.min_bits < conjectured - 1e-9:
                violations.append(
                    f"{strategy.value} N={n} p={p}: sample {result.min_bits:.6f} "
                    f"below conjectured {conjectured:.6f}"
                )
            if result.max_bits > upper + 1e-9:
                violations.append(
                    f"{strategy.value} N={n} p={p}: sample {result.max_bits:.6f} "
                    f"above bound {upper:.6f}"
                )
    return violations, time.perf_counter() - started


def test_discord_sandwich_q1():
    """1000 seeded samples per point stay between the conjectured discord and
    N - S(rho_probe) for Q1."""
    violations, elapsed = _sandwich_violations(Strategy.Q1)
    assert elapsed < 300.0, f"sampling took {elapsed:.0f}s"
    assert not violations, violations
    report(f"[PASS] discord sandwich Q1 (12 points x 1000 samples, {elapsed:.1f}s)")


@pytest.mark.xfail(
    strict=True,
    reason=(
        "the conjectured Q2 discord is not the dephasing minimum: the "
        "all-Hadamard product basis reaches (N-1)[1-S(rho)] bits, below the "
        "computational-basis value for small N and p, and seeded random "
        "bases find that basin"
    ),
)
def test_discord_sandwich_q2():
    """Same sandwich for Q2; fails by construction at small registers."""
    violations, elapsed = _sandwich_violations(Strategy.Q2)
    assert elapsed < 300.0, f"sampling took {elapsed:.0f}s"
    if violations:
        report(f"[FAIL] discord sandwich Q2: {len(violations)} dips below the line")
        for line in violations:
            report("   " + line)
    assert not violations, violations


def test_correlation_identities():
    """Total correlations agree between Q1 and Q2 and match N[1-S]; Q1
    discord ignores N; the Q2 split is exact."""
    for n in range(2, 9):
        for p in P_GRID_21:
            mix = MixednessParams.from_p(p)
            total = n * (1.0 - mix.entropy_bits)
            d_q1 = conjectured_discord(Strategy.Q1, n, p)
            d_q2 = conjectured_discord(Strategy.Q2, n, p)
            c_q1 = classical_correlations(Strategy.Q1, n, p)
            c_q2 = classical_correlations(Strategy.Q2, n, p)
            assert abs(d_q1 + c_q1 - total) <= 1e-9, (n, p)
            assert abs(d_q2 + c_q2 - total) <= 1e-9, (n, p)
            assert abs(c_q2 + d_q2 - total) <= 1e-12, (n, p)
            assert abs(d_q1 - conjectured_discord(Strategy.Q1, 2, p)) <= 1e-12, (n, p)
    report("[PASS] correlation identities (totals, N-independence, exact split)")


def test_mc_determinism(tmp_path):
    """Identical seed and sweep parameters give byte-identical sample and
    summary files, for repeated runs and for any worker count."""
    def run(name: str, workers: str) -> tuple[bytes, bytes]:
        out = tmp_path / name
        code = main([
            "discord-mc", "--strategies", "Q2", "--n", "5",
            "--p-min", "0.3", "--p-max", "0.3", "--p-steps", "1",
            "--trials", "400", "--seed", "20240817", "--workers", workers,
            "--out", str(out),
        ])
        assert code == 0
        return out.read_bytes(), out.with_suffix(".summary.csv").read_bytes()

    first = run("run1.csv", "1")
    second = run("run2.csv", "1")
    fanned = run("run3.csv", "4")
    assert first == second
    assert first == fanned
    report("[PASS] discord-mc determinism across runs and worker counts")
