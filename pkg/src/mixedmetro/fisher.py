"""Quantum Fisher information for the four probe families.

The spectral functional is the brute-force oracle; the per-strategy closed
forms are the supported fast path.  They must agree, and the ``verify``
command re-checks that agreement on demand.

For very small mixedness (p below roughly 1e-4) the spectral route loses
accuracy to cancellation between nearly equal eigenvalues; the closed forms
remain exact there and are the recommended path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import EigenSystem
from .probes import MixednessParams, Strategy

# Pairs whose eigenvalue sum is below this floor carry no weight in the
# spectral functional and are skipped to avoid 0/0.
PAIR_FLOOR = 1e-14
# Individual power products below this are dropped from the stable sums.
TERM_FLOOR = 1e-300


@dataclass(frozen=True)
class QfiResult:
    """Fisher information and the matching phase-uncertainty bound."""

    strategy: Strategy
    num_qubits: int
    p: float
    fisher: float
    phase_uncertainty: float


def qfi_spectral(eigensystem: EigenSystem, generator_diagonal: np.ndarray) -> float:
    """Evaluate 4 sum_{j>k} (eta_j - eta_k)^2 / (eta_j + eta_k) |<j|G|k>|^2.

    Parameters
    ----------
    eigensystem : EigenSystem
        Spectral decomposition of the probe state.
    generator_diagonal : ndarray
        Diagonal of the phase generator (Hamming weights of basis indices).

    Degenerate pairs contribute zero automatically; pairs whose eigenvalue
    sum is below ``PAIR_FLOOR`` are skipped outright.
    """
    generator_diagonal = np.asarray(generator_diagonal, dtype=float)
    eta = eigensystem.eigenvalues
    if len(generator_diagonal) != len(eta):
        raise ValueError("generator dimension does not match the eigensystem")
    vectors = eigensystem.eigenvectors
    overlap = vectors.conj().T @ (generator_diagonal[:, None] * vectors)
    sums = eta[:, None] + eta[None, :]
    diffs = eta[:, None] - eta[None, :]
    weights = np.zeros_like(sums)
    live = sums > PAIR_FLOOR
    weights[live] = diffs[live] ** 2 / sums[live]
    # 4 * sum over j>k equals 2 * the full off-diagonal sum by symmetry.
    return float(2.0 * np.sum(weights * np.abs(overlap) ** 2))


def qfi_closed(strategy: Strategy, num_qubits: int, p: float) -> float:
    """Closed-form Fisher information per strategy.

    ``S`` gives N p^2; ``Q1`` a quartic polynomial in p; ``Cl`` and ``Q2``
    binomial sums over eigenvalue pairs, evaluated in a harmonic form that
    stays finite when individual populations underflow.  All four reduce to
    the pure-state values N (S, Cl) and N^2 (Q1, Q2) at p = 1.

    The closed forms are well defined down to a single qubit even for the
    correlated strategies (where they all collapse to p^2), unlike the
    circuit constructions which need a C-Not target.
    """
    if num_qubits < 1:
        raise ValueError("num_qubits must be positive")
    mix = MixednessParams.from_p(p)
    n = num_qubits
    if strategy is Strategy.S:
        return n * p * p
    if strategy is Strategy.Q1:
        return n * p * p + 2.0 * (n - 1) * p**3 + (n * n - 3 * n + 2) * p**4
    l0, l1 = mix.lambda0, mix.lambda1
    if strategy is Strategy.CL:
        subtracted = 0.0
        for m in range(n):
            a = l0**m * l1 ** (n - m)
            b = l0 ** (n - m) * l1**m
            if a + b > TERM_FLOOR:
                subtracted += math.comb(n - 1, m) * 4.0 * a * b / (a + b)
        return n * p * p + 1.0 - p * p - subtracted
    if strategy is Strategy.Q2:
        total = 0.0
        for m in range(n):
            a = l0**m * l1 ** (n - m)
            b = l0 ** (n - m) * l1**m
            if a + b > TERM_FLOOR:
                total += math.comb(n - 1, m) * (n - 2 * m) ** 2 * (b - a) ** 2 / (b + a)
        return total
    raise ValueError(f"unknown strategy {strategy!r}")


def qfi_cl_approx(num_qubits: int, p: float) -> float:
    """Numerical approximation N p^2 + 1 - p^2 - exp(-N p^2) for ``Cl``.

    Exposed read-only for comparison; the exact sum in :func:`qfi_closed` is
    the supported path.
    """
    if num_qubits < 2:
        raise ValueError("the classical strategy needs at least two qubits")
    MixednessParams.from_p(p)
    return num_qubits * p * p + 1.0 - p * p - math.exp(-num_qubits * p * p)


def phase_uncertainty(fisher: float) -> float:
    """Lower bound 1/sqrt(F) on the phase uncertainty; +inf when F = 0."""
    if fisher < 0.0:
        raise ValueError(f"Fisher information must be non-negative, got {fisher}")
    if fisher == 0.0:
        return math.inf
    return 1.0 / math.sqrt(fisher)


def qfi_result(strategy: Strategy, num_qubits: int, p: float) -> QfiResult:
    """Closed-form Fisher information bundled with its uncertainty bound."""
    fisher = qfi_closed(strategy, num_qubits, p)
    return QfiResult(strategy, num_qubits, p, fisher, phase_uncertainty(fisher))


def quantum_advantage(num_qubits: int, p: float) -> float:
    """sqrt(F_Q2 / F_S): the uncertainty improvement of Q2 over S."""
    if num_qubits < 2:
        raise ValueError("quantum advantage needs at least two qubits")
    if p <= 0.0:
        raise ValueError("advantage is undefined at p = 0 (both informations vanish)")
    return math.sqrt(
        qfi_closed(Strategy.Q2, num_qubits, p) / qfi_closed(Strategy.S, num_qubits, p)
    )


def classical_q1_crossing(
    num_qubits: int, tol: float = 1e-10, scan_points: int = 4096
) -> float:
    """Largest p where the Cl and Q1 Fisher informations cross.

    Below the crossing the classical strategy carries more information, above
    it Q1 does; the crossing sits near 1/sqrt(N).  Found by a grid scan for
    the last sign change followed by bisection (robust, derivative-free).
    """
    if num_qubits < 3:
        raise ValueError(
            "crossing defined for three or more qubits; below that the curves "
            "intersect inside the entangled region and the comparison changes"
        )

    def gap(p: float) -> float:
        return qfi_closed(Strategy.CL, num_qubits, p) - qfi_closed(
            Strategy.Q1, num_qubits, p
        )

    grid = np.linspace(1e-6, 1.0, scan_points)
    values = [gap(p) for p in grid]
    bracket = None
    for i in range(len(grid) - 1):
        if values[i] > 0.0 >= values[i + 1] or values[i] < 0.0 <= values[i + 1]:
            bracket = (grid[i], grid[i + 1])
    if bracket is None:
        raise ValueError(f"no sign change of F_Cl - F_Q1 found for N={num_qubits}")
    lo, hi = bracket
    flo = gap(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = gap(mid)
        if (flo > 0.0) == (fmid > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def q2_leading_term(num_qubits: int, p: float) -> float:
    """Contribution of the extreme eigenvalue pair to F_Q2; a lower bound."""
    if num_qubits < 2:
        raise ValueError("leading term defined for two or more qubits")
    mix = MixednessParams.from_p(p)
    big = mix.lambda0**num_qubits
    small = mix.lambda1**num_qubits
    if big + small <= TERM_FLOOR:
        return 0.0
    return (big - small) ** 2 / (big + small) * num_qubits**2


def q1_leading_term(num_qubits: int, p: float) -> float:
    """Same pair contribution for Q1, where the partner population is only
    one excitation away; never exceeds the Q2 leading term for 0 < p < 1."""
    if num_qubits < 2:
        raise ValueError("leading term defined for two or more qubits")
    mix = MixednessParams.from_p(p)
    big = mix.lambda0**num_qubits
    partner = mix.lambda0 ** (num_qubits - 1) * mix.lambda1
    if big + partner <= TERM_FLOOR:
        return 0.0
    return (big - partner) ** 2 / (big + partner) * num_qubits**2
