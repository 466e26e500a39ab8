"""Entanglement boundaries, discord, and classical correlations of the probes.

Entanglement is decided by partial transposition, which is conclusive for
these GHZ-diagonal states: positivity under every bipartite transposition is
both necessary and sufficient for separability.  A closed-form expression for
the most negative transposed eigenvalue is paired with a brute-force scan
over all bipartitions as its oracle.

Discord here is the relative-entropy variant: distance from the state to its
dephasing in the best locally orthonormal product basis.  The computational
basis is the conjectured minimizer for Q1 and Q2; Monte Carlo sampling over
Haar-random product bases brackets the conjecture from above.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DensityOperator,
    ProductBasis,
    binary_h,
    dephase,
    dephased_probabilities,
    partial_transpose,
    shannon_bits,
    von_neumann_entropy,
)
from .probes import MixednessParams, Strategy, closed_form_density

# Transposed eigenvalues within this dead zone of zero count as separable.
PT_DEAD_ZONE = 1e-10
# Brute-force partial transposition enumerates 2^(N-1) - 1 bipartitions.
BRUTE_PT_MAX_QUBITS = 8
# Monte Carlo discord sampling diagonalizes a 2^N matrix per trial.
MC_MAX_QUBITS = 6

_QUANTUM = (Strategy.Q1, Strategy.Q2)


@dataclass(frozen=True)
class CorrelationReport:
    """Discord, classical and total correlations plus entanglement status."""

    strategy: Strategy
    num_qubits: int
    p: float
    discord_bits: float
    classical_bits: float
    total_bits: float
    entangled: bool
    min_pt_eigenvalue: float


@dataclass(frozen=True)
class McDiscordSample:
    """One dephasing sample: the run seed, the basis, and S(chi) - S(rho)."""

    seed: int
    basis: ProductBasis
    value_bits: float


@dataclass(frozen=True)
class DiscordMcResult:
    samples: tuple[McDiscordSample, ...]
    min_bits: float
    max_bits: float


def _require_quantum(strategy: Strategy) -> None:
    if strategy not in _QUANTUM:
        raise ValueError(f"strategy {strategy.value} has no entanglement content")


def min_pt_eigenvalue_closed(strategy: Strategy, num_qubits: int, p: float) -> float:
    """Most negative partial-transpose eigenvalue, in closed form.

    Returned on a scale of twice the actual eigenvalue (the overall factor
    does not move the zero crossing, which is what the boundary solver and
    the sign test consume).  Negative means entangled.

    For Q2 the extreme transposed block pairs the corner coherence
    lambda0^N - lambda1^N against the two smallest diagonal populations,
    whose weights sit at half-filling; both cross terms are kept so that odd
    qubit counts match the brute-force scan exactly, not just even ones.
    """
    _require_quantum(strategy)
    if num_qubits < 2:
        raise ValueError("entanglement test needs at least two qubits")
    mix = MixednessParams.from_p(p)
    l0, l1 = mix.lambda0, mix.lambda1
    n = num_qubits
    if strategy is Strategy.Q1:
        return l1 ** (n - 1) - p * l0 ** (n - 1)
    lower = n // 2
    upper = n - lower
    return l0**upper * l1**lower + l0**lower * l1**upper - l0**n + l1**n


def entanglement_boundary(strategy: Strategy, num_qubits: int, tol: float = 1e-10) -> float:
    """Mixedness p* where the probe stops being separable.

    Bisection root of the closed-form transposed eigenvalue on (0, 1); the
    state is separable for p <= p* and entangled above.
    """
    _require_quantum(strategy)
    lo, hi = 0.0, 1.0
    value_lo = min_pt_eigenvalue_closed(strategy, num_qubits, lo)
    if value_lo <= 0.0:
        raise ValueError("expected a separable state in the fully mixed limit")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if min_pt_eigenvalue_closed(strategy, num_qubits, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def min_pt_eigenvalue_brute(rho: DensityOperator) -> float:
    """Smallest eigenvalue over every nontrivial bipartite transposition.

    Cost grows as 2^(N-1) eigendecompositions of 2^N matrices, so the scan is
    capped at ``BRUTE_PT_MAX_QUBITS``.
    """
    n = rho.num_qubits
    if n < 2:
        raise ValueError("bipartitions need at least two qubits")
    if n > BRUTE_PT_MAX_QUBITS:
        raise ValueError(
            f"brute-force transposition capped at {BRUTE_PT_MAX_QUBITS} qubits"
        )
    # Fixing qubit 1 outside the transposed set halves the enumeration:
    # transposing a set or its complement gives the same spectrum.
    smallest = math.inf
    others = list(range(2, n + 1))
    for mask in range(1, 1 << (n - 1)):
        subset = [others[i] for i in range(n - 1) if (mask >> i) & 1]
        transposed = partial_transpose(rho, subset)
        smallest = min(smallest, float(np.linalg.eigvalsh(transposed)[0]))
    return smallest


def closest_classical_state(
    strategy: Strategy, num_qubits: int, p: float
) -> DensityOperator:
    """Computational-basis dephasing of the probe: the conjectured nearest
    zero-discord state for both quantum strategies."""
    _require_quantum(strategy)
    probe = closed_form_density(strategy, num_qubits, p)
    return dephase(probe, ProductBasis.computational(num_qubits))


def conjectured_discord(strategy: Strategy, num_qubits: int, p: float) -> float:
    """Relative-entropy discord under the computational-basis conjecture.

    Q1 gives 1 - S(rho) independently of the register size.  Q2 sums the
    dephased pair populations (lambda0^(N-m) lambda1^m + lambda0^m
    lambda1^(N-m))/2 with binomial weight C(N-1, m) over m = 0..N-1; that
    weighting makes the pure limit come out at exactly one bit.
    """
    _require_quantum(strategy)
    if num_qubits < 2:
        raise ValueError("discord formulas need at least two qubits")
    mix = MixednessParams.from_p(p)
    if strategy is Strategy.Q1:
        return 1.0 - mix.entropy_bits
    l0, l1 = mix.lambda0, mix.lambda1
    n = num_qubits
    total = 0.0
    for m in range(n):
        pair = (l0 ** (n - m) * l1**m + l0**m * l1 ** (n - m)) / 2.0
        total += 2.0 * math.comb(n - 1, m) * binary_h(pair)
    return total - n * mix.entropy_bits


def haar_qubit_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed 2x2 unitary: QR of a complex Gaussian matrix with the
    column phases fixed by the sign of R's diagonal."""
    ginibre = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
    ginibre /= math.sqrt(2.0)
    q, r = np.linalg.qr(ginibre)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))[None, :]


def random_product_basis(num_qubits: int, seed: int, trial: int) -> ProductBasis:
    """Product basis with independent Haar local unitaries, keyed by
    (seed, trial, qubit) so any execution order reproduces the same basis."""
    unitaries = tuple(
        haar_qubit_unitary(np.random.default_rng((seed, trial, qubit)))
        for qubit in range(1, num_qubits + 1)
    )
    return ProductBasis(num_qubits, unitaries)


def _trial_basis(num_qubits: int, seed: int, trial: int) -> ProductBasis:
    # Trial 0 always probes the conjectured minimizer itself.
    if trial == 0:
        return ProductBasis.computational(num_qubits)
    return random_product_basis(num_qubits, seed, trial)


def _mc_chunk(args: tuple) -> list[tuple[int, float, tuple]]:
    strategy_value, num_qubits, p, seed, start, stop = args
    strategy = Strategy(strategy_value)
    rho = closed_form_density(strategy, num_qubits, p)
    base_entropy = von_neumann_entropy(rho)
    out = []
    for trial in range(start, stop):
        basis = _trial_basis(num_qubits, seed, trial)
        value = shannon_bits(dephased_probabilities(rho, basis)) - base_entropy
        out.append((trial, value, tuple(np.asarray(u) for u in basis.local_unitaries)))
    return out


def discord_mc(
    strategy: Strategy,
    num_qubits: int,
    p: float,
    trials: int,
    seed: int,
    workers: int = 1,
) -> DiscordMcResult:
    """Sample S(dephased) - S(rho) over random product bases.

    Parameters
    ----------
    strategy : Strategy
        Q1 or Q2.
    num_qubits : int
        Register size, at most ``MC_MAX_QUBITS``.
    p : float
        Mixedness parameter.
    trials : int
        Number of samples; trial 0 is pinned to the computational basis.
    seed : int
        Base key for the per-(trial, qubit) random streams.
    workers : int
        Process count for the trial loop.  Results are identical for any
        worker count because every sample is keyed, not drawn sequentially.
    """
    _require_quantum(strategy)
    if not 2 <= num_qubits <= MC_MAX_QUBITS:
        raise ValueError(
            f"Monte Carlo sampling supports 2..{MC_MAX_QUBITS} qubits, got {num_qubits}"
        )
    if trials < 1:
        raise ValueError("need at least one trial")
    if workers < 1:
        raise ValueError("need at least one worker")

    if workers == 1:
        chunks = [_mc_chunk((strategy.value, num_qubits, p, seed, 0, trials))]
    else:
        bounds = np.linspace(0, trials, workers + 1).astype(int)
        jobs = [
            (strategy.value, num_qubits, p, seed, int(lo), int(hi))
            for lo, hi in zip(bounds[:-1], bounds[1:])
            if hi > lo
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_mc_chunk, jobs))

    records = sorted(
        (record for chunk in chunks for record in chunk), key=lambda r: r[0]
    )
    samples = tuple(
        McDiscordSample(seed, ProductBasis(num_qubits, unitaries), value)
        for _, value, unitaries in records
    )
    values = [s.value_bits for s in samples]
    return DiscordMcResult(samples, min(values), max(values))


def discord_mc_bounds(strategy: Strategy, num_qubits: int, p: float) -> tuple[float, float]:
    """(conjectured discord, largest possible sample) for a sampling run.

    The upper line is N - S(rho_probe) = N [1 - S(rho)]: a dephasing can at
    best reach the maximally mixed state.
    """
    mix = MixednessParams.from_p(p)
    conjectured = conjectured_discord(strategy, num_qubits, p)
    return conjectured, num_qubits * (1.0 - mix.entropy_bits)


def relative_entropy_to_dephased(rho: DensityOperator, basis: ProductBasis) -> float:
    """S(rho || chi) for chi the dephasing of rho in the given basis.

    Evaluated as -S(rho) - tr(rho log2 chi) in the dephasing eigenbasis,
    where chi's zero-probability outcomes coincide with rho's zero diagonal
    weight, so the 0 log 0 = 0 convention applies termwise.  Equals
    S(chi) - S(rho) identically; keeping both routes makes the shortcut
    testable.
    """
    probabilities = dephased_probabilities(rho, basis)
    cross = float(
        sum(weight * math.log2(weight) for weight in probabilities if weight > 0.0)
    )
    return -von_neumann_entropy(rho) - cross


def classical_correlations(strategy: Strategy, num_qubits: int, p: float) -> float:
    """Classical correlation content in bits.

    ``Cl``: (N-1) [h(lambda0^2 + lambda1^2) + h(2 lambda0 lambda1) - S(rho)];
    ``Q1``: (N-1) [1 - S(rho)];
    ``Q2``: N [1 - S(rho)] minus the Q2 discord.
    """
    if strategy is Strategy.S:
        raise ValueError("the standard strategy carries no correlations")
    if num_qubits < 2:
        raise ValueError("correlation formulas need at least two qubits")
    mix = MixednessParams.from_p(p)
    single = mix.entropy_bits
    n = num_qubits
    if strategy is Strategy.CL:
        l0, l1 = mix.lambda0, mix.lambda1
        return (n - 1) * (
            binary_h(l0 * l0 + l1 * l1) + binary_h(2.0 * l0 * l1) - single
        )
    if strategy is Strategy.Q1:
        return (n - 1) * (1.0 - single)
    return n * (1.0 - single) - conjectured_discord(Strategy.Q2, n, p)


def correlation_report(strategy: Strategy, num_qubits: int, p: float) -> CorrelationReport:
    """Assemble discord, classical and total correlations with the
    entanglement flag for one (strategy, N, p) point.

    The standard strategy reports zeros; the classical strategy has discord
    zero and is separable by construction, so no transposition is computed
    for either.  For Q1/Q2 the flag comes from the closed-form transposed
    eigenvalue with a +-``PT_DEAD_ZONE`` dead zone (exact zero counts as
    separable).
    """
    if strategy is Strategy.S:
        return CorrelationReport(strategy, num_qubits, p, 0.0, 0.0, 0.0, False, 0.0)
    if strategy is Strategy.CL:
        classical = classical_correlations(strategy, num_qubits, p)
        return CorrelationReport(
            strategy, num_qubits, p, 0.0, classical, classical, False, 0.0
        )
    discord = conjectured_discord(strategy, num_qubits, p)
    classical = classical_correlations(strategy, num_qubits, p)
    min_pt = min_pt_eigenvalue_closed(strategy, num_qubits, p)
    return CorrelationReport(
        strategy,
        num_qubits,
        p,
        discord,
        classical,
        discord + classical,
        bool(min_pt < -PT_DEAD_ZONE),
        min_pt,
    )
