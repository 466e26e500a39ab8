"""The four probe-state families built from partially mixed qubits.

Each family exists in three interchangeable representations: the gate-level
circuit, the assembled block matrix, and the labeled closed-form eigensystem.
Any two of them can validate the third, which is how the test suite and the
``verify`` command use them.

Strategies:

* ``S``   - Hadamard on every qubit; uncorrelated product probe.
* ``Cl``  - C-Nots from qubit 1, then Hadamards; classically correlated.
* ``Q1``  - Hadamard on qubit 1, then C-Nots; GHZ-diagonal.
* ``Q2``  - C-Nots, Hadamard on qubit 1, C-Nots again; GHZ-diagonal with the
            small populations paired against the large ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Literal

import numpy as np

from .linalg import (
    HADAMARD,
    PAULI_X,
    DensityOperator,
    apply_unitary,
    binary_h,
    gate_cnot,
    gate_hadamard_all,
    gate_hadamard_on,
    kron_all,
)


class Strategy(str, Enum):
    S = "S"
    CL = "Cl"
    Q1 = "Q1"
    Q2 = "Q2"

    @classmethod
    def parse(cls, text: str) -> "Strategy":
        for member in cls:
            if member.value.lower() == text.strip().lower():
                return member
        raise ValueError(f"unknown strategy {text!r}; expected one of S, Cl, Q1, Q2")

    @property
    def min_qubits(self) -> int:
        # The correlated strategies need a C-Not target, so one qubit is not
        # enough; rejecting beats silently degrading to the standard circuit.
        return 1 if self is Strategy.S else 2


@dataclass(frozen=True)
class MixednessParams:
    """Initial-qubit populations lambda0 = (1+p)/2 and lambda1 = 1 - lambda0."""

    p: float
    lambda0: float
    lambda1: float

    @classmethod
    def from_p(cls, p: float) -> "MixednessParams":
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"mixedness parameter {p} outside [0, 1]")
        lambda0 = (1.0 + p) / 2.0
        return cls(p=float(p), lambda0=lambda0, lambda1=1.0 - lambda0)

    @property
    def entropy_bits(self) -> float:
        """von Neumann entropy of the single-qubit state, in bits."""
        return binary_h(self.lambda0) + binary_h(self.lambda1)


def initial_qubit(p: float) -> DensityOperator:
    """Single-qubit state diag((1+p)/2, (1-p)/2)."""
    mix = MixednessParams.from_p(p)
    return DensityOperator(1, np.diag([mix.lambda0, mix.lambda1]).astype(complex))


def _check_strategy_size(strategy: Strategy, num_qubits: int) -> None:
    if num_qubits < strategy.min_qubits:
        raise ValueError(
            f"strategy {strategy.value} needs at least "
            f"{strategy.min_qubits} qubit(s), got {num_qubits}"
        )


def _entangler(num_qubits: int) -> np.ndarray:
    """Product of C-Nots from qubit 1 to every other qubit (they commute)."""
    gate = np.eye(1 << num_qubits, dtype=complex)
    for target in range(2, num_qubits + 1):
        gate = gate_cnot(num_qubits, 1, target) @ gate
    return gate


def preparation_unitary(strategy: Strategy, num_qubits: int) -> np.ndarray:
    """Full preparation circuit for a strategy as a single 2^N unitary."""
    _check_strategy_size(strategy, num_qubits)
    if strategy is Strategy.S:
        return gate_hadamard_all(num_qubits)
    entangler = _entangler(num_qubits)
    if strategy is Strategy.CL:
        return gate_hadamard_all(num_qubits) @ entangler
    h_first = gate_hadamard_on(num_qubits, 1)
    if strategy is Strategy.Q1:
        return entangler @ h_first
    return entangler @ h_first @ entangler


def prepare_probe(strategy: Strategy, num_qubits: int, p: float) -> DensityOperator:
    """Run the preparation circuit on the uncorrelated initial register."""
    mix = MixednessParams.from_p(p)
    single = np.diag([mix.lambda0, mix.lambda1]).astype(complex)
    register = DensityOperator(num_qubits, kron_all([single] * num_qubits))
    return apply_unitary(register, preparation_unitary(strategy, num_qubits))


def closed_form_density(strategy: Strategy, num_qubits: int, p: float) -> DensityOperator:
    """Assemble the probe directly from its block-matrix form.

    No circuit is applied; this is the independent construction the gate-level
    path is checked against.
    """
    _check_strategy_size(strategy, num_qubits)
    mix = MixednessParams.from_p(p)
    rho = np.diag([mix.lambda0, mix.lambda1]).astype(complex)
    h_rho_h = HADAMARD @ rho @ HADAMARD
    if strategy is Strategy.S:
        return DensityOperator(num_qubits, kron_all([h_rho_h] * num_qubits))

    rest = num_qubits - 1
    flipped = PAULI_X @ rho @ PAULI_X
    if strategy is Strategy.CL:
        plus = np.array([[1, 1], [1, 1]], dtype=complex) / 2.0
        minus = np.array([[1, -1], [-1, 1]], dtype=complex) / 2.0
        h_flipped_h = HADAMARD @ flipped @ HADAMARD
        matrix = mix.lambda0 * np.kron(plus, kron_all([h_rho_h] * rest))
        matrix += mix.lambda1 * np.kron(minus, kron_all([h_flipped_h] * rest))
        return DensityOperator(num_qubits, matrix)

    raise_block = kron_all([rho @ PAULI_X] * rest)
    lower_block = kron_all([PAULI_X @ rho] * rest)
    plain = kron_all([rho] * rest)
    conjugated = kron_all([flipped] * rest)
    if strategy is Strategy.Q1:
        matrix = 0.5 * np.block(
            [[plain, p * raise_block], [p * lower_block, conjugated]]
        )
    else:
        matrix = (mix.lambda0 / 2.0) * np.block(
            [[plain, raise_block], [lower_block, conjugated]]
        )
        matrix += (mix.lambda1 / 2.0) * np.block(
            [[conjugated, -lower_block], [-raise_block, plain]]
        )
    return DensityOperator(num_qubits, matrix)


Branch = Literal["plus", "minus", "none"]

_PLUS = HADAMARD[:, 0].copy()
_MINUS = HADAMARD[:, 1].copy()


@dataclass(frozen=True)
class SpectralLine:
    """One degenerate eigenvalue family: excitation label, branch,
    eigenvalue, multiplicity, and a factory yielding each eigenvector."""

    m: int
    branch: Branch
    eigenvalue: float
    multiplicity: int
    eigenvector_factory: Callable[[], Iterator[np.ndarray]]


@dataclass(frozen=True)
class LabeledSpectrum:
    strategy: Strategy
    num_qubits: int
    lines: tuple[SpectralLine, ...]

    def total_weight(self) -> float:
        return sum(line.eigenvalue * line.multiplicity for line in self.lines)

    def iter_pairs(self) -> Iterator[tuple[float, np.ndarray]]:
        """Yield every (eigenvalue, eigenvector) pair across all lines."""
        for line in self.lines:
            for vector in line.eigenvector_factory():
                yield line.eigenvalue, vector

    def sorted_eigenvalues(self) -> np.ndarray:
        values: list[float] = []
        for line in self.lines:
            values.extend([line.eigenvalue] * line.multiplicity)
        return np.sort(np.array(values))[::-1]


def _weight_bitstrings(num_bits: int, weight: int) -> Iterator[int]:
    # Lexicographic enumeration of fixed-Hamming-weight bitstrings; the order
    # is part of the determinism contract for degenerate eigenvectors.
    for bits in range(1 << num_bits):
        if bits.bit_count() == weight:
            yield bits


def _x_product_vector(num_qubits: int, minus_bits: int) -> np.ndarray:
    factors = [
        _MINUS if (minus_bits >> (num_qubits - 1 - i)) & 1 else _PLUS
        for i in range(num_qubits)
    ]
    return kron_all([f.reshape(2, 1) for f in factors]).reshape(-1)


def _ghz_vector(num_qubits: int, chi: int, sign: int) -> np.ndarray:
    dim = 1 << num_qubits
    vector = np.zeros(dim, dtype=complex)
    vector[chi] = 1.0 / math.sqrt(2.0)
    vector[(dim - 1) ^ chi] = sign / math.sqrt(2.0)
    return vector


def closed_form_eigensystem(
    strategy: Strategy, num_qubits: int, p: float
) -> LabeledSpectrum:
    """Labeled eigenvalue/eigenvector families of a probe, no diagonalization.

    The eigenvector factories enumerate degenerate vectors lazily.  Labels:

    * ``S``: ``m`` counts minus factors over all N qubits; multiplicity
      C(N, m); plain x-basis product vectors.
    * ``Cl``: ``m`` counts minus factors over qubits 2..N; multiplicity
      C(N-1, m) per branch; the branch records the first qubit's sign, and
      the minus branch carries the C-Not-permuted eigenvalue.
    * ``Q1``/``Q2``: ``m`` counts excitations of the seed bitstring;
      multiplicity C(N-1, m) per branch; vectors are the GHZ-type pairs
      (|0,chi> +/- |1,flipped chi>)/sqrt(2), identical for both strategies.
    """
    _check_strategy_size(strategy, num_qubits)
    mix = MixednessParams.from_p(p)
    l0, l1 = mix.lambda0, mix.lambda1
    n = num_qubits
    lines: list[SpectralLine] = []

    if strategy is Strategy.S:
        for m in range(n + 1):
            lines.append(
                SpectralLine(
                    m=m,
                    branch="none",
                    eigenvalue=l0 ** (n - m) * l1**m,
                    multiplicity=math.comb(n, m),
                    eigenvector_factory=_product_factory(n, m, first=None),
                )
            )
        return LabeledSpectrum(strategy, n, tuple(lines))

    for m in range(n):
        multiplicity = math.comb(n - 1, m)
        plus_value = l0 ** (n - m) * l1**m
        if strategy is Strategy.CL:
            lines.append(
                SpectralLine(
                    m, "plus", plus_value, multiplicity, _product_factory(n, m, first=0)
                )
            )
            lines.append(
                SpectralLine(
                    m,
                    "minus",
                    l0**m * l1 ** (n - m),
                    multiplicity,
                    _product_factory(n, m, first=1),
                )
            )
            continue
        minus_value = (
            l0 ** (n - m - 1) * l1 ** (m + 1)
            if strategy is Strategy.Q1
            else l0**m * l1 ** (n - m)
        )
        lines.append(
            SpectralLine(m, "plus", plus_value, multiplicity, _ghz_factory(n, m, +1))
        )
        lines.append(
            SpectralLine(m, "minus", minus_value, multiplicity, _ghz_factory(n, m, -1))
        )
    return LabeledSpectrum(strategy, n, tuple(lines))


def _product_factory(
    num_qubits: int, m: int, first: int | None
) -> Callable[[], Iterator[np.ndarray]]:
    # first=None: m minus signs anywhere (strategy S).  Otherwise the first
    # qubit is pinned to + (first=0) or - (first=1) and m counts the rest.
    def factory() -> Iterator[np.ndarray]:
        if first is None:
            for bits in _weight_bitstrings(num_qubits, m):
                yield _x_product_vector(num_qubits, bits)
        else:
            lead = first << (num_qubits - 1)
            for bits in _weight_bitstrings(num_qubits - 1, m):
                yield _x_product_vector(num_qubits, lead | bits)

    return factory


def _ghz_factory(
    num_qubits: int, m: int, sign: int
) -> Callable[[], Iterator[np.ndarray]]:
    def factory() -> Iterator[np.ndarray]:
        for chi in _weight_bitstrings(num_qubits - 1, m):
            yield _ghz_vector(num_qubits, chi, sign)

    return factory
