"""Dense complex linear algebra and qubit-state primitives.

Conventions used throughout the package:

* qubit 1 is the leftmost (most significant) tensor factor, so a basis index
  read as a binary string lists the qubit values in order;
* qubit indices passed to gate builders and partial transposition are 1-based;
* all entropies are in bits (log base 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

# Absolute tolerance for state validation and matrix comparisons.
ATOL = 1e-10
# Eigenvalues in [-EIG_CLIP, 0) are numerical noise and are clipped to zero
# before logs; anything more negative is rejected.
EIG_CLIP = 1e-10
# Unitarity tolerance when applying a caller-supplied matrix.
UNITARY_ATOL = 1e-8

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with ``a``'s indices major."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(factors: Iterable[np.ndarray]) -> np.ndarray:
    """Kronecker product of a sequence of matrices, leftmost factor major."""
    mats = [np.asarray(f, dtype=complex) for f in factors]
    if not mats:
        raise ValueError("kron_all needs at least one factor")
    return reduce(np.kron, mats)


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class DensityOperator:
    """Hermitian, trace-one, positive-semidefinite matrix over ``num_qubits``.

    Validation happens on construction: Hermiticity and unit trace within
    ``ATOL`` and smallest eigenvalue >= -``EIG_CLIP``.  The stored matrix is
    made read-only, so instances are safe to share across threads.
    """

    num_qubits: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        if self.num_qubits < 0:
            raise ValueError("num_qubits must be non-negative")
        dim = 1 << self.num_qubits
        mat = np.array(self.matrix, dtype=complex)
        if mat.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix, got {mat.shape}")
        if np.abs(mat - mat.conj().T).max() > ATOL:
            raise ValueError("matrix is not Hermitian within tolerance")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > ATOL:
            raise ValueError(f"trace {trace} differs from one beyond tolerance")
        smallest = float(np.linalg.eigvalsh(mat)[0])
        if smallest < -EIG_CLIP:
            raise ValueError(f"matrix has negative eigenvalue {smallest}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits


def gate_hadamard_all(num_qubits: int) -> np.ndarray:
    """Hadamard on every qubit as a full 2^N unitary."""
    if num_qubits < 1:
        raise ValueError("num_qubits must be positive")
    return kron_all([HADAMARD] * num_qubits)


def gate_hadamard_on(num_qubits: int, qubit: int) -> np.ndarray:
    """Hadamard on one qubit (1-based index), identity elsewhere."""
    _check_qubit_index(num_qubits, qubit)
    return kron_all(
        [HADAMARD if i == qubit else IDENTITY_2 for i in range(1, num_qubits + 1)]
    )


def gate_cnot(num_qubits: int, control: int, target: int) -> np.ndarray:
    """C-Not as a full 2^N permutation matrix.

    Flips the target bit exactly when the control bit is 1.  Indices are
    1-based with qubit 1 the most significant bit.
    """
    _check_qubit_index(num_qubits, control)
    _check_qubit_index(num_qubits, target)
    if control == target:
        raise ValueError("control and target must differ")
    dim = 1 << num_qubits
    control_mask = 1 << (num_qubits - control)
    target_mask = 1 << (num_qubits - target)
    cols = np.arange(dim)
    rows = np.where(cols & control_mask, cols ^ target_mask, cols)
    gate = np.zeros((dim, dim), dtype=complex)
    gate[rows, cols] = 1.0
    return gate


def _check_qubit_index(num_qubits: int, qubit: int) -> None:
    if not 1 <= qubit <= num_qubits:
        raise ValueError(f"qubit index {qubit} out of range 1..{num_qubits}")


def apply_unitary(rho: DensityOperator, u: np.ndarray) -> DensityOperator:
    """Conjugate a state by a unitary, preserving its spectrum."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (rho.dim, rho.dim):
        raise ValueError(f"unitary shape {u.shape} does not match dimension {rho.dim}")
    defect = np.abs(u.conj().T @ u - np.eye(rho.dim)).max()
    if defect > UNITARY_ATOL:
        raise ValueError(f"matrix is not unitary (defect {defect:.3e})")
    return DensityOperator(rho.num_qubits, u @ rho.matrix @ u.conj().T)


@dataclass(frozen=True)
class EigenSystem:
    """Full spectral decomposition: real eigenvalues sorted descending,
    unit-norm eigenvector columns paired by position."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", _frozen_real(self.eigenvalues))
        object.__setattr__(self, "eigenvectors", _frozen(self.eigenvectors))

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        """Sum of eigenvalue-weighted projectors; should reproduce the source."""
        v = self.eigenvectors
        return (v * self.eigenvalues[None, :]) @ v.conj().T


def _frozen_real(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=float)
    out.setflags(write=False)
    return out


def hermitian_eigensystem(matrix: np.ndarray, atol: float = 1e-8) -> EigenSystem:
    """Eigenvalues and eigenvectors of a Hermitian matrix, sorted descending.

    Parameters
    ----------
    matrix : array_like
        Square matrix, Hermitian within ``atol``.
    atol : float
        Hermiticity tolerance; larger deviations raise ``ValueError``.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    if np.abs(m - m.conj().T).max() > atol:
        raise ValueError("matrix is not Hermitian within tolerance")
    values, vectors = np.linalg.eigh(m)
    return EigenSystem(values[::-1].copy(), vectors[:, ::-1].copy())


def partial_transpose(rho: DensityOperator, subset: Iterable[int]) -> np.ndarray:
    """Transpose the indices of the chosen qubits only (1-based subset).

    The result is Hermitian with the same trace but need not be positive,
    which is exactly what the entanglement test looks for.
    """
    qubits = sorted(set(int(q) for q in subset))
    for q in qubits:
        _check_qubit_index(rho.num_qubits, q)
    n = rho.num_qubits
    tensor = rho.matrix.reshape([2] * (2 * n))
    perm = list(range(2 * n))
    for q in qubits:
        perm[q - 1], perm[n + q - 1] = perm[n + q - 1], perm[q - 1]
    return tensor.transpose(perm).reshape(rho.dim, rho.dim)


@dataclass(frozen=True)
class ProductBasis:
    """A locally orthonormal product basis: one 2x2 unitary per qubit.

    Basis vector ``|k>`` is the ``k``-th column of the tensor product of the
    local unitaries.  The computational basis corresponds to identities.
    """

    num_qubits: int
    local_unitaries: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        if len(self.local_unitaries) != self.num_qubits:
            raise ValueError("need exactly one local unitary per qubit")
        frozen = []
        for u in self.local_unitaries:
            u = np.asarray(u, dtype=complex)
            if u.shape != (2, 2):
                raise ValueError("local unitaries must be 2x2")
            if np.abs(u.conj().T @ u - np.eye(2)).max() > ATOL:
                raise ValueError("local matrix is not unitary within tolerance")
            frozen.append(_frozen(u))
        object.__setattr__(self, "local_unitaries", tuple(frozen))

    @classmethod
    def computational(cls, num_qubits: int) -> "ProductBasis":
        return cls(num_qubits, tuple(IDENTITY_2 for _ in range(num_qubits)))

    def full_unitary(self) -> np.ndarray:
        return kron_all(self.local_unitaries)


def dephase(rho: DensityOperator, basis: ProductBasis) -> DensityOperator:
    """Remove off-diagonal terms of ``rho`` in a rotated product basis.

    Returns sum_k |k><k| rho |k><k| for the basis vectors |k>, expressed back
    in the computational basis.  This is a projection (idempotent) and never
    decreases the von Neumann entropy.
    """
    if basis.num_qubits != rho.num_qubits:
        raise ValueError("basis and state dimensions do not match")
    u = basis.full_unitary()
    rotated = u.conj().T @ rho.matrix @ u
    diag = np.real(np.diagonal(rotated))
    chi = (u * diag[None, :]) @ u.conj().T
    return DensityOperator(rho.num_qubits, chi)


def dephased_probabilities(rho: DensityOperator, basis: ProductBasis) -> np.ndarray:
    """Outcome probabilities of ``rho`` measured in the product basis."""
    if basis.num_qubits != rho.num_qubits:
        raise ValueError("basis and state dimensions do not match")
    u = basis.full_unitary()
    return clip_probabilities(np.real(np.diagonal(u.conj().T @ rho.matrix @ u)))


def hamming_weights(num_qubits: int) -> np.ndarray:
    """Diagonal of the phase generator: Hamming weight of each basis index."""
    if num_qubits < 0:
        raise ValueError("num_qubits must be non-negative")
    return np.array([k.bit_count() for k in range(1 << num_qubits)], dtype=float)


def clip_probabilities(values: np.ndarray) -> np.ndarray:
    """Clip tiny negative weights to zero; reject genuinely negative ones."""
    values = np.asarray(values, dtype=float)
    smallest = float(values.min()) if values.size else 0.0
    if smallest < -EIG_CLIP:
        raise ValueError(f"negative weight {smallest} beyond clipping tolerance")
    return np.maximum(values, 0.0)


def shannon_bits(probabilities: np.ndarray) -> float:
    """Shannon entropy in bits with the 0 log 0 = 0 convention."""
    probs = clip_probabilities(probabilities)
    positive = probs[probs > 0.0]
    return float(max(-(positive * np.log2(positive)).sum(), 0.0))


def von_neumann_entropy(rho: DensityOperator) -> float:
    """Spectral entropy -sum eta log2 eta, in bits, within [0, num_qubits]."""
    return shannon_bits(np.linalg.eigvalsh(rho.matrix))


def binary_h(x: float) -> float:
    """-x log2 x with h(0) = 0; defined on [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"argument {x} outside [0, 1]")
    if x == 0.0:
        return 0.0
    return float(-x * math.log2(x))
