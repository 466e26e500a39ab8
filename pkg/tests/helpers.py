"""Shared random-object builders for the test suite."""

from __future__ import annotations

import numpy as np

from mixedmetro.linalg import DensityOperator, ProductBasis


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    ginibre = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    q, r = np.linalg.qr(ginibre)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases[None, :]


def random_density(num_qubits: int, seed: int) -> DensityOperator:
    rng = np.random.default_rng(seed)
    dim = 1 << num_qubits
    spectrum = rng.dirichlet(np.ones(dim))
    u = haar_unitary(dim, rng)
    return DensityOperator(num_qubits, (u * spectrum[None, :]) @ u.conj().T)


def random_basis(num_qubits: int, seed: int) -> ProductBasis:
    rng = np.random.default_rng(seed)
    return ProductBasis(num_qubits, tuple(haar_unitary(2, rng) for _ in range(num_qubits)))


def ket(num_qubits: int, index: int) -> np.ndarray:
    vec = np.zeros(1 << num_qubits, dtype=complex)
    vec[index] = 1.0
    return vec
