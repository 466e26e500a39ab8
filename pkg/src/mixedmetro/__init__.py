"""Mixed-state phase estimation at desk scale.

Probe preparation from partially mixed qubits, quantum Fisher information
(spectral and closed-form), entanglement boundaries, quantum discord and
classical correlations, all cross-checked against brute-force density-matrix
oracles.
"""

__version__ = "0.1.0"

from .linalg import (
    DensityOperator,
    EigenSystem,
    ProductBasis,
    apply_unitary,
    binary_h,
    dephase,
    gate_cnot,
    gate_hadamard_all,
    gate_hadamard_on,
    hamming_weights,
    hermitian_eigensystem,
    partial_transpose,
    tensor_product,
    von_neumann_entropy,
)
from .probes import (
    LabeledSpectrum,
    MixednessParams,
    Strategy,
    closed_form_density,
    closed_form_eigensystem,
    initial_qubit,
    prepare_probe,
)
from .fisher import (
    QfiResult,
    classical_q1_crossing,
    phase_uncertainty,
    q1_leading_term,
    q2_leading_term,
    qfi_cl_approx,
    qfi_closed,
    qfi_result,
    qfi_spectral,
    quantum_advantage,
)
from .correlations import (
    CorrelationReport,
    DiscordMcResult,
    McDiscordSample,
    classical_correlations,
    closest_classical_state,
    conjectured_discord,
    correlation_report,
    discord_mc,
    discord_mc_bounds,
    entanglement_boundary,
    min_pt_eigenvalue_brute,
    min_pt_eigenvalue_closed,
    relative_entropy_to_dephased,
)

__all__ = [
    "__version__",
    "DensityOperator",
    "EigenSystem",
    "ProductBasis",
    "apply_unitary",
    "binary_h",
    "dephase",
    "gate_cnot",
    "gate_hadamard_all",
    "gate_hadamard_on",
    "hamming_weights",
    "hermitian_eigensystem",
    "partial_transpose",
    "tensor_product",
    "von_neumann_entropy",
    "LabeledSpectrum",
    "MixednessParams",
    "Strategy",
    "closed_form_density",
    "closed_form_eigensystem",
    "initial_qubit",
    "prepare_probe",
    "QfiResult",
    "classical_q1_crossing",
    "phase_uncertainty",
    "q1_leading_term",
    "q2_leading_term",
    "qfi_cl_approx",
    "qfi_closed",
    "qfi_result",
    "qfi_spectral",
    "quantum_advantage",
    "CorrelationReport",
    "DiscordMcResult",
    "McDiscordSample",
    "classical_correlations",
    "closest_classical_state",
    "conjectured_discord",
    "correlation_report",
    "discord_mc",
    "discord_mc_bounds",
    "entanglement_boundary",
    "min_pt_eigenvalue_brute",
    "min_pt_eigenvalue_closed",
    "relative_entropy_to_dephased",
]
