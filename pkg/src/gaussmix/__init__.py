"""gaussmix: phase-space toolkit for Gaussian-state mixing.

Covariance-matrix evolution under bilinear exchange coupling, Uhlmann
fidelity with its entanglement threshold, PPT separability verdicts, and a
randomized certification harness for the iff relation between the two.

Conventions: hbar = 1, vacuum covariance I/2, mode ordering (q1, p1, q2, p2).
"""

from .entanglement import (
    BOUNDARY_TOL,
    EntanglementReport,
    is_entangled,
    lambda_min_closed_form,
    partial_transpose,
    symplectic_eigenvalues,
)
from .errors import (
    DomainError,
    GaussMixError,
    InvalidParameterError,
    NonPhysicalStateError,
    NumericError,
)
from .evolution import CouplingSpec, mix, reduce_mode
from .fidelity import (
    FidelityBreakdown,
    PsiThreshold,
    ThresholdReport,
    WINDOW_ALL,
    WINDOW_INTERVAL,
    WINDOW_NONE,
    coupling_function,
    displaced_threshold,
    fidelity_min_over_psi,
    fidelity_threshold,
    gaussian_fidelity,
    mean_overlap_factor,
    psi_threshold,
    threshold_report,
)
from .states import (
    GaussianParams,
    SingleModeState,
    TwoModeState,
    purity,
    state_from_params,
    validate_physical,
)
from .verify import (
    CertifySummary,
    DEFAULT_SEED,
    IoFidelityReport,
    SweepSample,
    certify,
    check_corollary,
    check_theorem,
    io_fidelity_thresholds,
    sweep_psi,
    sweep_tau,
)

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_TOL",
    "CertifySummary",
    "CouplingSpec",
    "DEFAULT_SEED",
    "DomainError",
    "EntanglementReport",
    "FidelityBreakdown",
    "GaussMixError",
    "GaussianParams",
    "InvalidParameterError",
    "IoFidelityReport",
    "NonPhysicalStateError",
    "NumericError",
    "PsiThreshold",
    "SingleModeState",
    "SweepSample",
    "ThresholdReport",
    "TwoModeState",
    "WINDOW_ALL",
    "WINDOW_INTERVAL",
    "WINDOW_NONE",
    "certify",
    "check_corollary",
    "check_theorem",
    "coupling_function",
    "displaced_threshold",
    "fidelity_min_over_psi",
    "fidelity_threshold",
    "gaussian_fidelity",
    "io_fidelity_thresholds",
    "is_entangled",
    "lambda_min_closed_form",
    "mean_overlap_factor",
    "mix",
    "partial_transpose",
    "psi_threshold",
    "purity",
    "reduce_mode",
    "state_from_params",
    "sweep_psi",
    "sweep_tau",
    "symplectic_eigenvalues",
    "threshold_report",
    "validate_physical",
]
