"""Photon-added entangled coherent states: closed forms, a brute-force Fock
oracle, entanglement measures, Husimi Q evaluation, and cross-validation."""

from .analytic import (
    EntropyResult,
    SchmidtForm,
    entropy,
    excited_parity_coherent,
    fock_coefficients,
    normalization,
    reconstruct_from_schmidt,
    scalar_product,
    schmidt_decomposition,
    schmidt_eigenvalues,
)
from .errors import (
    DegenerateStateError,
    DomainError,
    NumericalConsistencyError,
    OverflowDomainError,
    PaecsError,
    TruncationError,
    UnsupportedCombinationError,
)
from .fock import (
    DensityMatrix,
    TwoModeFockState,
    apply_creation,
    build_paecs_numeric,
    coherent_fock,
    density_spectrum,
    hermitian_eigensystem,
    husimi_q_numeric,
    inner_product,
    partial_trace_b,
    state_dump,
    state_from_dump,
    vn_entropy,
)
from .husimi import (
    PhaseSpaceSlice,
    QGrid,
    QuadratureResult,
    local_maxima,
    q_analytic,
    q_grid,
    q_normalization,
    qgrid_csv_lines,
    qgrid_json_dict,
)
from .params import Family, PaecsSpec, TruncationPolicy, recommended_dim
from .special_functions import (
    hermite2,
    laguerre,
    laguerre_combo,
    laguerre_pm,
    laguerre_sum,
    overlap_kernel,
)
from .verify import CheckResult, VerificationReport, run_all

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "DegenerateStateError",
    "DensityMatrix",
    "DomainError",
    "EntropyResult",
    "Family",
    "NumericalConsistencyError",
    "OverflowDomainError",
    "PaecsError",
    "PaecsSpec",
    "PhaseSpaceSlice",
    "QGrid",
    "QuadratureResult",
    "SchmidtForm",
    "TruncationError",
    "TruncationPolicy",
    "TwoModeFockState",
    "UnsupportedCombinationError",
    "VerificationReport",
    "apply_creation",
    "build_paecs_numeric",
    "coherent_fock",
    "density_spectrum",
    "entropy",
    "excited_parity_coherent",
    "fock_coefficients",
    "hermite2",
    "hermitian_eigensystem",
    "husimi_q_numeric",
    "inner_product",
    "laguerre",
    "laguerre_combo",
    "laguerre_pm",
    "laguerre_sum",
    "local_maxima",
    "normalization",
    "overlap_kernel",
    "partial_trace_b",
    "q_analytic",
    "q_grid",
    "q_normalization",
    "qgrid_csv_lines",
    "qgrid_json_dict",
    "recommended_dim",
    "reconstruct_from_schmidt",
    "run_all",
    "scalar_product",
    "schmidt_decomposition",
    "schmidt_eigenvalues",
    "state_dump",
    "state_from_dump",
    "vn_entropy",
]
