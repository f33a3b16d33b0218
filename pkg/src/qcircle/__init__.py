"""Deformed coherent states for a quantum particle on a circle.

A numerics library plus CLI covering the deformed coherent family on the
circle: basis amplitudes, norms, overlaps, wavefunctions, expectation values
and probability distributions for the two-parameter (q, s) family, their
theta-function closed forms at q = 1, a precision-controlled bilateral series
engine underneath, and an operator lab that verifies the deformed ladder
algebra and the coherent-state eigenvalue equation on truncated bases.
"""

from .errors import (
    BoundaryVerdictError,
    DegenerateReferenceError,
    InvalidParameterError,
    NonConvergentError,
    QCircleError,
    SummationOverflowError,
    WindowTooNarrowError,
)
from .operators import (
    TruncatedOperator,
    angular_momentum_operator,
    commutator_residual,
    eigen_residual,
    shift_operator,
    weighted_shift_operator,
)
from .qmath import (
    Q_ONE_BAND,
    jackson_derivative,
    q_number,
    theta2,
    theta2_series,
    theta3,
    theta3_log_derivative,
    theta3_series,
)
from .series import (
    BOUNDARY_BAND,
    DEFAULT_MAX_HALF_WIDTH,
    DEFAULT_TOL,
    Convergence,
    ConvergenceVerdict,
    SeriesValue,
    convergence_gate,
    empirical_ratio_verdict,
    sum_bilateral,
)
from .states import (
    DeformationParams,
    DistributionTable,
    NormalizationKind,
    PhaseSpacePoint,
    StateLabel,
    amplitude,
    angle_distribution,
    eigenvalue_from_label,
    empirical_gate,
    expectation_j,
    expectation_u,
    j_distribution,
    label_from_eigenvalue,
    log_amplitude,
    norm_squared,
    overlap,
    phase_space_point,
    relative_expectation_u,
    wavefunction,
)

__version__ = "0.1.0"

__all__ = [
    "QCircleError",
    "InvalidParameterError",
    "NonConvergentError",
    "BoundaryVerdictError",
    "SummationOverflowError",
    "WindowTooNarrowError",
    "DegenerateReferenceError",
    "SeriesValue",
    "Convergence",
    "ConvergenceVerdict",
    "sum_bilateral",
    "convergence_gate",
    "empirical_ratio_verdict",
    "DEFAULT_TOL",
    "DEFAULT_MAX_HALF_WIDTH",
    "BOUNDARY_BAND",
    "Q_ONE_BAND",
    "q_number",
    "jackson_derivative",
    "theta2",
    "theta3",
    "theta2_series",
    "theta3_series",
    "theta3_log_derivative",
    "DeformationParams",
    "StateLabel",
    "PhaseSpacePoint",
    "DistributionTable",
    "NormalizationKind",
    "eigenvalue_from_label",
    "label_from_eigenvalue",
    "phase_space_point",
    "log_amplitude",
    "amplitude",
    "norm_squared",
    "overlap",
    "wavefunction",
    "expectation_j",
    "expectation_u",
    "relative_expectation_u",
    "j_distribution",
    "angle_distribution",
    "empirical_gate",
    "TruncatedOperator",
    "shift_operator",
    "angular_momentum_operator",
    "weighted_shift_operator",
    "commutator_residual",
    "eigen_residual",
]
