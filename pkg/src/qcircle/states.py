"""State-level quantities of the deformed coherent family on the circle.

A state is labelled by (l, alpha): l is the deformed angular-momentum label,
alpha the classical angle.  The label induces the eigenvalue
xi = e^{-[l]_q + i*alpha} of the weighted-shift operator, and the basis
amplitudes are

    <j | l,alpha>_{s,q} = xi^{-j} e^{-(s/ln q) [j]_q} e^{-s j/(1-q)},

with the classical branch e^{l j - i j alpha - s j^2/2} at q = 1.  Norms,
overlaps, wavefunctions, expectation values and probability distributions are
all bilateral series over these amplitudes, summed in log space; the
classical branch routes through the theta closed forms instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from .errors import (
    BoundaryVerdictError,
    DegenerateReferenceError,
    InvalidParameterError,
    NonConvergentError,
    SummationOverflowError,
    WindowTooNarrowError,
)
from .qmath import Q_ONE_BAND, q_number, theta2_series, theta3_log_derivative, theta3_series
from .series import (
    BOUNDARY_BAND,
    DEFAULT_TOL,
    Convergence,
    SeriesValue,
    empirical_ratio_verdict,
    ratio,
    sum_bilateral,
)

__all__ = [
    "DeformationParams",
    "StateLabel",
    "PhaseSpacePoint",
    "NormalizationKind",
    "DistributionTable",
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
]

TWO_PI = 2.0 * math.pi
_LOG_MAX = math.log(1.7976931348623157e308)

#: Tail mass (relative to the total) a distribution window may drop.
DIST_TAIL_TOL = 1e-10
#: Default and maximal half-widths for auto-widened windows.
DEFAULT_WINDOW = 64
MAX_WINDOW = 4096


@dataclass(frozen=True)
class DeformationParams:
    """The deformation pair: q > 0 deforms the algebra, s > 0 squeezes.

    q = 1 (within the q-one band) selects the non-deformed closed forms;
    s = 1 selects the base family.
    """

    q: float
    s: float = 1.0

    def __post_init__(self):
        if not (self.q > 0.0) or not math.isfinite(self.q):
            raise InvalidParameterError(f"q must be a positive finite real, got {self.q}")
        if not (self.s > 0.0) or not math.isfinite(self.s):
            raise InvalidParameterError(f"s must be a positive finite real, got {self.s}")

    @property
    def classical(self) -> bool:
        """True when q falls in the q -> 1 dispatch band."""
        return abs(self.q - 1.0) < Q_ONE_BAND


@dataclass(frozen=True)
class StateLabel:
    """Coherent-state label (l, alpha); alpha is normalized to [0, 2*pi)."""

    l: float
    alpha: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.l):
            raise InvalidParameterError(f"l must be finite, got {self.l}")
        if not math.isfinite(self.alpha):
            raise InvalidParameterError(f"alpha must be finite, got {self.alpha}")
        object.__setattr__(self, "alpha", self.alpha % TWO_PI)


@dataclass(frozen=True)
class PhaseSpacePoint:
    """Plane projection (x, y) = |xi| (cos alpha, sin alpha) of a cylinder point."""

    x: float
    y: float


class NormalizationKind(Enum):
    DISCRETE_SUM = "discrete-sum"       # sum of weights = 1
    ANGULAR_DENSITY = "angular-density"  # (1/2pi) * integral over [0, 2pi) = 1


@dataclass(frozen=True)
class DistributionTable:
    """A normalized probability table over integer j or over an angle grid."""

    support: np.ndarray
    weights: np.ndarray
    normalization_kind: NormalizationKind

    def __post_init__(self):
        support = np.asarray(self.support)
        weights = np.asarray(self.weights, dtype=float)
        if support.shape != weights.shape:
            raise InvalidParameterError("support and weights must have matching shapes")
        if np.any(weights < 0.0):
            raise InvalidParameterError("weights must be non-negative")
        support.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "weights", weights)

    def argmax(self):
        """Support point carrying the largest weight."""
        return self.support[int(np.argmax(self.weights))]


# ---------------------------------------------------------------------------
# labels and eigenvalues
# ---------------------------------------------------------------------------

def eigenvalue_from_label(label: StateLabel, params: DeformationParams) -> complex:
    """The induced eigenvalue xi = e^{-[l]_q + i*alpha} of the weighted shift.

    For 0 < q < 1 the modulus stays above the excluded-disk radius
    e^{-1/(1-q)}; for q > 1 it stays below e^{1/(q-1)}.
    """
    lq = label.l if params.classical else q_number(label.l, params.q)
    if -lq > _LOG_MAX:
        raise SummationOverflowError("eigenvalue modulus exceeds the double range")
    return cmath.exp(complex(-lq, label.alpha))


def label_from_eigenvalue(xi: complex, params: DeformationParams) -> StateLabel:
    """Inverse of :func:`eigenvalue_from_label`; alpha comes out in [0, 2*pi)."""
    m = abs(xi)
    if m == 0.0 or not math.isfinite(m):
        raise InvalidParameterError(f"eigenvalue must be nonzero and finite, got {xi}")
    v = -math.log(m)  # [l]_q
    if params.classical:
        l = v
    else:
        arg = (params.q - 1.0) * v
        if arg <= -1.0:
            raise InvalidParameterError(
                f"|xi| = {m:g} lies outside the deformed phase space for q = {params.q:g}"
            )
        l = math.log1p(arg) / math.log(params.q)
    return StateLabel(l, math.atan2(xi.imag, xi.real) % TWO_PI)


def phase_space_point(label: StateLabel, params: DeformationParams) -> PhaseSpacePoint:
    """Project the labelled cylinder point onto the (x, y) plane."""
    xi = eigenvalue_from_label(label, params)
    return PhaseSpacePoint(xi.real, xi.imag)


# ---------------------------------------------------------------------------
# amplitudes
# ---------------------------------------------------------------------------

def log_amplitude(j: int, label: StateLabel, params: DeformationParams) -> Tuple[float, float]:
    """(log-magnitude, phase) of the basis amplitude <j|l,alpha>_{s,q}.

    The magnitude never depends on alpha; the phase is exactly -j*alpha.
    """
    q, s = params.q, params.s
    if params.classical:
        lm = label.l * j - s * j * j / 2.0
    else:
        lnq = math.log(q)
        # g(j) = [j]_q/ln q - j/(q-1) -> j^2/2 as q -> 1; always the
        # suppressing part of the exponent.
        g = q_number(j, q) / lnq - j / (q - 1.0)
        lm = j * q_number(label.l, q) - s * g
    return lm, -j * label.alpha


def amplitude(j: int, label: StateLabel, params: DeformationParams) -> complex:
    """Basis amplitude <j|l,alpha>_{s,q}; equals 1 at j = 0 for any label.

    Raises instead of silently saturating when the magnitude overflows the
    double range.
    """
    lm, ph = log_amplitude(j, label, params)
    if lm > _LOG_MAX:
        raise SummationOverflowError(
            f"amplitude magnitude at j={j} exceeds the double range (log {lm:.3g})"
        )
    return cmath.exp(complex(lm, ph))


def _log_weights(js: np.ndarray, label: StateLabel, params: DeformationParams) -> np.ndarray:
    """Vectorized log |<j|l,alpha>|^2 over an index array."""
    q, s = params.q, params.s
    js = np.asarray(js, dtype=float)
    if params.classical:
        lm = label.l * js - s * js * js / 2.0
    else:
        lnq = math.log(q)
        with np.errstate(over="ignore"):
            qj = np.expm1(js * lnq) / (q - 1.0)
            g = qj / lnq - js / (q - 1.0)
            lm = js * q_number(label.l, q) - s * g
    return 2.0 * lm


# ---------------------------------------------------------------------------
# convergence control
# ---------------------------------------------------------------------------

def _require_convergent(params: DeformationParams, l_values) -> None:
    """Refuse to sum when the analytic gate fails or is inconclusive.

    s = 1 and the classical branch always converge; for mixed labels the
    gate is applied with q^l replaced by the mean of the q^(l_i).
    """
    if params.classical or params.s == 1.0:
        return
    q, s = params.q, params.s
    pows = []
    for l in l_values:
        t = l * math.log(q)
        pows.append(math.exp(t) if t <= _LOG_MAX else math.inf)
    q_pow = sum(pows) / len(pows)
    one_minus_s = 1.0 - s
    gate_value = q_pow - one_minus_s
    if gate_value < -BOUNDARY_BAND:
        raise NonConvergentError(f"divergent: q^l={q_pow:g} < 1-s={one_minus_s:g}")
    if gate_value <= BOUNDARY_BAND:
        raise BoundaryVerdictError(
            f"boundary: q^l={q_pow:g} is within {BOUNDARY_BAND:g} of 1-s={one_minus_s:g}"
        )


def empirical_gate(q: float, l: float, s: float) -> Convergence:
    """Ratio-test verdict measured on the actual squared-norm series terms.

    Probes the slowly decaying tail (j -> +inf for q < 1, j -> -inf for
    q > 1) of the series behind :func:`norm_squared` and classifies it by the
    measured limiting term ratio, independently of the analytic gate.
    """
    params = DeformationParams(q, s)
    if params.classical:
        return Convergence.CONVERGENT
    label = StateLabel(l, 0.0)

    def term(j: int):
        return log_amplitude(j, label, params)[0] * 2.0, 0.0

    return empirical_ratio_verdict(term, direction=+1 if q < 1.0 else -1)


# ---------------------------------------------------------------------------
# norms, overlaps, wavefunctions
# ---------------------------------------------------------------------------

def _finite_real(sv: SeriesValue, what: str) -> float:
    if sv.log_magnitude > _LOG_MAX:
        raise SummationOverflowError(f"{what} exceeds the double range")
    return sv.value.real


def _finite_complex(sv: SeriesValue, what: str) -> complex:
    if sv.log_magnitude > _LOG_MAX:
        raise SummationOverflowError(f"{what} exceeds the double range")
    return sv.value


def norm_squared(label: StateLabel, params: DeformationParams, tol: float = DEFAULT_TOL) -> float:
    """Squared norm <l,alpha|l,alpha>_{s,q}; the states are not normalized.

    Classical branch: theta3(i*l/pi | i*s/pi).  Deformed branch: the
    bilateral sum of |<j|l,alpha>|^2, refused when the gate fails.
    """
    _require_convergent(params, [label.l])
    if params.classical:
        sv = theta3_series(complex(0.0, label.l / math.pi), complex(0.0, params.s / math.pi), tol)
        return _finite_real(sv, "norm")

    def term(j: int):
        return 2.0 * log_amplitude(j, label, params)[0], 0.0

    return _finite_real(sum_bilateral(term, tol=tol), "norm")


def overlap(
    label1: StateLabel,
    label2: StateLabel,
    params: DeformationParams,
    tol: float = DEFAULT_TOL,
) -> complex:
    """Overlap <l,alpha|h,beta>_{s,q}; Hermitian-symmetric, never orthogonal.

    Classical branch: theta3((alpha-beta)/2pi - i(l+h)/2pi | i*s/pi).
    """
    _require_convergent(params, [label1.l, label2.l])
    if params.classical:
        z = complex(
            (label1.alpha - label2.alpha) / TWO_PI,
            -(label1.l + label2.l) / TWO_PI,
        )
        sv = theta3_series(z, complex(0.0, params.s / math.pi), tol)
        return _finite_complex(sv, "overlap")
    dphase = label1.alpha - label2.alpha

    def term(j: int):
        lm = log_amplitude(j, label1, params)[0] + log_amplitude(j, label2, params)[0]
        return lm, j * dphase

    return _finite_complex(sum_bilateral(term, tol=tol), "overlap")


def wavefunction(
    phi: float,
    label: StateLabel,
    params: DeformationParams,
    tol: float = DEFAULT_TOL,
) -> complex:
    """Position wavefunction <phi|l,alpha>_{s,q}; depends only on phi - alpha.

    Classical branch: theta3((phi - alpha - i*l)/2pi | i*s/2pi).
    """
    if not math.isfinite(phi):
        raise InvalidParameterError(f"phi must be finite, got {phi}")
    _require_convergent(params, [label.l])
    if params.classical:
        z = complex((phi - label.alpha) / TWO_PI, -label.l / TWO_PI)
        sv = theta3_series(z, complex(0.0, params.s / TWO_PI), tol)
        return _finite_complex(sv, "wavefunction")
    rel = phi - label.alpha

    def term(j: int):
        return log_amplitude(j, label, params)[0], j * rel

    return _finite_complex(sum_bilateral(term, tol=tol), "wavefunction")


# ---------------------------------------------------------------------------
# expectation values
# ---------------------------------------------------------------------------

def expectation_j(label: StateLabel, params: DeformationParams, tol: float = DEFAULT_TOL) -> float:
    """Normalized expectation of the deformed angular momentum.

    The weighted mean of [j]_q under the squared amplitudes; approximately
    [l]_q over wide parameter regions, exactly l for integer and half-integer
    l at q = 1.
    """
    _require_convergent(params, [label.l])
    q = params.q
    if params.classical and params.s == 1.0:
        return theta3_log_derivative(label.l, tol)

    def den_term(j: int):
        return 2.0 * log_amplitude(j, label, params)[0], 0.0

    def num_term(j: int):
        v = float(j) if params.classical else q_number(j, q)
        if v == 0.0:
            return -math.inf, 0.0
        return math.log(abs(v)) + 2.0 * log_amplitude(j, label, params)[0], (
            0.0 if v > 0.0 else math.pi
        )

    num = sum_bilateral(num_term, tol=tol)
    den = sum_bilateral(den_term, tol=tol)
    if num.log_magnitude == -math.inf:
        return 0.0
    return ratio(num, den).real


def expectation_u(label: StateLabel, params: DeformationParams, tol: float = DEFAULT_TOL) -> complex:
    """Normalized expectation of the position unitary.

    Equals e^{i*alpha} times a positive number that never exceeds 1; only the
    phase carries alpha.  Classical branch:
    e^{-s/4} e^{i*alpha} theta2(i*l/pi | i*s/pi) / theta3(i*l/pi | i*s/pi).
    """
    _require_convergent(params, [label.l])
    phase = cmath.exp(complex(0.0, label.alpha))
    if params.classical:
        z = complex(0.0, label.l / math.pi)
        tau = complex(0.0, params.s / math.pi)
        r = ratio(theta2_series(z, tau, tol), theta3_series(z, tau, tol)).real
        return math.exp(-params.s / 4.0) * r * phase

    def num_term(j: int):
        lm = log_amplitude(j, label, params)[0] + log_amplitude(j - 1, label, params)[0]
        return lm, 0.0

    def den_term(j: int):
        return 2.0 * log_amplitude(j, label, params)[0], 0.0

    r = ratio(sum_bilateral(num_term, tol=tol), sum_bilateral(den_term, tol=tol)).real
    return r * phase


def relative_expectation_u(
    label: StateLabel, params: DeformationParams, tol: float = DEFAULT_TOL
) -> complex:
    """Expectation of the position unitary relative to the alpha = 0 state.

    The positive magnitude cancels between numerator and reference, leaving
    exactly e^{i*alpha}: alpha is the classical angle.
    """
    reference = expectation_u(StateLabel(label.l, 0.0), params, tol)
    if reference == 0 or not cmath.isfinite(reference):
        raise DegenerateReferenceError(
            f"reference expectation at alpha=0 is degenerate: {reference}"
        )
    return expectation_u(label, params, tol) / reference


# ---------------------------------------------------------------------------
# distributions
# ---------------------------------------------------------------------------

def _weight_window(
    label: StateLabel,
    params: DeformationParams,
    half_width: Optional[int],
    tail_tol: float,
) -> Tuple[np.ndarray, np.ndarray]:
    """Index window and scaled weights with relative tail mass <= tail_tol.

    A window given explicitly is validated and never widened; the default
    window starts at DEFAULT_WINDOW and doubles until the geometric tail
    estimate at both edges passes, up to MAX_WINDOW.
    """
    auto = half_width is None
    width = DEFAULT_WINDOW if auto else int(half_width)
    if width < 1:
        raise InvalidParameterError(f"window half-width must be >= 1, got {half_width}")
    while True:
        js = np.arange(-width, width + 1)
        lw = _log_weights(js, label, params)
        peak = float(np.max(lw))
        if peak > _LOG_MAX:
            raise SummationOverflowError("weights exceed the double range")
        with np.errstate(under="ignore"):
            w = np.exp(lw - peak)
        total = float(np.sum(w))
        tail = 0.0
        for edge, inner in ((-1, -2), (0, 1)):
            if lw[edge] == -math.inf:
                continue  # exact-zero edge: nothing beyond it either
            if lw[inner] == -math.inf or lw[edge] >= lw[inner]:
                tail = math.inf  # edge terms not decaying: window unusable
                break
            r = math.exp(lw[edge] - lw[inner])
            tail += w[edge] * r / (1.0 - r)
        if tail <= tail_tol * total:
            return js, w
        if not auto or width >= MAX_WINDOW:
            raise WindowTooNarrowError(
                f"window [-{width}, {width}] leaves relative tail mass > {tail_tol:g}"
            )
        width *= 2


def j_distribution(
    label: StateLabel,
    params: DeformationParams,
    half_width: Optional[int] = None,
    tail_tol: float = DIST_TAIL_TOL,
) -> DistributionTable:
    """Probability of finding the normalized coherent state at momentum j.

    Peaked near j = l and asymmetric for q != 1 (the classical branch is the
    discrete Gaussian e^{2lj - sj^2}/theta3).  Never depends on alpha.
    """
    _require_convergent(params, [label.l])
    js, w = _weight_window(label, params, half_width, tail_tol)
    return DistributionTable(js, w / np.sum(w), NormalizationKind.DISCRETE_SUM)


def angle_distribution(
    label: StateLabel,
    params: DeformationParams,
    grid_size: int = 512,
    tail_tol: float = DIST_TAIL_TOL,
) -> DistributionTable:
    """Angular probability density of the normalized coherent state.

    Evaluated on a uniform grid over [0, 2*pi); peaked at phi = alpha and
    normalized so that (1/2pi) times the integral over the circle is 1
    (discrete sum over amplitudes, by the Fourier-series Parseval identity).
    """
    if grid_size < 16:
        raise InvalidParameterError(f"grid_size must be >= 16, got {grid_size}")
    _require_convergent(params, [label.l])
    js, w = _weight_window(label, params, None, min(tail_tol, 1e-10) ** 2)
    with np.errstate(under="ignore"):
        amps = np.sqrt(w) * np.exp(-1j * js * label.alpha)
    phis = TWO_PI * np.arange(grid_size) / grid_size
    values = np.exp(1j * np.outer(phis, js)) @ amps
    density = np.abs(values) ** 2 / np.sum(w)
    return DistributionTable(phis, density, NormalizationKind.ANGULAR_DENSITY)
