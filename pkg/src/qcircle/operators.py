"""Finite truncations of the circle-algebra operators on the basis |j| <= J.

The position unitary acts as the lower shift, the deformed angular momentum
as the diagonal of q-numbers, and the weighted shift (whose eigenvectors are
the coherent states) as a single positive band.  Products and identity checks
are only trusted on interior rows, away from the truncation edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InvalidParameterError, WindowTooNarrowError
from .qmath import q_number
from .states import DeformationParams, StateLabel, eigenvalue_from_label, log_amplitude

__all__ = [
    "TruncatedOperator",
    "shift_operator",
    "angular_momentum_operator",
    "weighted_shift_operator",
    "commutator_residual",
    "eigen_residual",
]

_LOG_MAX = math.log(1.7976931348623157e308)

#: Relative size allowed for coherent-state coefficients at the window edge.
EIGEN_TAIL_THRESHOLD = 1e-8


@dataclass(frozen=True)
class TruncatedOperator:
    """A banded operator on the basis indices j in [-J, J].

    `entries[r + J, c + J]` is the matrix element <r|A|c>.  For the weighted
    shift the band spans so many orders of magnitude that extreme entries
    overflow or underflow the double range; `log_band` then carries the exact
    log-magnitudes of the band `entries[r, r - band_offset]`, indexed by row.
    """

    half_width: int
    band_width: int
    entries: np.ndarray
    log_band: Optional[np.ndarray] = field(default=None, repr=False)
    band_offset: int = 0

    def __post_init__(self):
        if self.half_width < 1:
            raise InvalidParameterError(f"half-width must be >= 1, got {self.half_width}")
        n = 2 * self.half_width + 1
        entries = np.asarray(self.entries, dtype=complex)
        if entries.shape != (n, n):
            raise InvalidParameterError(f"entries must be {n}x{n}, got {entries.shape}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def index(self, j: int) -> int:
        """Row/column index of basis label j."""
        return j + self.half_width

    def interior_rows(self, margin: Optional[int] = None) -> np.ndarray:
        """Row indices with |j| <= J - margin (margin defaults to band_width)."""
        m = self.band_width if margin is None else margin
        return np.arange(-self.half_width + m, self.half_width - m + 1) + self.half_width

    def apply(self, coeffs: np.ndarray) -> np.ndarray:
        return self.entries @ np.asarray(coeffs, dtype=complex)


def shift_operator(half_width: int) -> TruncatedOperator:
    """The position unitary: |j> -> |j+1>, ones on the first subdiagonal.

    Its adjoint realizes the lowering action |j> -> |j-1>; away from the
    truncation edges both compose to the identity.
    """
    if half_width < 1:
        raise InvalidParameterError(f"half-width must be >= 1, got {half_width}")
    n = 2 * half_width + 1
    entries = np.zeros((n, n), dtype=complex)
    idx = np.arange(n - 1)
    entries[idx + 1, idx] = 1.0
    return TruncatedOperator(half_width, 1, entries)


def angular_momentum_operator(half_width: int, q: float) -> TruncatedOperator:
    """The deformed angular momentum: diagonal of q-numbers [j]_q.

    At q = 1 (within the q-one band) the entries are the integers j.  The
    spectrum is strictly increasing in j, bounded above by 1/(1-q) for
    0 < q < 1 and below by -1/(q-1) for q > 1.
    """
    if half_width < 1:
        raise InvalidParameterError(f"half-width must be >= 1, got {half_width}")
    js = range(-half_width, half_width + 1)
    return TruncatedOperator(half_width, 0, np.diag([q_number(j, q) for j in js]).astype(complex))


def _weighted_shift_log_band(half_width: int, params: DeformationParams) -> np.ndarray:
    """log of the band entry <r|Z|r-1> for rows r = -J+1 .. J.

    From the factorized form: prefactor e^{(s/(1-q))((1-1/q)/ln q - 1)} times
    the diagonal exponential e^{(s(1/q-1)/ln q) [r]_q} acting after the
    shift; the q -> 1 limit is e^{s/2} e^{-s r}.
    """
    q, s = params.q, params.s
    rows = np.arange(-half_width + 1, half_width + 1)
    if params.classical:
        return s / 2.0 - s * rows.astype(float)
    lnq = math.log(q)
    log_prefactor = s / (1.0 - q) * ((1.0 - 1.0 / q) / lnq - 1.0)
    coeff = s * (1.0 / q - 1.0) / lnq
    return log_prefactor + coeff * np.array([q_number(int(r), q) for r in rows])


def weighted_shift_operator(half_width: int, params: DeformationParams) -> TruncatedOperator:
    """The banded operator whose eigenvectors are the coherent states.

    Built directly from the factorized form (diagonal exponential of the
    angular momentum composed with the shift), never by exponentiating the
    angle operator, which has no faithful finite-band truncation.  All band
    entries are strictly positive; rows far into the suppressed tail may
    overflow or underflow the double range in `entries`, so `log_band` keeps
    the exact log-magnitudes.
    """
    if half_width < 1:
        raise InvalidParameterError(f"half-width must be >= 1, got {half_width}")
    log_band = _weighted_shift_log_band(half_width, params)
    n = 2 * half_width + 1
    entries = np.zeros((n, n), dtype=complex)
    idx = np.arange(n - 1)
    with np.errstate(over="ignore", under="ignore"):
        entries[idx + 1, idx] = np.exp(log_band)
    return TruncatedOperator(half_width, 1, entries, log_band=log_band, band_offset=1)


def commutator_residual(q: float, half_width: int) -> float:
    """Residual of the deformed ladder identity on interior rows.

    Forms R = q*U*Jq - Jq*U + U (which collapses to the classical
    [J, U] = U at q = 1) and returns the largest entrywise residual measured
    relative to the magnitude of the operands, so the result is a roundoff
    figure independent of how large the q-numbers grow inside the window.
    """
    if half_width < 4:
        raise InvalidParameterError(f"half-width must be >= 4, got {half_width}")
    u = shift_operator(half_width)
    jq = angular_momentum_operator(half_width, q)
    a = q * (u.entries @ jq.entries)
    b = jq.entries @ u.entries
    residual = np.abs(a - b + u.entries)
    scale = 1.0 + np.abs(a) + np.abs(b)
    rows = u.interior_rows(margin=2)
    return float(np.max((residual / scale)[rows, :]))


def eigen_residual(
    label: StateLabel,
    params: DeformationParams,
    half_width: int = 64,
    tail_threshold: float = EIGEN_TAIL_THRESHOLD,
) -> float:
    """Relative residual of the coherent-state eigenvalue equation.

    Builds the coefficient vector from the basis amplitudes, applies the
    weighted shift band in log space (band entry and coefficient magnitudes
    are combined before exponentiation, since the dense product overflows
    for q < 1 at practical widths), and returns ||Z c - xi c|| / ||c|| over
    interior rows.
    """
    if half_width < 2:
        raise InvalidParameterError(f"half-width must be >= 2, got {half_width}")
    J = half_width
    js = np.arange(-J, J + 1)
    log_mag = np.empty(js.size)
    for k, j in enumerate(js):
        log_mag[k] = log_amplitude(int(j), label, params)[0]
    peak = float(np.max(log_mag))
    rel_edge = math.exp(max(log_mag[0], log_mag[-1]) - peak)
    if rel_edge > tail_threshold:
        raise WindowTooNarrowError(
            f"coefficient tail at |j| = {J} is {rel_edge:.3g} of the peak "
            f"(threshold {tail_threshold:g})"
        )
    with np.errstate(under="ignore"):
        coeffs = np.exp(log_mag - peak) * np.exp(-1j * js * label.alpha)

    zq = weighted_shift_operator(J, params)
    rows = np.arange(-J + 1, J + 1)
    with np.errstate(under="ignore"):
        shifted = np.exp(zq.log_band + log_mag[rows - 1 + J] - peak) * np.exp(
            -1j * (rows - 1) * label.alpha
        )
    xi = eigenvalue_from_label(label, params)
    residual = shifted - xi * coeffs[rows + J]
    interior = np.abs(rows) <= J - 1
    return float(np.linalg.norm(residual[interior]) / np.linalg.norm(coeffs))
