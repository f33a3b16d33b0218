"""Precision-controlled summation of bilateral series sum_{j=-inf}^{inf} t_j.

Every infinite sum in this package decays at least geometrically in one
direction and doubly exponentially in the other, but the term magnitudes span
hundreds (at extreme labels, billions) of orders of magnitude.  Terms therefore
enter as (log-magnitude, phase) pairs and the accumulator is rescaled against
the running peak log-magnitude, so no intermediate result overflows as long as
the individual log-magnitudes are finite.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Tuple, Union

from .errors import InvalidParameterError, NonConvergentError, SummationOverflowError

__all__ = [
    "SeriesValue",
    "Convergence",
    "ConvergenceVerdict",
    "sum_bilateral",
    "convergence_gate",
    "empirical_ratio_verdict",
    "ratio",
    "DEFAULT_TOL",
    "DEFAULT_MAX_HALF_WIDTH",
    "STOP_RUN_LENGTH",
    "BOUNDARY_BAND",
]

#: A bilateral term table: integer index -> (log-magnitude, phase in radians).
#: Callables must be total; mappings treat missing indices as exact zeros.
LogTermTable = Union[Callable[[int], Tuple[float, float]], Mapping[int, Tuple[float, float]]]

DEFAULT_TOL = 1e-14
DEFAULT_MAX_HALF_WIDTH = 4096
#: Consecutive sub-threshold terms required before a direction is considered
#: finished.  Tails here are eventually monotone, but the engine must not rely
#: on monotonicity near the peak.
STOP_RUN_LENGTH = 5
#: Width of the inconclusive band of the ratio test around q^l = 1 - s.
BOUNDARY_BAND = 1e-3

_LOG_MAX = math.log(sys.float_info.max)  # ~709.78


@dataclass(frozen=True)
class SeriesValue:
    """A summed bilateral series.

    Attributes
    ----------
    log_magnitude : float
        Natural log of the absolute value of the sum (-inf for a zero sum).
    phase : float
        Argument of the sum, in (-pi, pi].
    value : complex
        exp(log_magnitude) * e^{i*phase}; non-finite when log_magnitude
        exceeds the double range (use the log form instead in that case).
    tail_bound : float
        Geometric estimate of the dropped tail, in absolute terms.
    terms_used : int
        Number of terms evaluated (>= 1 for any successful summation).
    """

    log_magnitude: float
    phase: float
    value: complex
    tail_bound: float
    terms_used: int


class Convergence(Enum):
    CONVERGENT = "convergent"
    DIVERGENT = "divergent"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class ConvergenceVerdict:
    """Outcome of the analytic ratio test on the squared-norm series."""

    status: Convergence
    gate_value: float  # q^l - (1 - s)


def _as_callable(log_term: LogTermTable) -> Callable[[int], Tuple[float, float]]:
    if callable(log_term):
        return log_term
    table = log_term
    return lambda j: table.get(j, (-math.inf, 0.0))


class _Direction:
    __slots__ = ("step", "cursor", "run", "done", "last", "prev")

    def __init__(self, step: int):
        self.step = step      # +1 or -1
        self.cursor = 1       # next |j| to evaluate
        self.run = 0          # consecutive sub-threshold terms seen
        self.done = False
        self.last: float | None = None   # log-magnitude of the newest term
        self.prev: float | None = None


def sum_bilateral(
    log_term: LogTermTable,
    tol: float = DEFAULT_TOL,
    max_half_width: int = DEFAULT_MAX_HALF_WIDTH,
    run_length: int = STOP_RUN_LENGTH,
) -> SeriesValue:
    """Sum a two-sided series outward from j = 0 with adaptive truncation.

    A direction stops once `run_length` consecutive terms satisfy
    |t_j| <= tol * max(|partial sum|, 1).  Accumulation is carried out
    relative to the running peak log-magnitude, so intermediates stay finite
    for any terms whose log-magnitude is itself finite.

    Parameters
    ----------
    log_term : callable or mapping
        j -> (log-magnitude, phase).  A mapping yields exact-zero terms for
        missing indices.
    tol : float
        Relative smallness threshold for the stop rule.
    max_half_width : int
        Largest |j| evaluated before giving up on a direction.
    run_length : int
        Consecutive small terms needed to finish a direction.

    Returns
    -------
    SeriesValue

    Raises
    ------
    NonConvergentError
        If either direction is still producing significant terms at
        |j| = max_half_width.
    SummationOverflowError
        If a term's log-magnitude is +inf or NaN.
    """
    if not (tol > 0.0):
        raise InvalidParameterError(f"tol must be positive, got {tol}")
    if max_half_width < 1:
        raise InvalidParameterError(f"max_half_width must be >= 1, got {max_half_width}")
    term_at = _as_callable(log_term)
    log_tol = math.log(tol)

    peak = -math.inf   # running maximum log-magnitude
    acc = 0.0 + 0.0j   # scaled accumulator: true sum = e^peak * acc
    terms = 0

    def add(j: int) -> float:
        nonlocal peak, acc, terms
        lm, ph = term_at(j)
        if math.isnan(lm) or lm == math.inf:
            raise SummationOverflowError(f"term log-magnitude at j={j} is {lm}")
        terms += 1
        if lm == -math.inf:
            return lm
        if lm > peak:
            if peak > -math.inf:
                acc *= math.exp(peak - lm)
            peak = lm
        acc += math.exp(lm - peak) * complex(math.cos(ph), math.sin(ph))
        return lm

    def is_small(lm: float) -> bool:
        mag = abs(acc)
        scale = max(peak + math.log(mag), 0.0) if mag > 0.0 else 0.0
        return lm <= log_tol + scale

    add(0)
    directions = (_Direction(+1), _Direction(-1))
    while not all(d.done for d in directions):
        for d in directions:
            if d.done:
                continue
            if d.cursor > max_half_width:
                side = "positive" if d.step > 0 else "negative"
                raise NonConvergentError(
                    f"series did not settle on the {side} side within |j| <= {max_half_width}"
                )
            lm = add(d.step * d.cursor)
            d.prev, d.last = d.last, lm
            d.cursor += 1
            if is_small(lm):
                d.run += 1
                if d.run >= run_length:
                    d.done = True
            else:
                d.run = 0

    tail = 0.0
    for d in directions:
        if d.last is None or d.last == -math.inf:
            continue
        if d.prev is not None and d.prev > -math.inf:
            r = math.exp(min(d.last - d.prev, 0.0))
            r = min(r, 0.99)
        else:
            r = 0.5
        if d.last <= _LOG_MAX:
            tail += math.exp(d.last) * r / (1.0 - r)
        else:
            tail = math.inf

    mag = abs(acc)
    if mag == 0.0:
        return SeriesValue(-math.inf, 0.0, 0.0 + 0.0j, tail, terms)
    log_magnitude = peak + math.log(mag)
    phase = math.atan2(acc.imag, acc.real)
    if phase <= -math.pi:
        phase += 2.0 * math.pi
    if log_magnitude <= _LOG_MAX:
        m = math.exp(log_magnitude)
        value = complex(m * math.cos(phase), m * math.sin(phase))
    else:
        value = complex(math.inf * math.cos(phase), math.inf * math.sin(phase))
    return SeriesValue(log_magnitude, phase, value, tail, terms)


def convergence_gate(
    q: float, l: float, s: float, boundary_band: float = BOUNDARY_BAND
) -> ConvergenceVerdict:
    """Analytic ratio-test verdict for the squared-norm series.

    The series converges iff q^l > 1 - s and diverges iff q^l < 1 - s; the
    test is inconclusive at equality, so verdicts within `boundary_band` of
    the crossing are reported as BOUNDARY rather than trusted.
    """
    if not (q > 0.0) or not math.isfinite(q):
        raise InvalidParameterError(f"q must be a positive finite real, got {q}")
    if not (s > 0.0) or not math.isfinite(s):
        raise InvalidParameterError(f"s must be a positive finite real, got {s}")
    if not math.isfinite(l):
        raise InvalidParameterError(f"l must be finite, got {l}")
    t = l * math.log(q)
    q_pow_l = math.exp(t) if t <= _LOG_MAX else math.inf
    gate_value = q_pow_l - (1.0 - s)
    if gate_value > boundary_band:
        status = Convergence.CONVERGENT
    elif gate_value < -boundary_band:
        status = Convergence.DIVERGENT
    else:
        status = Convergence.BOUNDARY
    return ConvergenceVerdict(status, gate_value)


def empirical_ratio_verdict(
    log_term: LogTermTable,
    direction: int,
    start: int = 64,
    max_probe: int = 8192,
    settle_tol: float = 1e-9,
    band: float = 1e-6,
) -> Convergence:
    """Classify one tail of a series by measuring its limiting term ratio.

    Probes the outward difference log|t_{j+d}| - log|t_j| at geometrically
    growing |j| until it settles, then classifies the tail by the sign of the
    limit.  This inspects actual partial-sum terms and knows nothing about
    the analytic gate, so it serves as an independent cross-check of it.
    """
    if direction not in (+1, -1):
        raise InvalidParameterError(f"direction must be +1 or -1, got {direction}")
    term_at = _as_callable(log_term)
    j = start
    prev = None
    delta = -math.inf
    while j <= max_probe:
        jj = direction * j
        delta = term_at(jj + direction)[0] - term_at(jj)[0]
        if prev is not None and abs(delta - prev) <= settle_tol * max(1.0, abs(delta)):
            break
        prev = delta
        j *= 2
    if delta < -band:
        return Convergence.CONVERGENT
    if delta > band:
        return Convergence.DIVERGENT
    return Convergence.BOUNDARY


def ratio(num: SeriesValue, den: SeriesValue) -> complex:
    """Quotient of two summed series, formed in log space to dodge overflow."""
    if den.log_magnitude == -math.inf:
        raise ZeroDivisionError("division by a zero series value")
    lm = num.log_magnitude - den.log_magnitude
    if lm > _LOG_MAX:
        raise SummationOverflowError("series ratio exceeds the double range")
    return cmath.exp(complex(lm, num.phase - den.phase))
