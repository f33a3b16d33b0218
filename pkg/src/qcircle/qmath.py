"""Scalar q-calculus and the classical Jacobi theta references.

Theta convention, fixed throughout the package:

    theta3(z | tau) = sum_{j in Z} exp(i*pi*tau*j^2 + 2*pi*i*j*z)
    theta2(z | tau) = sum_{j in Z} exp(i*pi*tau*(j+1/2)^2 + 2*pi*i*(j+1/2)*z)

valid for Im(tau) > 0.  With this convention the classical (q -> 1) overlap
sum_j (xi* eta)^{-j} e^{-j^2} equals theta3((i/2pi) ln(xi* eta) | i/pi)
identically, term by term: (xi* eta)^{-j} = e^{2*pi*i*j*z} at
z = (i/2pi) ln(xi* eta).
"""

from __future__ import annotations

import math
from typing import Dict

from .errors import InvalidParameterError
from .series import DEFAULT_TOL, SeriesValue, ratio, sum_bilateral

__all__ = [
    "Q_ONE_BAND",
    "q_number",
    "jackson_derivative",
    "theta3",
    "theta2",
    "theta3_series",
    "theta2_series",
    "theta3_log_derivative",
]

#: |q - 1| below this uses analytic q -> 1 limits instead of closed forms
#: containing 1/ln(q) or 1/(q - 1), which cancel catastrophically there.
Q_ONE_BAND = 1e-6

_LOG_MAX = math.log(1.7976931348623157e308)


def q_number(x: float, q: float) -> float:
    """The q-deformed number [x]_q = (q^x - 1)/(q - 1), extended to real x.

    Strictly increasing in x, bounded above by 1/(1-q) for 0 < q < 1 and
    below by -1/(q-1) for q > 1.  Within ``Q_ONE_BAND`` of q = 1 the value is
    the limit x plus the first-order correction x(x-1)(q-1)/2, which keeps
    the function continuous across the switch.
    """
    if not (q > 0.0) or not math.isfinite(q):
        raise InvalidParameterError(f"q must be a positive finite real, got {q}")
    if not math.isfinite(x):
        raise InvalidParameterError(f"x must be finite, got {x}")
    if abs(q - 1.0) < Q_ONE_BAND:
        return x + x * (x - 1.0) * (q - 1.0) / 2.0
    t = x * math.log(q)
    if t > _LOG_MAX:
        return math.inf / (q - 1.0)
    return math.expm1(t) / (q - 1.0)


def jackson_derivative(coeffs: Dict[int, complex], q: float) -> Dict[int, complex]:
    """Apply the q-difference operator (f(qx) - f(x))/((q-1)x) to a Laurent polynomial.

    `coeffs` maps the power n to the coefficient of x^n; the result is the
    coefficient map of the derivative, each monomial x^n going to
    [n]_q x^(n-1).  Zero coefficients are dropped, so a constant maps to the
    empty dict.
    """
    if not (q > 0.0) or q == 1.0:
        raise InvalidParameterError(f"q must be positive and != 1, got {q}")
    out: Dict[int, complex] = {}
    for n, c in coeffs.items():
        if n == 0 or c == 0:
            continue
        out[n - 1] = out.get(n - 1, 0.0) + q_number(n, q) * c
    return {n: c for n, c in out.items() if c != 0}


def _require_upper_half(tau: complex) -> None:
    if not (tau.imag > 0.0):
        raise InvalidParameterError(f"tau must satisfy Im(tau) > 0, got {tau}")


def theta3_series(z: complex, tau: complex, tol: float = DEFAULT_TOL) -> SeriesValue:
    """theta3(z|tau) as a log-space series value (for overflow-safe ratios)."""
    _require_upper_half(tau)
    z = complex(z)
    tau = complex(tau)

    def term(j: int):
        # exp(i pi tau j^2 + 2 pi i j z): real part of the exponent is the
        # log-magnitude, imaginary part the phase.
        lm = -math.pi * tau.imag * j * j - 2.0 * math.pi * z.imag * j
        ph = math.pi * tau.real * j * j + 2.0 * math.pi * z.real * j
        return lm, ph

    return sum_bilateral(term, tol=tol)


def theta2_series(z: complex, tau: complex, tol: float = DEFAULT_TOL) -> SeriesValue:
    """theta2(z|tau) as a log-space series value."""
    _require_upper_half(tau)
    z = complex(z)
    tau = complex(tau)

    def term(j: int):
        m = j + 0.5
        lm = -math.pi * tau.imag * m * m - 2.0 * math.pi * z.imag * m
        ph = math.pi * tau.real * m * m + 2.0 * math.pi * z.real * m
        return lm, ph

    return sum_bilateral(term, tol=tol)


def theta3(z: complex, tau: complex, tol: float = DEFAULT_TOL) -> complex:
    """Jacobi theta3(z|tau) under the module convention, Im(tau) > 0."""
    return theta3_series(z, tau, tol).value


def theta2(z: complex, tau: complex, tol: float = DEFAULT_TOL) -> complex:
    """Jacobi theta2(z|tau) under the module convention, Im(tau) > 0."""
    return theta2_series(z, tau, tol).value


def theta3_log_derivative(l: float, tol: float = DEFAULT_TOL) -> float:
    """(1/2) d/dl ln theta3(i*l/pi | i/pi), by term-wise differentiation.

    theta3(i*l/pi | i/pi) = sum_j e^{2lj - j^2}, so the quantity equals
    sum_j j e^{2lj - j^2} / sum_j e^{2lj - j^2}: the classical angular-
    momentum expectation.  Term-wise differentiation is exact per term and
    the doubly-fast decay makes it cheap, so no finite differences are used.
    """
    if not math.isfinite(l):
        raise InvalidParameterError(f"l must be finite, got {l}")

    def weight(j: int) -> float:
        return 2.0 * l * j - float(j) * j

    def num_term(j: int):
        if j == 0:
            return -math.inf, 0.0
        return math.log(abs(j)) + weight(j), 0.0 if j > 0 else math.pi

    def den_term(j: int):
        return weight(j), 0.0

    num = sum_bilateral(num_term, tol=tol)
    den = sum_bilateral(den_term, tol=tol)
    if num.log_magnitude == -math.inf:
        return 0.0
    return ratio(num, den).real
