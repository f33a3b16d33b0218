"""Exception types shared across the package."""


class QCircleError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(QCircleError, ValueError):
    """A parameter lies outside its mathematical domain (q <= 0, s <= 0, ...)."""


class NonConvergentError(QCircleError, ArithmeticError):
    """A bilateral series is divergent or did not settle within the allowed width."""


class BoundaryVerdictError(QCircleError, ArithmeticError):
    """The convergence gate is inconclusive; summation is refused, the caller decides."""


class SummationOverflowError(QCircleError, OverflowError):
    """A magnitude exceeded the representable double range and cannot be reported."""


class WindowTooNarrowError(QCircleError, ValueError):
    """A truncation window leaves more tail mass than the tolerance allows."""


class DegenerateReferenceError(QCircleError, ArithmeticError):
    """A reference value needed for a ratio underflowed to zero."""
