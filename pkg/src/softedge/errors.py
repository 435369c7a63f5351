"""Exception types shared across the package."""


class SoftEdgeError(Exception):
    """Base class for all errors raised by :mod:`softedge`."""


class DomainError(SoftEdgeError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapabilityError(SoftEdgeError):
    """The request is mathematically valid but outside the supported range."""


class UnsupportedOrderError(SoftEdgeError):
    """An expansion order beyond the tabulated depth was requested."""


class InconsistentSystemError(SoftEdgeError):
    """An overdetermined polynomial system has no (unique) exact solution."""


class NonIntegrableTermError(SoftEdgeError):
    """Termwise integration left a nonzero AI coefficient in a correction term."""


class QuadratureError(SoftEdgeError):
    """Adaptive quadrature failed to reach the requested tolerance.

    The best available estimate is attached as ``estimate``.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
