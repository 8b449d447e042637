"""Exception hierarchy shared by every module of the package."""


class QuatVietaError(Exception):
    """Base class for all errors raised by quatvieta."""


class ZeroDivisorError(QuatVietaError, ZeroDivisionError):
    """Inverse of the zero quaternion was requested."""


class DomainError(QuatVietaError, ValueError):
    """An argument lies outside the domain of the operation."""


class ZeroPolynomialError(QuatVietaError, ValueError):
    """Every coefficient of the polynomial is zero."""


class DegenerateInputError(QuatVietaError, ValueError):
    """The real polynomial handed to the root finder has no usable leading term."""


class NoConvergenceError(QuatVietaError):
    """Simultaneous iteration hit its iteration cap.

    Attributes
    ----------
    iterations : int
        Iterations performed before giving up.
    residual : float
        Worst relative residual among the current approximations.
    """

    def __init__(self, message, iterations=0, residual=float("nan")):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class ClusterError(NoConvergenceError):
    """Computed roots could not be grouped into a consistent conjugate-closed set."""


class ResidualTooLargeError(QuatVietaError):
    """A reported root fails its own defining equation."""

    def __init__(self, message, residual=float("nan"), bound=float("nan")):
        super().__init__(message)
        self.residual = residual
        self.bound = bound


class PreconditionViolated(QuatVietaError, ValueError):
    """An identity was requested outside the hypotheses under which it holds."""


class SchemaError(QuatVietaError, ValueError):
    """Input JSON does not match the polynomial / root-set schema."""
