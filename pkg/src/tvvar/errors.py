"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, DataError -> 3,
NumericalError (and subclasses) -> 4.
"""


class TvvarError(Exception):
    """Base class for all package errors."""


class ConfigError(TvvarError):
    """Invalid or mutually inconsistent configuration."""


class DataError(TvvarError):
    """Malformed or unusable input data."""


class NumericalError(TvvarError):
    """A numerical procedure failed."""


class BandwidthTooSmallError(NumericalError):
    """No observations fall inside the kernel window at some evaluation point."""

    def __init__(self, tau, h, message=None):
        self.tau = tau
        self.h = h
        super().__init__(
            message
            or f"empty kernel window at tau={tau:.6g} with bandwidth h={h:.6g}"
        )


class SingularDesignError(NumericalError):
    """Weighted regressor Gram matrix is numerically singular."""

    def __init__(self, tau, cond=None):
        self.tau = tau
        self.cond = cond
        detail = f" (condition number {cond:.3e})" if cond is not None else ""
        super().__init__(f"singular local design at tau={tau:.6g}{detail}")


class FactorizationError(NumericalError):
    """Cholesky factorization hit a non-positive pivot."""

    def __init__(self, pivot):
        self.pivot = pivot
        super().__init__(
            f"matrix is not positive definite: leading minor {pivot} is not positive"
        )


class EigenvalueError(NumericalError):
    """Eigenvalue iteration failed to converge."""


class NonStationaryError(NumericalError):
    """Fitted companion matrix is unstable at the requested point."""

    def __init__(self, tau, radius):
        self.tau = tau
        self.radius = radius
        super().__init__(
            f"companion matrix unstable at tau={tau:.6g}: spectral radius {radius:.6g} >= 1"
        )


class InvalidPenaltyError(NumericalError):
    """Lag-order penalty is undefined for the given (T, h)."""
