"""Exception types raised by the solver."""


class Stokes2Error(Exception):
    """Base class for all errors raised by :mod:`stokes2`."""


class NearCriticalError(Stokes2Error, ValueError):
    """The frequency lies inside the guard band around a critical frequency."""


class NoDiscreteZeroError(Stokes2Error):
    """The dispersion function has no zero off the real axis."""


class BranchTrackingError(Stokes2Error):
    """The continuous branch of ``log G`` could not be followed."""


class DegenerateInputError(Stokes2Error, ValueError):
    pass


class ConvergenceError(Stokes2Error):
    """An iterative method stopped before reaching its tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
