"""Exception types raised across the package."""


class TautkitError(Exception):
    pass


class ResourceCapError(TautkitError):
    """A computation would exceed a configured size cap."""

    def __init__(self, message: str, cap: str | None = None):
        super().__init__(message)
        self.cap = cap


class InterpolationError(TautkitError, ValueError):
    pass


class InsufficientSamplesError(InterpolationError):
    pass


class DegreeBoundsError(InterpolationError):
    pass


class UnsupportedDecorationError(TautkitError, ValueError):
    pass
