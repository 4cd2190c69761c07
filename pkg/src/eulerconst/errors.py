"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the supported domain of an operation."""


class PrecisionError(DomainError):
    """Request would exceed the documented binary64 cancellation budget."""


class QuadratureError(RuntimeError):
    """Adaptive integration failed; carries the best estimate reached."""

    def __init__(self, message, value, abs_error, evaluations):
        super().__init__(message)
        self.value = value
        self.abs_error = abs_error
        self.evaluations = evaluations


class TailBoundError(QuadratureError):
    """The semi-infinite tail could not be bounded below the requested tolerance."""
