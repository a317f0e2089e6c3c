"""Exception types shared by every module."""


class BruhatLabError(Exception):
    """Base class for all errors raised by bruhatlab."""


class ConfigurationError(BruhatLabError, ValueError):
    """An unsupported group type or rank was requested."""


class DomainError(BruhatLabError, ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceError(BruhatLabError, RuntimeError):
    """A computation would exceed a configured size cap."""

    def __init__(self, message: str, cap: int | None = None):
        super().__init__(message)
        self.cap = cap


class InvariantViolation(BruhatLabError, AssertionError):
    """A mathematical invariant failed to hold.

    Seeing one of these means either a bug in this package or a
    genuine mathematical counterexample; both are worth reporting.
    """
