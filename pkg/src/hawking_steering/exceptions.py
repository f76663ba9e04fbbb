"""Exceptions raised by hawking-steering."""

from typing import Any


class HawkingSteeringError(ValueError):
    """Base class for every error raised by this package."""


class InvalidDimensionError(HawkingSteeringError):
    """A mode count or matrix dimension is not usable."""


class ContractViolationError(HawkingSteeringError):
    """An input breaks a precondition (asymmetric matrix, bad index list, shape mismatch)."""


class DomainError(HawkingSteeringError):
    """A numeric input lies outside the domain of the operation.

    Parameters
    ----------
    message : str
        Human readable description.
    value : Any
        The offending value (eigenvalue, determinant, temperature, ...).
    """

    def __init__(self, message: str, value: Any = None):
        super().__init__(message)
        self.value = value


class SingularBlockError(DomainError):
    """The steering-party block of a covariance matrix cannot be inverted."""

    def __init__(self, message: str, condition: float):
        super().__init__(message, value=condition)
        self.condition = condition


class ParameterRangeError(DomainError):
    """A derived parameter exceeds the overflow guard."""


class ConfigError(HawkingSteeringError):
    """Sweep or CLI configuration is invalid."""


class OutputError(OSError):
    """Results could not be written."""


class AuditError(DomainError):
    """Closed-form and general-path steering disagree on an audited row."""


class UsageError(ConfigError):
    """Command-line usage is invalid."""
