"""Exception hierarchy shared by all hardymeans modules."""

from __future__ import annotations


class HardyMeansError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HardyMeansError, ValueError):
    """Input outside the mathematical domain (nonpositive entry, NaN exponent, ...)."""


class UnsupportedParametersError(HardyMeansError, ValueError):
    """Parameter combination the library deliberately does not define (e.g. Gini p == q)."""


class ConfigurationError(HardyMeansError, ValueError):
    """A streaming evaluator was asked for a statistic it was not configured to track."""


class ConvergenceError(HardyMeansError, RuntimeError):
    """Compound-mean iteration did not reach tolerance within the iteration budget."""

    def __init__(self, message: str, last_iterate: tuple[float, ...], iterations: int):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.iterations = iterations


class WitnessNotFoundError(HardyMeansError, RuntimeError):
    """The witness scan exhausted its cap before both indices were located.

    Signals that the requested constant is too large for the scanned range,
    not that the mean is Hardy.
    """

    def __init__(self, message: str, largest_ratio: float, scanned: int):
        super().__init__(message)
        self.largest_ratio = largest_ratio
        self.scanned = scanned


class WitnessValidationError(HardyMeansError, ValueError):
    """A witness failed re-verification of its defining inequalities."""
