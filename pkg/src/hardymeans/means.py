"""Power means and Gini means on finite positive samples.

Evaluators accept any sequence of strictly positive finite numbers. Power
sums are computed with the dominant entry factored out in the log domain
(a max-shifted log-sum-exp in expm1/log1p form), so intermediate values
stay bounded for arbitrary real exponents. A :class:`PrefixEvaluator`
maintains the running statistics needed to read off prefix means in O(1)
per pushed term.

Special cases of the power mean:

    exponent -> -inf : minimum
    exponent  = -1   : harmonic mean
    exponent  =  0   : geometric mean (mean of logarithms)
    exponent  =  1   : arithmetic mean
    exponent -> +inf : maximum

The Gini mean ``(sum a_i^p / sum a_i^q)^(1/(p-q))`` requires ``p != q``;
the ``p == q`` limit case is intentionally unsupported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ConfigurationError, DomainError, UnsupportedParametersError

__all__ = [
    "PowerMean",
    "GiniMean",
    "GaussCompound",
    "MeanDescriptor",
    "PrefixEvaluator",
    "power_mean",
    "gini_mean",
    "required_exponents",
]


def _checked_values(values: Sequence[float]) -> list[float]:
    vals = [float(v) for v in values]
    if not vals:
        raise DomainError("sample must contain at least one entry")
    for v in vals:
        if not 0.0 < v < math.inf:
            raise DomainError(f"sample entries must be positive and finite, got {v!r}")
    return vals


def _check_exponent(exponent: float) -> float:
    exponent = float(exponent)
    if math.isnan(exponent):
        raise DomainError("mean exponent must not be NaN")
    return exponent


def _check_finite_exponent(exponent: float, what: str = "exponent") -> float:
    exponent = float(exponent)
    if not math.isfinite(exponent):
        raise DomainError(f"{what} must be finite, got {exponent!r}")
    return exponent


# ---------------------------------------------------------------------------
# Mean descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerMean:
    """Power mean of a fixed exponent; +-inf select max/min, 0 the geometric mean."""

    exponent: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", _check_exponent(self.exponent))


@dataclass(frozen=True)
class GiniMean:
    """Gini mean with parameters (p, q), p != q."""

    p: float
    q: float

    def __post_init__(self) -> None:
        p = _check_finite_exponent(self.p, "Gini parameter p")
        q = _check_finite_exponent(self.q, "Gini parameter q")
        if p == q:
            raise UnsupportedParametersError(
                "Gini parameters must differ; the p == q limit case is not supported"
            )
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class GaussCompound:
    """Gaussian compound of power means for a nonempty tuple of finite exponents."""

    exponents: tuple[float, ...]

    def __post_init__(self) -> None:
        exps = tuple(
            _check_finite_exponent(e, "compound exponent") for e in self.exponents
        )
        if not exps:
            raise DomainError("compound requires at least one exponent")
        object.__setattr__(self, "exponents", exps)


MeanDescriptor = Union[PowerMean, GiniMean, GaussCompound]


def required_exponents(descriptor: MeanDescriptor) -> frozenset[float]:
    """Finite nonzero exponents a PrefixEvaluator must track for `descriptor`.

    Exponent 0 and +-inf are omitted: the log-sum, minimum and maximum are
    always maintained.
    """
    if isinstance(descriptor, PowerMean):
        candidates: tuple[float, ...] = (descriptor.exponent,)
    elif isinstance(descriptor, GiniMean):
        candidates = (descriptor.p, descriptor.q)
    elif isinstance(descriptor, GaussCompound):
        candidates = descriptor.exponents
    else:
        raise TypeError(f"not a mean descriptor: {descriptor!r}")
    return frozenset(e for e in candidates if math.isfinite(e) and e != 0.0)


# ---------------------------------------------------------------------------
# Batch evaluation
# ---------------------------------------------------------------------------


def power_mean(values: Sequence[float], exponent: float) -> float:
    """Power mean of `values` with the given extended-real exponent.

    For finite nonzero exponents the dominant entry (max for positive, min
    for negative exponents) is factored out in the log domain: with
    x_i = exponent * (log v_i - log pivot) <= 0 the mean is

        pivot * exp(log1p(sum(expm1(x_i)) / n) / exponent),

    which cannot overflow and stays accurate down to vanishingly small
    exponents, where it degrades smoothly into the geometric mean.
    """
    vals = _checked_values(values)
    exponent = _check_exponent(exponent)
    lo = min(vals)
    hi = max(vals)
    if lo == hi:
        return lo
    if exponent == math.inf:
        return hi
    if exponent == -math.inf:
        return lo
    n = len(vals)
    logs = [math.log(v) for v in vals]
    if exponent == 0.0:
        return math.exp(math.fsum(logs) / n)
    return math.exp(_log_power_moment(logs, exponent) / exponent)


def _log_power_moment(logs: list[float], exponent: float) -> float:
    """log(mean of v^exponent) from entry logs, dominant entry factored out."""
    if exponent == 0.0:
        return 0.0
    n = len(logs)
    log_pivot = max(logs) if exponent > 0.0 else min(logs)
    shifted = math.fsum(math.expm1(exponent * (lv - log_pivot)) for lv in logs)
    return exponent * log_pivot + math.log1p(shifted / n)


def gini_mean(values: Sequence[float], p: float, q: float) -> float:
    """Gini mean (sum v^p / sum v^q)^(1/(p-q)) on positive `values`, p != q.

    The quotient amplifies rounding by 1/(p-q), so expect roughly
    ``eps / abs(p - q)`` relative error as the parameters approach each
    other.
    """
    vals = _checked_values(values)
    p = _check_finite_exponent(p, "Gini parameter p")
    q = _check_finite_exponent(q, "Gini parameter q")
    if p == q:
        raise UnsupportedParametersError(
            "Gini parameters must differ; the p == q limit case is not supported"
        )
    lo = min(vals)
    if lo == max(vals):
        return lo
    logs = [math.log(v) for v in vals]
    return math.exp((_log_power_moment(logs, p) - _log_power_moment(logs, q)) / (p - q))


# ---------------------------------------------------------------------------
# Streaming prefix statistics
# ---------------------------------------------------------------------------


class PrefixEvaluator:
    """Running power sums over a growing prefix of positive terms.

    Tracks ``sum(a_i ** e)`` for every configured finite nonzero exponent
    ``e``, plus the log-sum, count, minimum and maximum, so that any power
    or Gini mean over the prefix is available in O(1) after each push.

    The stored sums are the raw power sums, so inverting them loses
    precision once ``abs(e)`` drops below roughly 1e-3 (the batch
    evaluators stay accurate there) and they can overflow for extreme
    exponent/data combinations. Within that envelope prefix means agree
    with batch evaluation to better than 1e-12 relative.

    The evaluator is a plain mutable value: use it from a single thread of
    control, or copy it per thread.
    """

    __slots__ = ("_sums", "_log_sum", "_count", "_min", "_max")

    def __init__(self, exponents: Iterable[float] = ()):
        sums: dict[float, float] = {}
        for e in exponents:
            e = _check_exponent(e)
            if math.isfinite(e) and e != 0.0:
                sums[e] = 0.0
        self._sums = sums
        self._log_sum = 0.0
        self._count = 0
        self._min = math.inf
        self._max = 0.0

    @classmethod
    def for_means(cls, *descriptors: MeanDescriptor) -> "PrefixEvaluator":
        tracked: set[float] = set()
        for d in descriptors:
            tracked |= required_exponents(d)
        return cls(tracked)

    @property
    def count(self) -> int:
        return self._count

    @property
    def minimum(self) -> float:
        self._require_nonempty()
        return self._min

    @property
    def maximum(self) -> float:
        self._require_nonempty()
        return self._max

    @property
    def log_sum(self) -> float:
        return self._log_sum

    @property
    def tracked_exponents(self) -> frozenset[float]:
        return frozenset(self._sums)

    def _require_nonempty(self) -> None:
        if self._count == 0:
            raise DomainError("no terms pushed yet")

    def push(self, value: float) -> None:
        """Append one positive term to the prefix and update all statistics."""
        v = float(value)
        if not 0.0 < v < math.inf:
            raise DomainError(f"pushed terms must be positive and finite, got {value!r}")
        sums = self._sums
        try:
            increments = [(e, v**e) for e in sums]
        except OverflowError:
            # state is untouched, so the evaluator stays usable
            raise DomainError(
                f"running power sum overflowed binary64 at term {value!r}"
            ) from None
        self._count += 1
        self._log_sum += math.log(v)
        for e, inc in increments:
            sums[e] += inc
        if v < self._min:
            self._min = v
        if v > self._max:
            self._max = v

    def extend(self, values: Iterable[float]) -> None:
        for v in values:
            self.push(v)

    def power_sum(self, exponent: float) -> float:
        """Running sum of term**exponent; exponent 0 returns the count."""
        exponent = _check_exponent(exponent)
        if exponent == 0.0:
            return float(self._count)
        try:
            return self._sums[exponent]
        except KeyError:
            raise ConfigurationError(
                f"exponent {exponent!r} is not tracked by this evaluator"
            ) from None

    def power_mean(self, exponent: float) -> float:
        """Power mean of the pushed prefix."""
        self._require_nonempty()
        exponent = _check_exponent(exponent)
        if exponent == math.inf:
            return self._max
        if exponent == -math.inf:
            return self._min
        if exponent == 0.0:
            if self._min == self._max:
                return self._min
            return math.exp(self._log_sum / self._count)
        total = self.power_sum(exponent)
        if self._min == self._max:
            return self._min
        return (total / self._count) ** (1.0 / exponent)

    def gini_mean(self, p: float, q: float) -> float:
        """Gini mean of the pushed prefix, p != q."""
        self._require_nonempty()
        if float(p) == float(q):
            raise UnsupportedParametersError(
                "Gini parameters must differ; the p == q limit case is not supported"
            )
        sum_p = self.power_sum(p)
        sum_q = self.power_sum(q)
        if self._min == self._max:
            return self._min
        return math.exp((math.log(sum_p) - math.log(sum_q)) / (p - q))

    def power_mean_image(self, exponents: Sequence[float]) -> list[float]:
        """Vector of prefix power means, one per exponent."""
        return [self.power_mean(e) for e in exponents]
