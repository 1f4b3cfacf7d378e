"""Gaussian compounding of power means and the two-point growth machinery.

Compounding iterates ``v -> (P_e1(v), ..., P_ep(v))`` for a tuple of finite
power-mean exponents until the iterate's relative spread drops below
tolerance; all exponents then share a common limit, which is reported as the
midpoint of the final min/max bracket.

The two-point helpers study the compound built from one exponent 1 and p
copies of a negative exponent -lam. Restricted to vectors ``(a, b, ..., b)``
that compound becomes a function of two variables; a rescaling step that
shrinks the first coordinate and inflates the second leaves a weighted
geometric mean invariant, which yields an explicit lower bound on the
two-point value. These pieces feed the divergence analysis in
:mod:`hardymeans.hardy`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ConvergenceError, DomainError
from .means import (
    GaussCompound,
    GiniMean,
    MeanDescriptor,
    PowerMean,
    PrefixEvaluator,
    gini_mean,
    power_mean,
)

__all__ = [
    "CompoundSettings",
    "CompoundResult",
    "DEFAULT_SETTINGS",
    "compound_iterate",
    "compound_mean",
    "evaluate_mean",
    "prefix_value",
    "BoundParams",
    "BoundCheck",
    "compound_two_point",
    "rescale_step",
    "invariant_mean",
    "check_compound_lower_bound",
    "rescale_monotone",
]


@dataclass(frozen=True)
class CompoundSettings:
    """Stopping rule for compound iteration.

    Iteration stops once ``(max - min) / min`` of the iterate is below
    `rel_tolerance`; the spread contracts at least geometrically for finite
    exponents, so 200 iterations is a generous budget at sane tolerances.
    """

    rel_tolerance: float = 1e-12
    max_iterations: int = 200

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rel_tolerance) and self.rel_tolerance > 0.0):
            raise DomainError("rel_tolerance must be positive and finite")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be at least 1")


DEFAULT_SETTINGS = CompoundSettings()


@dataclass(frozen=True)
class CompoundResult:
    value: float
    iterations: int


def _checked_exponents(exponents: Sequence[float]) -> tuple[float, ...]:
    exps = tuple(float(e) for e in exponents)
    if not exps:
        raise DomainError("compound requires at least one exponent")
    for e in exps:
        if not math.isfinite(e):
            raise DomainError(
                f"compound exponents must be finite, got {e!r}; "
                "min/max factors need not contract"
            )
    return exps


def compound_iterate(
    values: Sequence[float],
    exponents: Sequence[float],
    settings: CompoundSettings | None = None,
) -> CompoundResult:
    """Iterate the power-mean image map on `values` until the spread converges.

    Returns the midpoint of the final [min, max] bracket together with the
    number of image steps taken. The true common limit lies inside every
    bracket, so the midpoint is off by at most half the final spread.

    Raises ConvergenceError (carrying the last iterate) if the budget runs out.
    """
    cfg = settings or DEFAULT_SETTINGS
    exps = _checked_exponents(exponents)
    vec = [float(v) for v in values]
    if not vec:
        raise DomainError("sample must contain at least one entry")
    for v in vec:
        if not 0.0 < v < math.inf:
            raise DomainError(f"sample entries must be positive and finite, got {v!r}")
    iterations = 0
    lo = min(vec)
    hi = max(vec)
    while (hi - lo) / lo >= cfg.rel_tolerance:
        if iterations >= cfg.max_iterations:
            raise ConvergenceError(
                f"compound iteration did not converge within {cfg.max_iterations} "
                f"steps (relative spread {(hi - lo) / lo:.3e})",
                last_iterate=tuple(vec),
                iterations=iterations,
            )
        vec = [power_mean(vec, e) for e in exps]
        iterations += 1
        lo = min(vec)
        hi = max(vec)
    return CompoundResult(value=0.5 * (lo + hi), iterations=iterations)


def compound_mean(
    values: Sequence[float],
    exponents: Sequence[float],
    settings: CompoundSettings | None = None,
) -> float:
    """Compound mean of a sample of any length.

    The first image step maps the n-vector onto the power-mean vector of
    length ``len(exponents)``; iteration then proceeds there.
    """
    exps = _checked_exponents(exponents)
    image = [power_mean(values, e) for e in exps]
    return compound_iterate(image, exps, settings).value


def evaluate_mean(
    descriptor: MeanDescriptor,
    values: Sequence[float],
    settings: CompoundSettings | None = None,
) -> float:
    """Evaluate any mean descriptor on a batch sample."""
    if isinstance(descriptor, PowerMean):
        return power_mean(values, descriptor.exponent)
    if isinstance(descriptor, GiniMean):
        return gini_mean(values, descriptor.p, descriptor.q)
    if isinstance(descriptor, GaussCompound):
        return compound_mean(values, descriptor.exponents, settings)
    raise TypeError(f"not a mean descriptor: {descriptor!r}")


def prefix_value(
    evaluator: PrefixEvaluator,
    descriptor: MeanDescriptor,
    settings: CompoundSettings | None = None,
) -> float:
    """Mean of the pushed prefix, read from running statistics.

    For compound descriptors the prefix reduces to its power-mean image,
    after which ordinary compound iteration applies.
    """
    if isinstance(descriptor, PowerMean):
        return evaluator.power_mean(descriptor.exponent)
    if isinstance(descriptor, GiniMean):
        return evaluator.gini_mean(descriptor.p, descriptor.q)
    if isinstance(descriptor, GaussCompound):
        image = evaluator.power_mean_image(descriptor.exponents)
        return compound_iterate(image, descriptor.exponents, settings).value
    raise TypeError(f"not a mean descriptor: {descriptor!r}")


# ---------------------------------------------------------------------------
# Two-point analysis of the compound with exponents (1, -lam, ..., -lam)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundParams:
    """Parameters of the two-point growth bound.

    p      number of low-exponent factors (the -lam copies), integer >= 1
    lam    magnitude of the negative exponent, > 0
    theta  slack factor of the bound, > 1
    """

    p: int
    lam: float
    theta: float

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and self.p >= 1):
            raise DomainError("p must be an integer >= 1")
        lam = float(self.lam)
        theta = float(self.theta)
        if not (math.isfinite(lam) and lam > 0.0):
            raise DomainError("lam must be positive and finite")
        if not (math.isfinite(theta) and theta > 1.0):
            raise DomainError("theta must be finite and > 1")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "theta", theta)

    @property
    def compound_exponents(self) -> tuple[float, ...]:
        return (1.0,) + (-self.lam,) * self.p

    @property
    def gain(self) -> float:
        """Multiplier applied to the second coordinate by one rescale step."""
        return ((self.p + 1) / (self.theta**-self.lam + self.p)) ** (1.0 / self.lam)

    @property
    def weight(self) -> float:
        """Exponent of the first coordinate in the invariant mean.

        Equals ``log(gain**lam) / log(p + 1)``, always in (0, 1) for theta > 1.
        """
        return math.log((self.p + 1) / (self.theta**-self.lam + self.p)) / math.log(
            self.p + 1
        )

    @property
    def growth_exponent(self) -> float:
        """Exponent of log(n) in the ratio lower bound: weight / (lam + weight)."""
        w = self.weight
        return w / (self.lam + w)

    @property
    def coefficient(self) -> float:
        """Constant factor of the ratio lower bound: 1 / (theta * (p + 1))."""
        return 1.0 / (self.theta * (self.p + 1))


def _check_pair(a: float, b: float) -> tuple[float, float]:
    a = float(a)
    b = float(b)
    if not (0.0 < a < math.inf and 0.0 < b < math.inf):
        raise DomainError(f"coordinates must be positive and finite, got ({a!r}, {b!r})")
    return a, b


def compound_two_point(
    a: float,
    b: float,
    params: BoundParams,
    settings: CompoundSettings | None = None,
) -> float:
    """Compound mean of ``(a, b, ..., b)`` under exponents ``(1, -lam, ..., -lam)``.

    Strictly between min(a, b) and max(a, b) whenever a != b, and homogeneous
    of degree one in (a, b).
    """
    a, b = _check_pair(a, b)
    vec = (a,) + (b,) * params.p
    return compound_iterate(vec, params.compound_exponents, settings).value


def rescale_step(a: float, b: float, params: BoundParams) -> tuple[float, float]:
    """One step of the two-point rescaling flow: (a, b) -> (a/(p+1), gain*b).

    Iterating drives the first coordinate to 0 and the second to infinity,
    while :func:`invariant_mean` stays fixed.
    """
    a, b = _check_pair(a, b)
    return a / (params.p + 1), params.gain * b


def invariant_mean(a: float, b: float, params: BoundParams) -> float:
    """Weighted geometric mean ``(a^w * b^lam)^(1/(lam+w))`` fixed by the rescale step."""
    a, b = _check_pair(a, b)
    w = params.weight
    return math.exp((w * math.log(a) + params.lam * math.log(b)) / (params.lam + w))


@dataclass(frozen=True)
class BoundCheck:
    lhs: float
    rhs: float
    holds: bool


def check_compound_lower_bound(
    a: float,
    b: float,
    params: BoundParams,
    settings: CompoundSettings | None = None,
) -> BoundCheck:
    """Check ``two_point(a, b) > invariant_mean(a, b) / (theta * (p + 1))`` for a > b.

    This is the inequality that converts the invariant mean into a concrete
    lower bound on the compound value.
    """
    a, b = _check_pair(a, b)
    if not a > b:
        raise DomainError("lower-bound check requires a > b")
    lhs = compound_two_point(a, b, params, settings)
    rhs = invariant_mean(a, b, params) / (params.theta * (params.p + 1))
    return BoundCheck(lhs=lhs, rhs=rhs, holds=lhs > rhs)


def rescale_monotone(
    a: float,
    b: float,
    params: BoundParams,
    settings: CompoundSettings | None = None,
) -> bool:
    """Whether the two-point value does not increase along one rescale step.

    Valid on the region ``a > theta * b``. Allows slack of a few units of the
    iteration tolerance, since both sides are midpoints of converged brackets.
    """
    a, b = _check_pair(a, b)
    if not a > params.theta * b:
        raise DomainError("rescale monotonicity requires a > theta * b")
    cfg = settings or DEFAULT_SETTINGS
    before = compound_two_point(a, b, params, cfg)
    after = compound_two_point(*rescale_step(a, b, params), params, cfg)
    return after <= before * (1.0 + 4.0 * cfg.rel_tolerance)
