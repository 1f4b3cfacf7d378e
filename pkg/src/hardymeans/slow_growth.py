"""High-precision constants of the slow-growth ratio lower bound.

The ratio lower bound ``coefficient * (log n)^exponent`` of the two-point
compound analysis grows, but extremely slowly: for typical parameters the
exponent sits near a few percent, and the n at which the bound first reaches
even 1 is astronomically large. Everything here is computed in the log
domain with mpmath, since that n itself fits in no numeric type; what gets
reported is log10 of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal

import mpmath as mp

from .compound import BoundParams
from .errors import DomainError

__all__ = [
    "DEFAULT_DIGITS",
    "growth_exponent",
    "threshold_log10",
    "GrowthReport",
    "growth_report",
    "round_significant",
]

DEFAULT_DIGITS = 50
_GUARD_DIGITS = 10


def _check_digits(digits: int) -> int:
    if not (isinstance(digits, int) and digits >= 1):
        raise DomainError("digits must be an integer >= 1")
    return digits


def growth_exponent(params: BoundParams, digits: int = DEFAULT_DIGITS) -> mp.mpf:
    """Exponent of log(n) in the ratio lower bound, to `digits` significant digits.

    Computed as w / (lam + w) with w = log((p+1)/(theta^-lam + p)) / log(p+1).
    Always strictly between 0 and 1.
    """
    digits = _check_digits(digits)
    with mp.workdps(digits + _GUARD_DIGITS):
        p = mp.mpf(params.p)
        lam = mp.mpf(params.lam)
        theta = mp.mpf(params.theta)
        w = mp.log((p + 1) / (theta**-lam + p)) / mp.log(p + 1)
        value = w / (lam + w)
    with mp.workdps(digits):
        return +value


def threshold_log10(
    params: BoundParams,
    target: float = 1.0,
    digits: int = DEFAULT_DIGITS,
) -> mp.mpf:
    """log10 of the n at which the ratio lower bound reaches `target`.

    Solves coefficient * (log n)^exponent = target in the log domain:
    log10 n = (target * theta * (p+1))^(1/exponent) / log(10). The n itself
    is never materialised.
    """
    digits = _check_digits(digits)
    target_mp = mp.mpf(target)
    if not target_mp > 0:
        raise DomainError("target must be positive")
    with mp.workdps(digits + _GUARD_DIGITS):
        exponent = growth_exponent(params, digits + _GUARD_DIGITS)
        scaled = target_mp * mp.mpf(params.theta) * (params.p + 1)
        value = scaled ** (1 / exponent) / mp.log(10)
    with mp.workdps(digits):
        return +value


def round_significant(value: mp.mpf, sig: int = 3) -> str:
    """Render `value` at `sig` significant figures with round-half-even.

    Uses plain decimal notation for moderate magnitudes, scientific
    otherwise (e.g. '0.0341', '2.86e+22').
    """
    if sig < 1:
        raise DomainError("sig must be >= 1")
    d = Decimal(mp.nstr(value, sig + 12))
    if d == 0:
        return "0"
    quantum = Decimal(1).scaleb(d.adjusted() - sig + 1)
    q = d.quantize(quantum, rounding=ROUND_HALF_EVEN)
    # quantize may bump the magnitude up a decade (e.g. 9.99 -> 10.0)
    if q.adjusted() != d.adjusted():
        quantum = Decimal(1).scaleb(q.adjusted() - sig + 1)
        q = q.quantize(quantum, rounding=ROUND_HALF_EVEN)
    if -4 <= q.adjusted() < 6:
        return str(q)
    return format(q, f".{sig - 1}e")


@dataclass(frozen=True)
class GrowthReport:
    """Slow-growth constants plus display renderings.

    Full-precision values are decimal strings at `digits` significant
    digits; the `*_rounded` fields use 3 significant figures.
    """

    p: int
    lam: float
    theta: float
    target: float
    digits: int
    exponent: mp.mpf
    coefficient: mp.mpf
    threshold_log10: mp.mpf
    exponent_str: str
    coefficient_str: str
    threshold_log10_str: str
    exponent_rounded: str
    coefficient_rounded: str
    threshold_log10_rounded: str


def growth_report(
    params: BoundParams,
    target: float = 1.0,
    digits: int = DEFAULT_DIGITS,
) -> GrowthReport:
    """Assemble exponent, coefficient and crossing threshold in one report."""
    digits = _check_digits(digits)
    exponent = growth_exponent(params, digits)
    with mp.workdps(digits):
        coefficient = 1 / (mp.mpf(params.theta) * (params.p + 1))
    threshold = threshold_log10(params, target, digits)
    return GrowthReport(
        p=params.p,
        lam=params.lam,
        theta=params.theta,
        target=float(target),
        digits=digits,
        exponent=exponent,
        coefficient=coefficient,
        threshold_log10=threshold,
        exponent_str=mp.nstr(exponent, digits),
        coefficient_str=mp.nstr(coefficient, digits),
        threshold_log10_str=mp.nstr(threshold, digits),
        exponent_rounded=round_significant(exponent),
        coefficient_rounded=round_significant(coefficient),
        threshold_log10_rounded=round_significant(threshold),
    )
