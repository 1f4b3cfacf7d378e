"""Hardy-property classification and the numeric falsification engine.

A mean is Hardy when some constant C bounds the summed prefix means by C
times the term sum, uniformly over all summable positive sequences.
Verdicts here come from closed-form criteria:

    power mean       Hardy iff exponent < 1
    compound mean    Hardy iff max(exponents) < 1
    Gini mean        Hardy iff min(p, q) <= 0 and max(p, q) < 1

Numeric traces never decide a verdict; they demonstrate it. When the
prefix-mean to last-term ratio of a divergent vanishing sequence grows
without bound, splicing a geometric tail onto a long enough prefix yields a
finite, checkable certificate that a given constant C fails. The library can
therefore only ever refute Hardiness (one sequence suffices); confirming it
would require a bound over every summable sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .compound import BoundParams, CompoundSettings, compound_iterate, compound_two_point
from .errors import (
    DomainError,
    UnsupportedParametersError,
    WitnessNotFoundError,
    WitnessValidationError,
)
from .means import (
    GaussCompound,
    GiniMean,
    MeanDescriptor,
    PowerMean,
    PrefixEvaluator,
)

__all__ = [
    "HardyVerdict",
    "classify_power",
    "classify_gauss",
    "classify_gini",
    "classify",
    "reduce_gini",
    "SequenceSpec",
    "harmonic_sequence",
    "explicit_sequence",
    "custom_sequence",
    "TraceRecord",
    "RatioTrace",
    "ratio_trace",
    "iter_ratio_trace",
    "gini_ratio_lower_bound",
    "compound_ratio_lower_bound",
    "ChainLedger",
    "chain_check",
    "Witness",
    "WitnessCheck",
    "build_witness",
    "verify_witness",
]


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

POWER_RULE = "Hardy iff exponent < 1"
GAUSS_RULE = "Hardy iff max(exponents) < 1"
GINI_RULE = "Hardy iff min(p, q) <= 0 and max(p, q) < 1"


@dataclass(frozen=True)
class HardyVerdict:
    """Outcome of a closed-form Hardy classification.

    `reason` names the clause that decided; `rule` is the full criterion the
    clause belongs to.
    """

    is_hardy: bool
    reason: str
    rule: str


def classify_power(exponent: float) -> HardyVerdict:
    """Classify the power mean of the given extended-real exponent."""
    exponent = float(exponent)
    if math.isnan(exponent):
        raise DomainError("power mean exponent must not be NaN")
    if exponent < 1.0:
        return HardyVerdict(True, "exponent < 1", POWER_RULE)
    return HardyVerdict(False, "exponent >= 1", POWER_RULE)


def classify_gauss(exponents) -> HardyVerdict:
    """Classify the Gaussian compound of a nonempty tuple of finite exponents."""
    exps = tuple(float(e) for e in exponents)
    if not exps:
        raise DomainError("compound requires at least one exponent")
    for e in exps:
        if not math.isfinite(e):
            raise DomainError(f"compound exponents must be finite, got {e!r}")
    top = max(exps)
    if top < 1.0:
        return HardyVerdict(True, "max(exponents) < 1", GAUSS_RULE)
    return HardyVerdict(False, "max(exponents) >= 1", GAUSS_RULE)


def classify_gini(p: float, q: float) -> HardyVerdict:
    """Classify the Gini mean with parameters (p, q), p != q.

    Both clauses are necessary; `reason` reports the one that fails (the
    max clause takes precedence when both do).
    """
    p = float(p)
    q = float(q)
    if math.isnan(p) or math.isnan(q) or math.isinf(p) or math.isinf(q):
        raise DomainError("Gini parameters must be finite")
    if p == q:
        raise UnsupportedParametersError(
            "Gini parameters must differ; the p == q limit case is not supported"
        )
    if max(p, q) >= 1.0:
        return HardyVerdict(False, "max(p, q) >= 1", GINI_RULE)
    if min(p, q) > 0.0:
        return HardyVerdict(False, "min(p, q) > 0", GINI_RULE)
    return HardyVerdict(True, "min(p, q) <= 0 and max(p, q) < 1", GINI_RULE)


def classify(descriptor: MeanDescriptor) -> HardyVerdict:
    """Classify any mean descriptor."""
    if isinstance(descriptor, PowerMean):
        return classify_power(descriptor.exponent)
    if isinstance(descriptor, GiniMean):
        return classify_gini(descriptor.p, descriptor.q)
    if isinstance(descriptor, GaussCompound):
        return classify_gauss(descriptor.exponents)
    raise TypeError(f"not a mean descriptor: {descriptor!r}")


def reduce_gini(p: float, q: float) -> GiniMean:
    """Dominated reduction of a non-Hardy Gini mean to the family (1, -k).

    Requires max(p, q) >= 1. Returns GiniMean(1, -k) with the smallest
    natural k >= 1 satisfying -k <= min(p, q); by joint monotonicity in the
    parameters the reduced mean is a pointwise minorant of the original.
    """
    p = float(p)
    q = float(q)
    if not max(p, q) >= 1.0:
        raise DomainError("reduction applies only when max(p, q) >= 1")
    k = max(1, math.ceil(-min(p, q)))
    return GiniMean(1.0, -float(k))


# ---------------------------------------------------------------------------
# Sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SequenceSpec:
    """A positive sequence fed to traces and witnesses.

    `divergent_sum` and `vanishing_terms` record the hypotheses the
    falsification argument needs; for custom rules they are caller
    assertions, trusted and echoed into the witness ledger.
    """

    kind: str
    terms: tuple[float, ...] = ()
    rule: Callable[[int], float] | None = None
    divergent_sum: bool = False
    vanishing_terms: bool = False

    def term(self, n: int) -> float:
        """n-th term, 1-based."""
        if n < 1:
            raise DomainError("term index must be >= 1")
        if self.kind == "harmonic":
            return 1.0 / n
        if self.kind == "explicit":
            if n > len(self.terms):
                raise DomainError(
                    f"explicit sequence has {len(self.terms)} terms, index {n} requested"
                )
            return self.terms[n - 1]
        value = float(self.rule(n))  # type: ignore[misc]
        if not 0.0 < value < math.inf:
            raise DomainError(f"sequence rule produced a nonpositive term at n={n}")
        return value

    def iter_terms(self) -> Iterator[float]:
        """Terms in order; infinite for harmonic/custom, finite for explicit."""
        if self.kind == "harmonic":
            n = 1
            while True:
                yield 1.0 / n
                n += 1
        elif self.kind == "explicit":
            yield from self.terms
        else:
            n = 1
            while True:
                yield self.term(n)
                n += 1

    def bounded_length(self, cap: int) -> int:
        """Largest usable index not exceeding `cap`."""
        if self.kind == "explicit":
            return min(cap, len(self.terms))
        return cap

    def label(self) -> str:
        if self.kind == "explicit":
            return f"explicit[{len(self.terms)}]"
        return self.kind


def harmonic_sequence() -> SequenceSpec:
    """The sequence 1, 1/2, 1/3, ...; divergent sum, vanishing terms."""
    return SequenceSpec(kind="harmonic", divergent_sum=True, vanishing_terms=True)


def explicit_sequence(values) -> SequenceSpec:
    """A finite list of positive terms."""
    terms = tuple(float(v) for v in values)
    if not terms:
        raise DomainError("explicit sequence must contain at least one term")
    for v in terms:
        if not 0.0 < v < math.inf:
            raise DomainError(f"sequence terms must be positive and finite, got {v!r}")
    return SequenceSpec(kind="explicit", terms=terms)


def custom_sequence(
    rule: Callable[[int], float],
    *,
    divergent_sum: bool,
    vanishing_terms: bool,
) -> SequenceSpec:
    """A term rule n -> a_n. Divergence and vanishing are caller assertions."""
    return SequenceSpec(
        kind="custom",
        rule=rule,
        divergent_sum=divergent_sum,
        vanishing_terms=vanishing_terms,
    )


# ---------------------------------------------------------------------------
# Incremental prefix-mean stepper
# ---------------------------------------------------------------------------


def _mean_stepper(
    descriptor: MeanDescriptor,
    settings: CompoundSettings | None = None,
) -> Callable[[float], float]:
    """One-term-at-a-time prefix mean: each call pushes a term, returns the mean.

    Specialised closures keep the per-term cost flat so exhaustive scans to
    10^7 terms stay cheap. Terms are trusted positive (callers validate).
    """
    if isinstance(descriptor, PowerMean):
        lam = descriptor.exponent
        if lam == math.inf:
            state = [0.0]

            def step_max(a: float) -> float:
                if a > state[0]:
                    state[0] = a
                return state[0]

            return step_max
        if lam == -math.inf:
            state = [math.inf]

            def step_min(a: float) -> float:
                if a < state[0]:
                    state[0] = a
                return state[0]

            return step_min
        if lam == 0.0:
            acc = [0.0, 0]

            def step_geo(a: float) -> float:
                acc[0] += math.log(a)
                acc[1] += 1
                return math.exp(acc[0] / acc[1])

            return step_geo
        inv = 1.0 / lam
        acc2 = [0.0, 0]

        def step_pow(a: float) -> float:
            acc2[0] += a**lam
            acc2[1] += 1
            return (acc2[0] / acc2[1]) ** inv

        return step_pow

    if isinstance(descriptor, GiniMean):
        p = descriptor.p
        q = descriptor.q
        inv_pq = 1.0 / (p - q)
        sums = [0.0, 0.0, 0]

        def step_gini(a: float) -> float:
            sums[0] += a**p
            sums[1] += a**q
            sums[2] += 1
            return (sums[0] / sums[1]) ** inv_pq

        return step_gini

    if isinstance(descriptor, GaussCompound):
        evaluator = PrefixEvaluator.for_means(descriptor)
        exps = descriptor.exponents

        def step_compound(a: float) -> float:
            evaluator.push(a)
            image = evaluator.power_mean_image(exps)
            return compound_iterate(image, exps, settings).value

        return step_compound

    raise TypeError(f"not a mean descriptor: {descriptor!r}")


# ---------------------------------------------------------------------------
# Ratio traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TraceRecord:
    n: int
    term: float
    mean_value: float
    ratio: float


@dataclass(frozen=True)
class RatioTrace:
    """Sampled diagnostic r_n = mean(a_1..a_n) / a_n along a sequence."""

    descriptor: MeanDescriptor
    sequence: SequenceSpec
    records: tuple[TraceRecord, ...]

    @property
    def last(self) -> TraceRecord:
        return self.records[-1]


def _sample_points(limit: int, stride_ratio: float) -> Iterator[int]:
    """1 = n_1 < n_2 < ... <= limit, geometric with the given ratio, limit included."""
    n = 1
    while n < limit:
        yield n
        n = max(n + 1, math.ceil(n * stride_ratio))
    yield limit


def iter_ratio_trace(
    descriptor: MeanDescriptor,
    sequence: SequenceSpec,
    limit: int,
    *,
    stride_ratio: float = 1.1,
    exhaustive: bool = False,
    settings: CompoundSettings | None = None,
) -> Iterator[TraceRecord]:
    """Stream the prefix-mean ratio along `sequence` up to index `limit`.

    Every term updates O(1) running state; the mean itself is evaluated only
    at sampled indices (geometric spacing by default, every index when
    `exhaustive`). Divergence of the ratio is the falsification trigger, so
    log-spaced probes are the natural default.
    """
    if limit < 1:
        raise DomainError("trace limit must be >= 1")
    if not stride_ratio > 1.0:
        raise DomainError("stride ratio must exceed 1")
    limit = sequence.bounded_length(limit)
    step = _mean_stepper(descriptor, settings)
    if exhaustive:
        samples: Iterator[int] = iter(range(1, limit + 1))
    else:
        samples = _sample_points(limit, stride_ratio)
    next_sample = next(samples)
    terms = sequence.iter_terms()
    for n in range(1, limit + 1):
        a = next(terms)
        if not 0.0 < a < math.inf:
            raise DomainError(f"sequence terms must be positive and finite, got {a!r}")
        try:
            mean_value = step(a)
        except OverflowError:
            raise DomainError(f"running power sum overflowed binary64 at n={n}") from None
        if n == next_sample:
            yield TraceRecord(n=n, term=a, mean_value=mean_value, ratio=mean_value / a)
            next_sample = next(samples, limit + 1)


def ratio_trace(
    descriptor: MeanDescriptor,
    sequence: SequenceSpec,
    limit: int,
    *,
    stride_ratio: float = 1.1,
    exhaustive: bool = False,
    settings: CompoundSettings | None = None,
) -> RatioTrace:
    """Materialised form of :func:`iter_ratio_trace`."""
    records = tuple(
        iter_ratio_trace(
            descriptor,
            sequence,
            limit,
            stride_ratio=stride_ratio,
            exhaustive=exhaustive,
            settings=settings,
        )
    )
    return RatioTrace(descriptor=descriptor, sequence=sequence, records=records)


# ---------------------------------------------------------------------------
# Growth lower bounds
# ---------------------------------------------------------------------------


def gini_ratio_lower_bound(k: int, n: float) -> float:
    """Ratio lower bound (log n)^(1/(k+1)) for the Gini mean (1, -k) on 1/i terms.

    Follows from the term-sum estimates ``sum i^k <= n^(k+1)`` and
    ``sum 1/i >= log n``. Returns 0 at n = 1.
    """
    if not (isinstance(k, int) and k >= 1):
        raise DomainError("k must be an integer >= 1")
    if n < 1:
        raise DomainError("n must be >= 1")
    if n == 1:
        return 0.0
    return math.log(n) ** (1.0 / (k + 1))


def compound_ratio_lower_bound(params: BoundParams, n: float) -> float:
    """Ratio lower bound ``coefficient * (log n)^growth_exponent`` for the
    compound with exponents (1, -lam, ..., -lam) on 1/i terms. Needs n >= 2."""
    if n < 2:
        raise DomainError("n must be >= 2")
    return params.coefficient * math.log(n) ** params.growth_exponent


@dataclass(frozen=True)
class ChainLedger:
    """All quantities of the ratio chain at one prefix length.

    ratio               n * compound mean of (1, 1/2, ..., 1/n)
    two_point_value     two-point compound at (log n, 1)
    lower_bound         coefficient * (log n)^growth_exponent
    arithmetic_prefix   power mean of exponent 1 over the prefix
    low_prefix          power mean of exponent -lam over the prefix
    """

    n: int
    ratio: float
    two_point_value: float
    lower_bound: float
    arithmetic_prefix: float
    low_prefix: float
    arithmetic_estimate_ok: bool
    low_estimate_ok: bool
    ratio_dominates: bool
    bound_dominates: bool

    @property
    def holds(self) -> bool:
        return (
            self.arithmetic_estimate_ok
            and self.low_estimate_ok
            and self.ratio_dominates
            and self.bound_dominates
        )


def chain_check(
    params: BoundParams,
    n: int,
    settings: CompoundSettings | None = None,
    slack: float = 1e-9,
) -> ChainLedger:
    """Evaluate the chain  r_n >= two_point(log n, 1) >= lower bound  at one n.

    r_n is the prefix ratio of the compound on the first n harmonic terms,
    computed through the power-mean image of the prefix. The first chain step
    uses the prefix estimates (arithmetic prefix mean >= log(n)/n, low prefix
    mean >= 1/n) plus homogeneity; both inequalities are asserted with
    relative `slack` to absorb iteration tolerance.
    """
    if n < 3:
        raise DomainError("chain check requires n >= 3 so that log n > 1")
    evaluator = PrefixEvaluator([1.0, -params.lam])
    for i in range(1, n + 1):
        evaluator.push(1.0 / i)
    arithmetic = evaluator.power_mean(1.0)
    low = evaluator.power_mean(-params.lam)
    exps = params.compound_exponents
    image = [arithmetic] + [low] * params.p
    ratio = n * compound_iterate(image, exps, settings).value
    log_n = math.log(n)
    two_point = compound_two_point(log_n, 1.0, params, settings)
    bound = compound_ratio_lower_bound(params, n)
    return ChainLedger(
        n=n,
        ratio=ratio,
        two_point_value=two_point,
        lower_bound=bound,
        arithmetic_prefix=arithmetic,
        low_prefix=low,
        arithmetic_estimate_ok=arithmetic * n >= log_n,
        low_estimate_ok=low * n >= 1.0,
        ratio_dominates=ratio >= two_point * (1.0 - slack),
        bound_dominates=two_point >= bound * (1.0 - slack),
    )


# ---------------------------------------------------------------------------
# Witness construction and verification
# ---------------------------------------------------------------------------

_LOG2 = math.log(2.0)
# Inflation applied to the certified right-hand side when the geometric tail
# underflows binary64: any underflowed tail is far below prefix_sum * 2^-50.
_TAIL_SLACK = 2.0**-50


@dataclass(frozen=True)
class Witness:
    """Finite certificate that a mean is not Hardy with constant `constant`.

    The certified sequence keeps the original terms through n1 and continues
    with the geometric tail ``term(n1) * 2^-n`` beyond, making it summable.
    The defining inequalities:

        prefix ratio > 2 * constant  for every n in (n0, n1]
        sum of terms over (n0, n1)  >  sum of terms over [1, n0]

    `tail_log` stores log(term(n1) * 2^-n1); the linear-domain `tail_bound`
    is 0.0 whenever that quantity underflows.
    """

    constant: float
    n0: int
    n1: int
    splice_value: float
    head_sum: float
    mid_sum: float
    prefix_sum: float
    tail_log: float
    tail_bound: float
    min_ratio: float
    descriptor: MeanDescriptor
    sequence: SequenceSpec
    assumptions: tuple[str, ...]

    def spliced_term(self, n: int) -> float:
        """Term of the certified summable sequence, 1-based."""
        if n < 1:
            raise DomainError("term index must be >= 1")
        if n <= self.n1:
            return self.sequence.term(n)
        return self.splice_value * 2.0**-n


@dataclass(frozen=True)
class WitnessCheck:
    lhs: float
    rhs: float
    refuted: bool


def _sequence_assumptions(sequence: SequenceSpec) -> tuple[str, ...]:
    notes = []
    if sequence.kind == "harmonic":
        notes.append("harmonic terms: divergent sum and vanishing terms hold")
    elif sequence.kind == "custom":
        notes.append(
            "custom rule: divergent sum "
            + ("asserted by caller" if sequence.divergent_sum else "NOT asserted")
        )
        notes.append(
            "custom rule: vanishing terms "
            + ("asserted by caller" if sequence.vanishing_terms else "NOT asserted")
        )
    else:
        notes.append("explicit finite sequence: certificate refutes this constant only")
    notes.append("certificate refutes the stated constant; Hardiness itself is asymptotic")
    return tuple(notes)


def build_witness(
    descriptor: MeanDescriptor,
    sequence: SequenceSpec,
    constant: float,
    cap: int,
    *,
    settings: CompoundSettings | None = None,
) -> Witness:
    """Scan for the splice indices refuting `constant` and assemble a witness.

    A single exhaustive pass keeps the exact state the certificate needs:
    n0 is the last index whose ratio fails the 2C threshold (or 1 when none
    fails), and n1 the first later index where the strictly-between term sum
    exceeds the head sum while every ratio in (n0, n1] clears the threshold.

    Raises WitnessNotFoundError with the largest ratio seen if the cap is
    reached first; that signals the constant is too large for this scan
    range, not that the mean is Hardy.
    """
    constant = float(constant)
    if not (math.isfinite(constant) and constant > 0.0):
        raise DomainError("constant must be positive and finite")
    if cap < 1:
        raise DomainError("cap must be >= 1")
    limit = sequence.bounded_length(cap)
    threshold = 2.0 * constant
    step = _mean_stepper(descriptor, settings)

    prefix = 0.0
    n0 = 1
    head = 0.0
    stretch_min = math.inf
    largest = 0.0
    found: tuple[int, float, float, float] | None = None  # n1, term, prefix, stretch_min

    terms = sequence.iter_terms()
    for n in range(1, limit + 1):
        a = next(terms)
        if not 0.0 < a < math.inf:
            raise DomainError(f"sequence terms must be positive and finite, got {a!r}")
        try:
            mean_value = step(a)
        except OverflowError:
            raise DomainError(f"running power sum overflowed binary64 at n={n}") from None
        prefix += a
        if n == 1:
            head = prefix
        ratio = mean_value / a
        if ratio > largest:
            largest = ratio
        if ratio <= threshold:
            n0 = n
            head = prefix
            stretch_min = math.inf
            continue
        # the certificate range is (n0, n1], so n0 itself never contributes
        if n > n0 and ratio < stretch_min:
            stretch_min = ratio
        # mid sum over (n0, n-1]; the current term is excluded.
        if prefix - a - head > head:
            found = (n, a, prefix, stretch_min)
            break

    if found is None:
        raise WitnessNotFoundError(
            f"no witness for constant {constant} within {limit} terms; "
            f"largest ratio seen was {largest:.6g} (needs > {threshold:.6g} sustained)",
            largest_ratio=largest,
            scanned=limit,
        )

    n1, last_term, prefix_sum, min_ratio = found
    tail_log = math.log(last_term) - n1 * _LOG2
    try:
        tail_bound = math.exp(tail_log)
    except OverflowError:  # pragma: no cover - tail_log is always far negative
        tail_bound = 0.0
    return Witness(
        constant=constant,
        n0=n0,
        n1=n1,
        splice_value=last_term,
        head_sum=head,
        mid_sum=prefix_sum - last_term - head,
        prefix_sum=prefix_sum,
        tail_log=tail_log,
        tail_bound=tail_bound,
        min_ratio=min_ratio,
        descriptor=descriptor,
        sequence=sequence,
        assumptions=_sequence_assumptions(sequence),
    )


def verify_witness(
    witness: Witness,
    descriptor: MeanDescriptor | None = None,
    *,
    settings: CompoundSettings | None = None,
) -> WitnessCheck:
    """Recompute a witness's certificate from scratch and compare the two sides.

    Every quantity is rebuilt by an independent exhaustive pass over the
    first n1 terms: the ratio condition is re-checked at every index in
    (n0, n1], the splice sums are recomputed and compared against the stored
    ledger, and the left-hand side accumulates the prefix means over
    (n0, n1]. The right-hand side is ``C * (prefix_sum + tail)`` where the
    geometric tail enters through its closed form; if that underflows, the
    right side is inflated by prefix_sum * 2^-50, which strictly dominates
    any underflowed tail, so `refuted=True` remains a rigorous conclusion.

    Raises WitnessValidationError when any defining inequality or ledger
    entry fails to reproduce.
    """
    m = descriptor if descriptor is not None else witness.descriptor
    if not (math.isfinite(witness.constant) and witness.constant > 0.0):
        raise WitnessValidationError("witness constant must be positive and finite")
    if not 1 <= witness.n0 < witness.n1:
        raise WitnessValidationError("witness requires 1 <= n0 < n1")
    if witness.sequence.bounded_length(witness.n1) < witness.n1:
        raise WitnessValidationError("sequence does not reach n1")

    threshold = 2.0 * witness.constant
    step = _mean_stepper(m, settings)
    prefix = 0.0
    head = 0.0
    lhs = 0.0
    min_ratio = math.inf
    terms = witness.sequence.iter_terms()
    last_term = math.nan
    for n in range(1, witness.n1 + 1):
        a = next(terms)
        try:
            mean_value = step(a)
        except OverflowError:
            raise WitnessValidationError(
                f"running power sum overflowed binary64 at n={n}"
            ) from None
        prefix += a
        if n == witness.n0:
            head = prefix
        if n > witness.n0:
            ratio = mean_value / a
            if ratio <= threshold:
                raise WitnessValidationError(
                    f"ratio condition fails at n={n}: {ratio:.6g} <= {threshold:.6g}"
                )
            if ratio < min_ratio:
                min_ratio = ratio
            lhs += mean_value
        last_term = a

    mid = prefix - last_term - head
    if not mid > head:
        raise WitnessValidationError(
            f"splice sum condition fails: mid sum {mid:.6g} <= head sum {head:.6g}"
        )
    for name, stored, recomputed in (
        ("head_sum", witness.head_sum, head),
        ("mid_sum", witness.mid_sum, mid),
        ("prefix_sum", witness.prefix_sum, prefix),
        ("splice_value", witness.splice_value, last_term),
        ("min_ratio", witness.min_ratio, min_ratio),
    ):
        if not math.isclose(stored, recomputed, rel_tol=1e-9, abs_tol=0.0):
            raise WitnessValidationError(
                f"ledger entry {name} does not reproduce: stored {stored!r}, "
                f"recomputed {recomputed!r}"
            )
    expected_tail_log = math.log(last_term) - witness.n1 * _LOG2
    if not math.isclose(witness.tail_log, expected_tail_log, rel_tol=1e-9):
        raise WitnessValidationError("tail bound does not match the splice")

    tail = witness.tail_bound
    if tail == 0.0:
        tail = prefix * _TAIL_SLACK
    rhs = witness.constant * (prefix + tail)
    return WitnessCheck(lhs=lhs, rhs=rhs, refuted=lhs > rhs)
