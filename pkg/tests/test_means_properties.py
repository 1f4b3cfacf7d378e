"""Property-based tests for the mean axioms and evaluator invariants."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hardymeans import GiniMean, PowerMean, PrefixEvaluator, gini_mean, power_mean
from hardymeans.compound import prefix_value

POSITIVE = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)
SAMPLES = st.lists(POSITIVE, min_size=1, max_size=16)
# below ~1e-308 the product exponent*log(ratio) lands on the denormal grid and
# loses relative precision, so exponent magnitudes stay within normal floats
FINITE_EXPONENTS = st.one_of(
    st.floats(min_value=1e-300, max_value=12.0, allow_nan=False),
    st.floats(min_value=-12.0, max_value=-1e-300, allow_nan=False),
    st.just(0.0),
)
# raw running power sums invert accurately only for exponents away from 0
STREAMING_EXPONENTS = st.one_of(
    st.floats(min_value=1e-3, max_value=12.0, allow_nan=False),
    st.floats(min_value=-12.0, max_value=-1e-3, allow_nan=False),
)
EXPONENTS = st.one_of(
    FINITE_EXPONENTS,
    st.sampled_from([0.0, 1.0, -1.0, 1e-150, -1e-150, math.inf, -math.inf]),
)
SCALES = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)


@st.composite
def gini_params(draw):
    # 1/(p-q) amplifies rounding, so 1e-12-scale assertions need a visible gap
    p = draw(FINITE_EXPONENTS)
    q = draw(FINITE_EXPONENTS)
    assume(abs(p - q) > 1e-3)
    return p, q


@st.composite
def gini_streaming_params(draw):
    # 1/(p-q) amplifies the raw-sum rounding, so keep the gap macroscopic
    p = draw(FINITE_EXPONENTS)
    q = draw(FINITE_EXPONENTS)
    assume(abs(p - q) > 0.05)
    return p, q


@st.composite
def gini_monotone_params(draw):
    # Gini means are argument-monotone exactly when min(p, q) <= 0 <= max(p, q);
    # outside that region (e.g. the contraharmonic mean, p=2, q=1) increasing
    # an entry can lower the value.
    p = draw(st.floats(min_value=0.0, max_value=12.0, allow_nan=False))
    q = draw(st.floats(min_value=-12.0, max_value=0.0, allow_nan=False))
    assume(abs(p - q) > 1e-6)
    if draw(st.booleans()):
        p, q = q, p
    return p, q


@given(sample=SAMPLES, lam=EXPONENTS)
def test_power_internality(sample, lam):
    value = power_mean(sample, lam)
    assert min(sample) * (1 - 1e-12) <= value <= max(sample) * (1 + 1e-12)


@given(sample=SAMPLES, pq=gini_params())
def test_gini_internality(sample, pq):
    value = gini_mean(sample, *pq)
    assert min(sample) * (1 - 1e-12) <= value <= max(sample) * (1 + 1e-12)


@given(constant=POSITIVE, n=st.integers(min_value=1, max_value=10), lam=EXPONENTS)
def test_power_idempotence(constant, n, lam):
    assert power_mean([constant] * n, lam) == constant


@given(constant=POSITIVE, n=st.integers(min_value=1, max_value=10), pq=gini_params())
def test_gini_idempotence(constant, n, pq):
    assert gini_mean([constant] * n, *pq) == constant


@given(sample=SAMPLES, lam=EXPONENTS, t=SCALES)
def test_power_homogeneity(sample, lam, t):
    direct = power_mean([t * v for v in sample], lam)
    assert direct == pytest.approx(t * power_mean(sample, lam), rel=1e-12)


@given(sample=SAMPLES, pq=gini_params(), t=SCALES)
def test_gini_homogeneity(sample, pq, t):
    direct = gini_mean([t * v for v in sample], *pq)
    assert direct == pytest.approx(t * gini_mean(sample, *pq), rel=1e-12)


@given(
    sample=SAMPLES,
    lam=EXPONENTS,
    index=st.integers(min_value=0, max_value=15),
    bump=st.floats(min_value=1e-3, max_value=10.0, allow_nan=False),
)
def test_power_argument_monotonicity(sample, lam, index, bump):
    index %= len(sample)
    bumped = list(sample)
    bumped[index] += bump
    assert power_mean(bumped, lam) >= power_mean(sample, lam) * (1 - 1e-12)


@given(
    sample=SAMPLES,
    pq=gini_monotone_params(),
    index=st.integers(min_value=0, max_value=15),
    bump=st.floats(min_value=1e-3, max_value=10.0, allow_nan=False),
)
def test_gini_argument_monotonicity(sample, pq, index, bump):
    index %= len(sample)
    bumped = list(sample)
    bumped[index] += bump
    assert gini_mean(bumped, *pq) >= gini_mean(sample, *pq) * (1 - 1e-12)


def test_gini_monotonicity_fails_outside_mean_region():
    """The contraharmonic member (p, q) = (2, 1) is not argument-monotone."""
    assert gini_mean([1.0, 4.0], 2, 1) > gini_mean([2.0, 4.0], 2, 1)


@given(sample=SAMPLES, lam=EXPONENTS, mu=EXPONENTS)
def test_power_exponent_monotonicity(sample, lam, mu):
    if lam > mu:
        lam, mu = mu, lam
    assert power_mean(sample, lam) <= power_mean(sample, mu) * (1 + 1e-12)


@given(
    sample=SAMPLES,
    pq=gini_params(),
    dp=st.floats(min_value=0.0, max_value=5.0, allow_nan=False),
    dq=st.floats(min_value=0.0, max_value=5.0, allow_nan=False),
)
def test_gini_parameter_monotonicity(sample, pq, dp, dq):
    p, q = pq
    assume(abs((p + dp) - (q + dq)) > 1e-6)
    lower = gini_mean(sample, p, q)
    upper = gini_mean(sample, p + dp, q + dq)
    assert lower <= upper * (1 + 1e-12)


@given(sample=SAMPLES, pq=gini_params())
def test_gini_parameter_symmetry(sample, pq):
    p, q = pq
    assert gini_mean(sample, p, q) == pytest.approx(gini_mean(sample, q, p), rel=1e-12)


@given(sample=SAMPLES, lam=STREAMING_EXPONENTS)
@settings(max_examples=60)
def test_streaming_matches_batch_power(sample, lam):
    descriptor = PowerMean(lam)
    evaluator = PrefixEvaluator.for_means(descriptor)
    for i, v in enumerate(sample, 1):
        evaluator.push(v)
        assert prefix_value(evaluator, descriptor) == pytest.approx(
            power_mean(sample[:i], lam), rel=1e-12
        )


@given(sample=SAMPLES, pq=gini_streaming_params())
@settings(max_examples=60)
def test_streaming_matches_batch_gini(sample, pq):
    descriptor = GiniMean(*pq)
    evaluator = PrefixEvaluator.for_means(descriptor)
    for i, v in enumerate(sample, 1):
        evaluator.push(v)
        assert prefix_value(evaluator, descriptor) == pytest.approx(
            gini_mean(sample[:i], *pq), rel=1e-12
        )


def test_streaming_matches_batch_long_prefix():
    """Spot check at the contract's upper length: 10^4 random terms."""
    rng = random.Random(17)
    sample = [rng.uniform(0.01, 100.0) for _ in range(10_000)]
    descriptor = GiniMean(1.3, -0.7)
    evaluator = PrefixEvaluator.for_means(descriptor)
    checkpoints = {10, 100, 1_000, 10_000}
    for i, v in enumerate(sample, 1):
        evaluator.push(v)
        if i in checkpoints:
            assert prefix_value(evaluator, descriptor) == pytest.approx(
                gini_mean(sample[:i], 1.3, -0.7), rel=1e-12
            )
