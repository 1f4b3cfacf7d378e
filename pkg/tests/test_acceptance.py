"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Every criterion carries its stated tolerance and runtime budget. Run with
``pytest -v tests/test_acceptance.py`` (add ``-s`` to see the summary lines
on passing runs).
"""

from __future__ import annotations

import json
import math
import random
import subprocess
import sys
import time

import pytest

from hardymeans import (
    BoundParams,
    GiniMean,
    build_witness,
    check_compound_lower_bound,
    classify_gauss,
    classify_gini,
    compound_iterate,
    compound_two_point,
    gini_mean,
    gini_ratio_lower_bound,
    growth_exponent,
    growth_report,
    harmonic_sequence,
    invariant_mean,
    power_mean,
    ratio_trace,
    rescale_step,
    verify_witness,
)
from hardymeans.slow_growth import round_significant

from conftest import agm_oracle, harmonic_number

PAPER_PARAMS = BoundParams(p=3, lam=5.0, theta=1.5)


def _report(number: int, name: str, elapsed: float, budget: float) -> None:
    print(f"ACCEPTANCE {number} ({name}): PASS in {elapsed:.2f}s (budget {budget:.0f}s)")
    assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget"


def test_criterion_1_growth_exponent():
    """remark 3 5 1.5 reports a growth exponent that rounds to 0.0341."""
    start = time.monotonic()
    cp = subprocess.run(
        [sys.executable, "-m", "hardymeans", "remark", "3", "5", "1.5"],
        capture_output=True,
        text=True,
    )
    elapsed = time.monotonic() - start
    assert cp.returncode == 0, cp.stderr
    record = json.loads(cp.stdout)
    assert record["exponent_rounded"] == "0.0341"
    assert abs(float(record["exponent"]) - 0.0341) < 5e-4
    _report(1, "growth exponent 0.0341", elapsed, 1.0)


def test_criterion_2_threshold():
    """The crossing threshold reproduces the reported 2.86e22 within 2%."""
    start = time.monotonic()
    report = growth_report(PAPER_PARAMS, target=1.0)
    threshold = float(report.threshold_log10)
    elapsed = time.monotonic() - start
    reference = 2.86e22
    assert abs(threshold - reference) / reference < 0.02
    assert round_significant(report.threshold_log10) == "2.86e+22"
    _report(2, "threshold log10 within 2% of 2.86e22", elapsed, 1.0)


def test_criterion_3_gini_growth_display():
    """Gini (1,-k) harmonic ratios dominate (log n)^(1/(k+1)) up to 10^6."""
    start = time.monotonic()
    for k in (1, 2, 3):
        trace = ratio_trace(GiniMean(1.0, -float(k)), harmonic_sequence(), 10**6)
        for record in trace.records:
            bound = gini_ratio_lower_bound(k, record.n)
            assert record.ratio >= bound, (k, record.n)
    # spot value from the direct batch formula
    expected_r100 = 100.0 * math.sqrt(harmonic_number(100) / 5050.0)
    trace = ratio_trace(GiniMean(1.0, -1.0), harmonic_sequence(), 100)
    assert trace.last.ratio == pytest.approx(expected_r100, rel=1e-12)
    assert abs(trace.last.ratio - 3.2050) < 1e-3
    elapsed = time.monotonic() - start
    _report(3, "gini growth display", elapsed, 30.0)


def test_criterion_4_lower_bound_sweep():
    """Two-point lower bound, rescale monotonicity and invariance on 10^4 tuples."""
    start = time.monotonic()
    rng = random.Random(20250809)
    tau_checked = 0
    for _ in range(10_000):
        params = BoundParams(
            p=rng.randint(1, 4),
            lam=10.0 * (1.0 - rng.random()),
            theta=1.0 + 2.0 * (1.0 - rng.random()),
        )
        b = 1.0 - rng.random()
        a = b * math.exp(math.log(1e6) * (1.0 - rng.random()))
        check = check_compound_lower_bound(a, b, params)
        assert check.holds, (params, a, b)
        g_before = invariant_mean(a, b, params)
        g_after = invariant_mean(*rescale_step(a, b, params), params)
        assert abs(g_after - g_before) / g_before < 1e-12
        if a > params.theta * b:
            tau_checked += 1
            f_after = compound_two_point(*rescale_step(a, b, params), params)
            assert f_after <= check.lhs * (1 + 4e-12)
    assert tau_checked > 1000
    elapsed = time.monotonic() - start
    _report(4, f"lower-bound sweep ({tau_checked} rescale checks)", elapsed, 60.0)


def test_criterion_5_witness_refutation():
    """Witness for gini (1,-1), harmonic, C=2 refutes, with oracle-exact n0."""
    start = time.monotonic()
    witness = build_witness(GiniMean(1.0, -1.0), harmonic_sequence(), 2.0, 10**7)
    check = verify_witness(witness)
    assert check.refuted
    assert check.lhs > check.rhs

    # independent linear scan with raw running sums
    threshold = 4.0
    sum_p = 0.0
    sum_q = 0.0
    prefix = 0.0
    oracle_n0 = 1
    head = 0.0
    oracle_n1 = None
    n = 0
    while oracle_n1 is None:
        n += 1
        a = 1.0 / n
        sum_p += a
        sum_q += n
        prefix += a
        if n == 1:
            head = prefix
        ratio = math.sqrt(sum_p / sum_q) / a
        if ratio <= threshold:
            oracle_n0 = n
            head = prefix
        elif prefix - a - head > head:
            oracle_n1 = n
    assert witness.n0 == oracle_n0
    assert witness.n1 == oracle_n1
    elapsed = time.monotonic() - start
    _report(
        5,
        f"witness refutation (n0={witness.n0}, n1={witness.n1})",
        elapsed,
        60.0,
    )


def test_criterion_6_compound_oracles():
    """Compound limits against the classic iteration oracles."""
    start = time.monotonic()
    rng = random.Random(0xA61)
    for _ in range(100):
        a = rng.uniform(0.01, 100.0)
        b = rng.uniform(0.01, 100.0)
        value = compound_iterate([a, b], [1.0, 0.0]).value
        assert abs(value - agm_oracle(a, b)) / value < 1e-10
        harmonic_limit = compound_iterate([a, b], [1.0, -1.0]).value
        assert abs(harmonic_limit - math.sqrt(a * b)) / harmonic_limit < 1e-10
    for c in (0.125, 1.0, 3.7, 2500.0):
        result = compound_iterate([c] * 4, [2.0, 1.0, 0.0, -3.0])
        assert result.value == c
    elapsed = time.monotonic() - start
    _report(6, "compound oracle equivalence", elapsed, 5.0)


def test_criterion_7_classifier_truth_table():
    """Classification grids reproduce the closed-form criteria exactly."""
    start = time.monotonic()
    expected_gini = {
        (-1.0, 0.5): True,
        (-1.0, 1.0): False,
        (-1.0, 1.5): False,
        (0.0, 0.5): True,
        (0.0, 1.0): False,
        (0.0, 1.5): False,
        (0.5, 1.0): False,
        (0.5, 1.5): False,
    }
    for (p, q), is_hardy in expected_gini.items():
        assert classify_gini(p, q).is_hardy is is_hardy, (p, q)
        assert classify_gini(q, p).is_hardy is is_hardy, (q, p)
    gauss_cases = [
        ((1.0, -5.0, -5.0, -5.0), False),
        ((0.5, 0.0), True),
        ((0.999,), True),
        ((1.0,), False),  # strictness at max == 1
    ]
    for exponents, is_hardy in gauss_cases:
        assert classify_gauss(exponents).is_hardy is is_hardy, exponents
    # inclusivity at min == 0 when max < 1
    assert classify_gini(0.0, 0.5).is_hardy
    elapsed = time.monotonic() - start
    _report(7, "classifier truth table", elapsed, 1.0)


def test_criterion_8_property_suites():
    """Mean axioms on >= 10^3 random instances per property and family.

    Gini argument monotonicity is sampled from min(p,q) <= 0 <= max(p,q),
    the exact parameter region where the family is argument-monotone.
    """
    start = time.monotonic()
    rng = random.Random(0x5EED)
    slack = 1e-12
    instances = 1000

    def sample_vector(max_len=8):
        return [rng.uniform(0.01, 100.0) for _ in range(rng.randint(1, max_len))]

    def power_exponent():
        choice = rng.random()
        if choice < 0.1:
            return -math.inf
        if choice < 0.2:
            return math.inf
        if choice < 0.3:
            return 0.0
        return rng.uniform(-8.0, 8.0)

    def gini_pair():
        while True:
            p = rng.uniform(-6.0, 6.0)
            q = rng.uniform(-6.0, 6.0)
            if abs(p - q) >= 0.05:
                return p, q

    def gini_monotone_pair():
        while True:
            p = rng.uniform(0.0, 6.0)
            q = rng.uniform(-6.0, 0.0)
            if abs(p - q) >= 0.05:
                return (p, q) if rng.random() < 0.5 else (q, p)

    def exponent_list():
        return [rng.uniform(-5.0, 5.0) for _ in range(rng.randint(1, 4))]

    evaluators = {
        "power": lambda s: power_mean(s, ctx["power"]),
        "gini": lambda s: gini_mean(s, *ctx["gini"]),
        "compound": lambda s: compound_iterate(s, ctx["compound"]).value,
    }

    for _ in range(instances):
        ctx = {
            "power": power_exponent(),
            "gini": gini_pair(),
            "compound": exponent_list(),
        }
        sample = sample_vector()
        lo, hi = min(sample), max(sample)
        constant = rng.uniform(0.01, 100.0)
        scale = rng.uniform(0.01, 100.0)
        for family, evaluate in evaluators.items():
            # internality
            value = evaluate(sample)
            assert lo * (1 - slack) <= value <= hi * (1 + slack), family
            # idempotence, exact
            assert evaluate([constant] * rng.randint(1, 6)) == constant, family
            # homogeneity
            scaled = evaluate([scale * v for v in sample])
            assert abs(scaled - scale * value) <= slack * max(scaled, scale * value), family
            # argument monotonicity (gini restricted to its monotone region)
            if family == "gini":
                saved = ctx["gini"]
                ctx["gini"] = gini_monotone_pair()
                base = evaluate(sample)
            else:
                base = value
            bumped = list(sample)
            index = rng.randrange(len(bumped))
            bumped[index] += rng.uniform(0.001, 10.0)
            assert evaluate(bumped) >= base * (1 - slack), family
            if family == "gini":
                ctx["gini"] = saved

        # power-mean exponent monotonicity
        lam, mu = sorted((power_exponent(), power_exponent()))
        assert power_mean(sample, lam) <= power_mean(sample, mu) * (1 + slack)

        # gini parameter monotonicity and symmetry
        p, q = ctx["gini"]
        dp, dq = rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0)
        if abs((p + dp) - (q + dq)) >= 0.05:
            assert gini_mean(sample, p, q) <= gini_mean(sample, p + dp, q + dq) * (
                1 + slack
            )
        assert gini_mean(sample, p, q) == pytest.approx(
            gini_mean(sample, q, p), rel=slack
        )

        # compound monotonicity in the exponent tuple
        exps = ctx["compound"]
        raised = [e + (0.0 if rng.random() < 0.3 else rng.uniform(0.05, 2.0)) for e in exps]
        low = compound_iterate(sample, exps).value
        high = compound_iterate(sample, raised).value
        assert low <= high * (1 + slack)

    elapsed = time.monotonic() - start
    _report(8, f"property suites ({instances} instances/property)", elapsed, 60.0)
