"""Shared independent oracles for the test suite.

These deliberately avoid the library's code paths: plain textbook loops and
formulas, used to freeze expected values.
"""

from __future__ import annotations

import math
import os

import hypothesis
import pytest

hypothesis.settings.register_profile("soak", max_examples=500, deadline=None)
if os.environ.get("HYPOTHESIS_PROFILE"):
    hypothesis.settings.load_profile(os.environ["HYPOTHESIS_PROFILE"])


def agm_oracle(a: float, b: float) -> float:
    """Classic arithmetic-geometric iteration, run to float fixed point."""
    while abs(a - b) > 1e-15 * max(a, b):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def harmonic_number(n: int) -> float:
    return math.fsum(1.0 / i for i in range(1, n + 1))


def batch_gini_oracle(values, p: float, q: float) -> float:
    """Direct unfactored Gini formula; fine for tame oracle inputs."""
    sp = math.fsum(v**p for v in values)
    sq = math.fsum(v**q for v in values)
    return (sp / sq) ** (1.0 / (p - q))


def batch_power_oracle(values, lam: float) -> float:
    """Direct unfactored power-mean formula; fine for tame oracle inputs."""
    if lam == 0.0:
        return math.exp(math.fsum(math.log(v) for v in values) / len(values))
    if lam == math.inf:
        return max(values)
    if lam == -math.inf:
        return min(values)
    return (math.fsum(v**lam for v in values) / len(values)) ** (1.0 / lam)


@pytest.fixture
def rng():
    import random

    return random.Random(0xC0FFEE)
