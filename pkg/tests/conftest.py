"""Shared randomness helpers for the exact-arithmetic test suites."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qtoric import ProductState
from qtoric.rationals import ComplexRational


@pytest.fixture
def rng():
    return random.Random(510510)


def random_rational(rng, lo=-5, hi=5, max_den=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_complex_rational(rng, nonzero=True) -> ComplexRational:
    while True:
        value = ComplexRational(random_rational(rng), random_rational(rng))
        if value or not nonzero:
            return value


def random_product_state(rng, shape) -> ProductState:
    """Exact product state with every local amplitude nonzero."""
    return ProductState(tuple(
        tuple(random_complex_rational(rng) for _ in range(n)) for n in shape))
