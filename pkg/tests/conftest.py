from math import gcd

import pytest

from src.algebra.bezout import bezout_cosh
from src.series.numeric_mode import NumericMode


def valid_pairs(limit):
    """Coprime a < b <= limit, not both odd."""
    return [
        (a, b)
        for b in range(2, limit + 1)
        for a in range(1, b)
        if gcd(a, b) == 1 and (a % 2 == 0 or b % 2 == 0)
    ]


def both_odd_pairs(limit):
    return [
        (a, b)
        for b in range(3, limit + 1, 2)
        for a in range(1, b, 2)
        if gcd(a, b) == 1
    ]


@pytest.fixture
def pair_2_3():
    pair, trace = bezout_cosh(2, 3)
    return pair, trace


@pytest.fixture
def exact_mode():
    return NumericMode.exact()


@pytest.fixture
def float64_mode():
    return NumericMode.float_bits(64)
