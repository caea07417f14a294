from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.approx.continued_fraction import (
    TargetValue,
    cf_expand,
    convergents_until,
    is_reduced,
    parity_filter,
    partial_quotients,
    recurrence_determinant,
)
from src.exceptions import NonQuadraticIrrationalUnsupportedError

SQRT2_KEPT = [(3, 2), (17, 12), (99, 70), (577, 408), (3363, 2378), (19601, 13860), (114243, 80782)]


def test_sqrt2_convergents():
    raw = cf_expand(TargetValue.parse("sqrt(2)"), 14)
    assert [(c.numerator, c.denominator) for c in raw[:6]] == [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29), (99, 70)]
    assert (raw[-1].numerator, raw[-1].denominator) == (114243, 80782)
    kept = parity_filter(raw)
    assert [(c.numerator, c.denominator) for c in kept] == SQRT2_KEPT


def test_convergents_until_collects_filtered_count():
    kept = convergents_until(TargetValue(sqrt_of=2), 7)
    assert [(c.numerator, c.denominator) for c in kept] == SQRT2_KEPT
    assert kept[-1].index == 13


def test_convergent_properties():
    raw = cf_expand(TargetValue(sqrt_of=7), 12)
    for prev, cur in zip(raw, raw[1:]):
        assert recurrence_determinant(prev, cur) in (1, -1)
        assert cur.denominator > prev.denominator or cur.index == 1
    assert all(is_reduced(c) for c in raw)


def test_sqrt_partial_quotients_are_periodic():
    quotients = partial_quotients(TargetValue(sqrt_of=7))
    assert [next(quotients) for _ in range(9)] == [2, 1, 1, 1, 4, 1, 1, 1, 4]


def test_decimal_target_terminates():
    target = TargetValue.parse("1.5")
    raw = cf_expand(target, 10)
    assert raw[-1].value == Fraction(3, 2)
    assert len(raw) == 2
    assert convergents_until(target, 5) == [raw[-1]]


def test_decimal_target_label_and_float():
    target = TargetValue.parse(" 1.41421 ")
    assert target.label == "1.41421"
    assert float(target) == pytest.approx(1.41421)


def test_unsupported_expression():
    with pytest.raises(NonQuadraticIrrationalUnsupportedError) as info:
        TargetValue.parse("pi")
    assert info.value.exit_code == 1


@pytest.mark.parametrize("kwargs", [
    {"sqrt_of": 4},
    {"sqrt_of": 1},
    {"decimal": "0.7"},
    {"decimal": "Infinity"},
    {},
    {"sqrt_of": 2, "decimal": "1.5"},
])
def test_invalid_targets(kwargs):
    with pytest.raises(ValidationError):
        TargetValue(**kwargs)


def test_count_must_be_positive():
    with pytest.raises(ValueError):
        cf_expand(TargetValue(sqrt_of=2), 0)
    with pytest.raises(ValueError):
        convergents_until(TargetValue(sqrt_of=2), 0)


@pytest.mark.parametrize("n", [2, 3, 7, 13])
def test_sqrt_convergents_close_in_from_alternate_sides(n):
    values = [c.value for c in cf_expand(TargetValue(sqrt_of=n), 12)]
    for r1, r2 in zip(values, values[1:]):
        assert (r1 * r1 < n) != (r2 * r2 < n)
        # sqrt(n) lies past the midpoint on r2's side
        mid = (r1 + r2) / 2
        assert (mid * mid < n) == (r2 > r1)


def test_decimal_convergent_distance_strictly_decreases():
    target = TargetValue.parse("3.14159")
    exact = Fraction("3.14159")
    distances = [abs(c.value - exact) for c in cf_expand(target, 20)]
    assert distances[-1] == 0
    assert all(d1 > d2 for d1, d2 in zip(distances, distances[1:]))
