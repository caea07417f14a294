import random

import pytest
from pydantic import ValidationError

from src.planning.gevrey import GevreySpec, bump, bump_integral, gevrey_jet, transition


def test_transition_parameters_are_validated():
    spec = GevreySpec(sigma=2.0, T=3.0, theta_start=1.0, theta_end=-1.0)
    assert spec.gevrey_order == pytest.approx(1.5)
    assert spec.delta == -2.0
    with pytest.raises(ValidationError):
        GevreySpec(sigma=1.0)
    with pytest.raises(ValidationError):
        GevreySpec(T=0.0)


def test_bump_support():
    assert bump(0.0, 2.0) == 0.0
    assert bump(1.0, 2.0) == 0.0
    assert bump(0.001, 2.0) == 0.0
    assert bump(0.5, 2.0) > 0.0
    assert bump_integral(2.0) > 0.0


def test_transition_shape():
    assert transition(-1.0, 2.0) == 0.0
    assert transition(2.0, 2.0) == 1.0
    assert transition(0.5, 1.5) == pytest.approx(0.5, abs=1e-12)
    assert transition(0.3, 1.5) == pytest.approx(1.0 - transition(0.7, 1.5), abs=1e-12)
    values = [transition(k / 20, 1.5) for k in range(21)]
    assert all(x <= y for x, y in zip(values, values[1:]))


def test_jet_at_rest():
    spec = GevreySpec(sigma=2.0, T=2.0, theta_start=0.5, theta_end=3.0)
    before = gevrey_jet(spec, 0.0, 4)
    after = gevrey_jet(spec, 2.5, 4)
    assert before.values == (0.5, 0.0, 0.0, 0.0, 0.0)
    assert after.values == (3.0, 0.0, 0.0, 0.0, 0.0)
    assert before.order == 4


@pytest.mark.parametrize("t", sorted(random.Random(12).uniform(0.15, 0.85) for _ in range(12)))
def test_jet_matches_finite_differences(t):
    spec = GevreySpec(sigma=1.5, T=1.0)
    h = 1e-6
    jet = gevrey_jet(spec, t, 5)
    lo = gevrey_jet(spec, t - h, 4)
    hi = gevrey_jet(spec, t + h, 4)
    for j in range(4):
        fd = (hi[j] - lo[j]) / (2 * h)
        assert abs(fd - jet[j + 1]) <= 1e-6 * max(1.0, abs(jet[j + 1]))


def test_jet_scales_with_time():
    slow = gevrey_jet(GevreySpec(sigma=2.0, T=2.0), 1.0, 3)
    fast = gevrey_jet(GevreySpec(sigma=2.0, T=1.0), 0.5, 3)
    assert slow[0] == pytest.approx(fast[0])
    for j in range(1, 4):
        assert slow[j] == pytest.approx(fast[j] / 2 ** j)


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        gevrey_jet(GevreySpec(), 0.5, -1)
