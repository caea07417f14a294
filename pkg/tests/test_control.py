from fractions import Fraction

import numpy as np
import pytest

from src.algebra.cosh_basis import CoshPoly
from src.exceptions import OrderMismatchError
from src.planning.control import ControlProfile, apply_operator, control_operator, synthesize_control
from src.planning.gevrey import DerivativeJet, GevreySpec
from src.series.numeric_mode import NumericMode
from src.series.operator_series import expand


def test_control_operator():
    assert control_operator(3, None) == CoshPoly({3: 1})
    assert control_operator(2, 3) == CoshPoly({5: Fraction(1, 2), 1: Fraction(1, 2)})
    assert control_operator(2, 2) == CoshPoly({4: Fraction(1, 2), 0: Fraction(1, 2)})


def test_apply_operator_on_polynomial_jet():
    S = expand(CoshPoly({1: 1}), 1, 3, NumericMode.exact())
    # f(t) = t^2 at t = 1: f = 1, f' = 2, f'' = 2
    jet = DerivativeJet(1.0, (1.0, 2.0, 2.0, 0.0))
    assert apply_operator(S, jet) == pytest.approx(1.0 + 2.0 / 2 + 2.0 / 24)


def test_apply_operator_needs_enough_derivatives():
    S = expand(CoshPoly({1: 1}), 1, 5, NumericMode.exact())
    with pytest.raises(OrderMismatchError):
        apply_operator(S, DerivativeJet(0.5, (1.0, 0.0, 0.0)))


def test_profile_validation_and_interpolation():
    profile = ControlProfile(np.array([0.0, 1.0, 2.0]), np.array([0.0, 2.0, 2.0]))
    assert profile.at(0.5) == pytest.approx(1.0)
    assert profile.at(5.0) == 2.0
    with pytest.raises(ValueError):
        ControlProfile(np.array([0.0, 1.0]), np.array([1.0]))
    with pytest.raises(ValueError):
        ControlProfile(np.array([0.0, 0.0]), np.array([1.0, 1.0]))


def test_synthesized_control_rests_at_both_ends():
    spec = GevreySpec(sigma=2.0, T=1.0, theta_start=0.2, theta_end=1.2)
    profile = synthesize_control(1, None, spec, 10, np.linspace(0.0, 1.0, 41))
    assert profile.u[0] == pytest.approx(0.2)
    assert profile.u[-1] == pytest.approx(1.2)
    assert len(profile.u) == 41


def test_grid_outside_transfer_rejected():
    with pytest.raises(ValueError):
        synthesize_control(1, None, GevreySpec(T=1.0), 5, [0.0, 1.5])


def test_apply_operator_is_linear():
    S = expand(CoshPoly({3: 1, 1: Fraction(1, 2)}), 1, 4, NumericMode.exact())
    f = DerivativeJet(0.3, (1.0, -2.0, 0.5, 3.0, 1.5))
    g = DerivativeJet(0.3, (0.5, 4.0, -1.0, 2.0, -6.0))
    combined = DerivativeJet(0.3, tuple(x + 2.5 * y for x, y in zip(f.values, g.values)))
    assert apply_operator(S, combined) == pytest.approx(apply_operator(S, f) + 2.5 * apply_operator(S, g))


def test_two_sided_control_rests_at_both_ends():
    spec = GevreySpec(sigma=2.0, T=2.0, theta_start=0.5, theta_end=-1.0)
    profile = synthesize_control(2, 3, spec, 12, np.linspace(0.0, 2.0, 21))
    assert profile.u[0] == pytest.approx(0.5)
    assert profile.u[-1] == pytest.approx(-1.0)
