import numpy as np
import pytest

from src.exceptions import UnstableStepError
from src.planning.control import ControlProfile
from src.planning.gevrey import GevreySpec
from src.planning.rest_to_rest import plan_rest_to_rest
from src.planning.simulator import Trajectory, discrete_energy, simulate, stability_bound, transfer_error
from src.rod.model import StencilSign, build_model


def constant_profile(value, T):
    return ControlProfile(np.array([0.0, T]), np.array([value, value]))


def test_stability_bound():
    assert stability_bound(build_model(1, 2, q=2)) == pytest.approx(0.0625)
    with pytest.raises(UnstableStepError):
        simulate(build_model(1, 2, q=2), constant_profile(1.0, 1.0), 0.0, 0.07)
    with pytest.raises(UnstableStepError):
        simulate(build_model(1, 2), constant_profile(1.0, 1.0), 0.0, 0.0)


def test_constant_input_reaches_steady_state():
    model = build_model(1, 2, q=2)
    trajectory = simulate(model, constant_profile(1.0, 40.0), 0.0, 0.05)
    assert trajectory.times[-1] == pytest.approx(40.0)
    assert trajectory.theta.shape == (len(trajectory.times), model.N + 1)
    np.testing.assert_allclose(trajectory.final, 1.0, atol=1e-8)


def test_steps_end_on_last_grid_time():
    trajectory = simulate(build_model(1, 1), constant_profile(0.0, 1.0), 0.0, 0.24)
    assert len(trajectory.times) == 6
    assert trajectory.times[-1] == pytest.approx(1.0)


def test_negated_sign_model_simulates_the_same():
    profile = constant_profile(1.0, 2.0)
    laplacian = simulate(build_model(2, 3), profile, 0.0, 0.1)
    negated = simulate(build_model(2, 3, sign=StencilSign.NEGATED), profile, 0.0, 0.1)
    np.testing.assert_array_equal(laplacian.theta, negated.theta)


def test_energy_about_input_decays():
    model = build_model(2, 3, q=2)
    initial = np.linspace(0.0, 2.0, model.N + 1)
    trajectory = simulate(model, constant_profile(1.0, 3.0), initial, 0.05)
    np.testing.assert_allclose(trajectory.theta[0], np.where(np.arange(model.N + 1) == model.heated, 1.0, initial))
    energies = [discrete_energy(row, 1.0) for row in trajectory.theta]
    assert all(e2 <= e1 + 1e-12 for e1, e2 in zip(energies, energies[1:]))
    assert energies[-1] < energies[0]


def test_initial_values_shape_checked():
    with pytest.raises(ValueError):
        simulate(build_model(2, 3), constant_profile(1.0, 1.0), [0.0, 1.0], 0.1)


def test_discrete_energy_weights():
    assert discrete_energy(np.array([1.0, 1.0, 1.0])) == pytest.approx(2.0)
    assert discrete_energy(np.array([3.0, 3.0]), 3.0) == 0.0


def test_transfer_error():
    spec = GevreySpec(T=1.0, theta_start=0.0, theta_end=2.0)
    trajectory = Trajectory(np.array([0.0, 1.0]), np.array([[0.0, 0.0], [2.0, 1.8]]))
    assert transfer_error(trajectory, spec) == pytest.approx(0.1)
    with pytest.raises(ValueError):
        transfer_error(trajectory, spec, t=2.0)


def test_rest_to_rest_transfer():
    spec = GevreySpec(sigma=2.0, T=1.0, theta_start=0.0, theta_end=1.0)
    result = plan_rest_to_rest(1, None, spec, J=15, q=20)
    assert result.dt == pytest.approx(0.25 / 400)
    assert result.trajectory.times[-1] == pytest.approx(1.0)
    assert result.transfer_error < 1e-2


def test_equilibrium_stays_put():
    model = build_model(2, 3, q=3)
    trajectory = simulate(model, constant_profile(0.7, 2.0), 0.7, 0.02)
    assert np.max(np.abs(trajectory.theta - 0.7)) < 1e-8


@pytest.mark.parametrize("a,b,q,T", [(1, 2, 10, 1.0), (2, 3, 4, 20.0)])
def test_two_sided_rest_to_rest_transfer(a, b, q, T):
    spec = GevreySpec(sigma=2.0, T=T, theta_start=0.0, theta_end=1.0)
    result = plan_rest_to_rest(a, b, spec, J=15, q=q)
    assert result.trajectory.times[-1] == pytest.approx(T)
    assert result.transfer_error < 1e-2


def test_two_sided_short_transfer_outruns_the_series():
    # at order 15 the truncated series cannot follow a unit-time transfer on the (2, 3) rod
    spec = GevreySpec(sigma=2.0, T=1.0, theta_start=0.0, theta_end=1.0)
    assert plan_rest_to_rest(2, 3, spec, J=15, q=4).transfer_error > 1.0
