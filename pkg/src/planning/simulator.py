"""Explicit integration of the discretized rod.

The dissipative Laplacian stencil is always used, whatever sign convention the
model was built with. Four-stage Runge-Kutta is stable for dt <= 0.25 / q^2.
"""

from dataclasses import dataclass
from math import ceil
from typing import Optional, Sequence, Union

import numpy as np
import structlog

from src.exceptions import UnstableStepError
from src.planning.control import ControlProfile
from src.planning.gevrey import GevreySpec
from src.rod.model import RodModel, StencilSign

logger = structlog.get_logger(__name__)

STABILITY_CONSTANT = 0.25


@dataclass(frozen=True)
class Trajectory:
    """Node temperatures theta[k, node] at times[k], heated node included."""

    times: np.ndarray
    theta: np.ndarray

    @property
    def final(self) -> np.ndarray:
        return self.theta[-1]


def stability_bound(model: RodModel) -> float:
    return STABILITY_CONSTANT / model.q ** 2


def _initial_state(model: RodModel, theta_init: Union[float, Sequence[float]]) -> np.ndarray:
    values = np.asarray(theta_init, dtype=float)
    if values.ndim == 0:
        return np.full(model.n, float(values))
    if values.shape != (model.N + 1,):
        raise ValueError(f"theta_init needs {model.N + 1} node values, got {values.shape}")
    return np.delete(values, model.heated)


def simulate(model: RodModel, profile: ControlProfile, theta_init: Union[float, Sequence[float]],
             dt: float) -> Trajectory:
    """Integrate theta' = A theta + B u(t) over the profile's time span.

    Args:
        model: Rod model; only its geometry is used
        profile: Input, linearly interpolated between grid points
        theta_init: Uniform value or one value per node
        dt: Largest allowed step; the span is split into equal steps

    Returns:
        Trajectory sampled at every step, ending exactly at the last grid time

    Raises:
        UnstableStepError: dt above 0.25 / q^2
    """
    bound = stability_bound(model)
    if dt <= 0.0 or dt > bound:
        raise UnstableStepError(dt, bound)
    A, B = model.with_sign(StencilSign.LAPLACIAN).as_arrays()
    t0, t1 = float(profile.grid[0]), float(profile.grid[-1])
    steps = max(1, ceil((t1 - t0) / dt - 1e-12))
    h = (t1 - t0) / steps
    times = t0 + h * np.arange(steps + 1)

    def rhs(t: float, x: np.ndarray) -> np.ndarray:
        return A @ x + B * profile.at(t)

    states = np.empty((steps + 1, model.n))
    x = _initial_state(model, theta_init)
    states[0] = x
    for k in range(steps):
        t = times[k]
        k1 = rhs(t, x)
        k2 = rhs(t + h / 2, x + h / 2 * k1)
        k3 = rhs(t + h / 2, x + h / 2 * k2)
        k4 = rhs(t + h, x + h * k3)
        x = x + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        states[k + 1] = x

    u = np.interp(times, profile.grid, profile.u)
    theta = np.insert(states, model.heated, u, axis=1)
    logger.debug("Simulation finished", steps=steps, dt=h, nodes=model.N + 1)
    return Trajectory(times, theta)


def discrete_energy(theta: np.ndarray, reference: float = 0.0) -> float:
    """Trapezoid-weighted sum of (theta - reference)^2 over the nodes."""
    dev = np.asarray(theta, dtype=float) - reference
    weights = np.ones_like(dev)
    weights[0] = weights[-1] = 0.5
    return float(np.sum(weights * dev * dev))


def transfer_error(trajectory: Trajectory, spec: GevreySpec, t: Optional[float] = None) -> float:
    """max |theta(node, T) - theta_end|, relative to |theta_end - theta_start| when that is nonzero."""
    t = spec.T if t is None else t
    if trajectory.times[-1] < t - 1e-12:
        raise ValueError(f"trajectory ends at {trajectory.times[-1]}, before t={t}")
    k = int(np.argmin(np.abs(trajectory.times - t)))
    err = float(np.max(np.abs(trajectory.theta[k] - spec.theta_end)))
    span = abs(spec.delta)
    return err / span if span > 0 else err
