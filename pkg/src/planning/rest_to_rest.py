from dataclasses import dataclass
from typing import Optional

import numpy as np
import structlog

from src.config import DEFAULT_PLAN_GRID, DEFAULT_PLAN_ORDER
from src.planning.control import ControlProfile, synthesize_control
from src.planning.gevrey import GevreySpec
from src.planning.simulator import Trajectory, simulate, stability_bound, transfer_error
from src.rod.model import build_model

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class PlanResult:
    a: int
    b: Optional[int]
    q: int
    order: int
    dt: float
    profile: ControlProfile
    trajectory: Trajectory
    transfer_error: float


def plan_rest_to_rest(
    a: int,
    b: Optional[int],
    spec: GevreySpec,
    J: int = DEFAULT_PLAN_ORDER,
    q: int = 1,
    dt: Optional[float] = None,
    grid_points: int = DEFAULT_PLAN_GRID,
) -> PlanResult:
    """Synthesize u for a uniform theta_start -> theta_end transfer and simulate it.

    Args:
        a: Length between the insulated end and the source
        b: Length beyond the source, None for a source at the end
        spec: Transition parameters
        J: Series truncation order
        q: Intervals per unit length
        dt: Time step, defaults to the stability bound
        grid_points: Control samples on [0, T]

    Returns:
        Control profile, simulated trajectory and normalized transfer error
    """
    model = build_model(a, b or 0, q)
    dt = stability_bound(model) if dt is None else dt
    grid = np.linspace(0.0, spec.T, grid_points)
    profile = synthesize_control(a, b, spec, J, grid)
    trajectory = simulate(model, profile, spec.theta_start, dt)
    error = transfer_error(trajectory, spec)
    logger.info("Rest-to-rest plan simulated", a=a, b=b, q=q, order=J, transfer_error=error)
    return PlanResult(a, b, q, J, dt, profile, trajectory, error)
