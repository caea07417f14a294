"""Open-loop inputs from flat-output trajectories.

With x^(2j) paired to the j-th time derivative, cosh(x sqrt(d/dt)) applied to a
trajectory only involves integer derivatives: sum_j sigma_j f^(j)(t).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
import structlog

from src.algebra.cosh_basis import CoshPoly
from src.exceptions import OrderMismatchError
from src.planning.gevrey import DerivativeJet, GevreySpec, gevrey_jet
from src.series.numeric_mode import NumericMode
from src.series.operator_series import OperatorSeries, expand

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ControlProfile:
    grid: np.ndarray
    u: np.ndarray

    def __post_init__(self):
        if len(self.grid) != len(self.u):
            raise ValueError("grid and u must have the same length")
        if len(self.grid) < 2 or np.any(np.diff(self.grid) <= 0):
            raise ValueError("grid must be strictly increasing with at least two points")

    def at(self, t: float) -> float:
        """Linear interpolation, held constant outside the grid."""
        return float(np.interp(t, self.grid, self.u))


def apply_operator(S: OperatorSeries, jet: DerivativeJet) -> float:
    """sum_j S.sigma[j] f^(j)(t)."""
    if S.order > jet.order:
        raise OrderMismatchError(S.order, jet.order + 1)
    return float(sum(float(S.sigma[j]) * jet[j] for j in range(S.order + 1)))


def control_operator(a: int, b: Optional[int]) -> CoshPoly:
    """cosh(ax) alone, or cosh(ax) cosh(bx) written as {a+b: 1/2, |b-a|: 1/2}."""
    if b is None:
        return CoshPoly({a: 1})
    half = Fraction(1, 2)
    return CoshPoly({a + b: half}) + CoshPoly({abs(b - a): half})


def synthesize_control(a: int, b: Optional[int], spec: GevreySpec, J: int,
                       grid: Sequence[float]) -> ControlProfile:
    """Input u on the grid for the flat-output trajectory of spec.

    Args:
        a: Length between the insulated end and the source
        b: Length beyond the source, None for a source at the end
        spec: Flat-output transition
        J: Series truncation order
        grid: Times within [0, T]

    Returns:
        Control profile sampled on grid
    """
    times = np.asarray(grid, dtype=float)
    if times.size and (times[0] < 0.0 or times[-1] > spec.T):
        raise ValueError(f"grid must lie within [0, {spec.T}]")
    S = expand(control_operator(a, b), 1, J, NumericMode.exact())
    u = np.array([apply_operator(S, gevrey_jet(spec, t, J)) for t in times])
    logger.info("Control synthesized", a=a, b=b, order=J, points=len(times),
                u_min=float(u.min()), u_max=float(u.max()))
    return ControlProfile(times, u)
