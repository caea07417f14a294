"""Gevrey-class transition y(t) from theta_start to theta_end on [0, T].

The bump exp(-(tau(1 - tau))^(-sigma)) is Gevrey of order 1 + 1/sigma, below 2
for sigma > 1. Its primitive gives the transition; derivatives come from Taylor
coefficients of the bump at the evaluation point.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.integrate import quad

from src.config import DEFAULT_SIGMA
from src.planning.taylor import series_exp, series_pow, series_reciprocal

# exp(-x) underflows double precision beyond this
_EXP_UNDERFLOW = 745.0


class GevreySpec(BaseModel):
    """Rest-to-rest transition parameters."""

    model_config = ConfigDict(frozen=True)

    sigma: float = Field(DEFAULT_SIGMA, gt=1.0, description="Bump exponent; sigma > 1 keeps the Gevrey order 1 + 1/sigma below 2")
    T: float = Field(1.0, gt=0.0, description="Transfer time")
    theta_start: float = Field(0.0, description="Initial uniform temperature")
    theta_end: float = Field(1.0, description="Final uniform temperature")

    @property
    def gevrey_order(self) -> float:
        return 1.0 + 1.0 / self.sigma

    @property
    def delta(self) -> float:
        return self.theta_end - self.theta_start


@dataclass(frozen=True)
class DerivativeJet:
    """f(t), f'(t), ..., f^(J)(t)."""

    t: float
    values: Tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, j: int) -> float:
        return self.values[j]


def bump(tau: float, sigma: float) -> float:
    if tau <= 0.0 or tau >= 1.0:
        return 0.0
    s = (tau * (1.0 - tau)) ** (-sigma)
    return float(np.exp(-s)) if s < _EXP_UNDERFLOW else 0.0


@lru_cache(maxsize=64)
def bump_integral(sigma: float) -> float:
    value, _ = quad(bump, 0.0, 1.0, args=(sigma,), epsabs=0.0, epsrel=1e-13, limit=200)
    return value


def transition(tau: float, sigma: float) -> float:
    """Normalized primitive of the bump, 0 before 0 and 1 after 1."""
    if tau <= 0.0:
        return 0.0
    if tau >= 1.0:
        return 1.0
    total = bump_integral(sigma)
    if tau <= 0.5:
        part, _ = quad(bump, 0.0, tau, args=(sigma,), epsabs=0.0, epsrel=1e-13, limit=200)
        return part / total
    part, _ = quad(bump, tau, 1.0, args=(sigma,), epsabs=0.0, epsrel=1e-13, limit=200)
    return 1.0 - part / total


def bump_taylor(tau: float, sigma: float, order: int) -> np.ndarray:
    """Taylor coefficients of the bump at tau up to e^order."""
    out = np.zeros(order + 1)
    if tau <= 0.0 or tau >= 1.0:
        return out
    h = np.zeros(order + 1)
    h[0] = tau * (1.0 - tau)
    if order >= 1:
        h[1] = 1.0 - 2.0 * tau
    if order >= 2:
        h[2] = -1.0
    if h[0] ** (-sigma) >= _EXP_UNDERFLOW:
        return out
    inner = series_pow(series_reciprocal(h), sigma)
    return series_exp(-inner)


def gevrey_jet(spec: GevreySpec, t: float, J: int) -> DerivativeJet:
    """y and its first J time derivatives at t.

    Args:
        spec: Transition parameters
        t: Evaluation time
        J: Highest derivative order

    Returns:
        Jet of length J + 1
    """
    if J < 0:
        raise ValueError(f"order must be non-negative, got {J}")
    tau = t / spec.T
    values = [0.0] * (J + 1)
    if tau <= 0.0:
        values[0] = spec.theta_start
        return DerivativeJet(t, tuple(values))
    if tau >= 1.0:
        values[0] = spec.theta_end
        return DerivativeJet(t, tuple(values))

    values[0] = spec.theta_start + spec.delta * transition(tau, spec.sigma)
    if J >= 1:
        coeffs = bump_taylor(tau, spec.sigma, J - 1)
        scale = spec.delta / bump_integral(spec.sigma)
        for j in range(1, J + 1):
            values[j] = scale * factorial(j - 1) * coeffs[j - 1] / spec.T ** j
    return DerivativeJet(t, tuple(values))
