"""Directions added to the controllable subspace at each step.

Element i names the direction that span{B, ..., A^(i-1) B} gains over
span{B, ..., A^(i-2) B}. Its primary node moves from the heated node into the
longer side and reflects at the far end unchanged. Its secondary node moves into
the shorter side, reflects at the insulated end unchanged and at the heated node
with a sign flip, vanishing each time it sits on the heated node.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from src.rod.model import RodModel


@dataclass(frozen=True)
class GammaElement:
    i: int
    k2: int
    k1: Optional[int]
    c1: int

    @property
    def is_control(self) -> bool:
        return self.i == 0

    def vector(self, model: RodModel) -> List[Fraction]:
        """State-space direction c1 w(k1) e_k1 + w(k2) e_k2, w = 2 on the end nodes."""
        if self.is_control:
            raise ValueError("the control direction has no state-space vector")
        v = [Fraction(0)] * model.n
        for node, coeff in ((self.k2, 1), (self.k1, self.c1)):
            if node is None or coeff == 0:
                continue
            weight = 2 if node in (0, model.N) else 1
            idx = model.state_of_node(node)
            if idx is None:
                raise ValueError(f"gamma element {self.i} points at the heated node")
            v[idx] += coeff * weight
        return v


def _primary(h: int, N: int, i: int) -> int:
    p = h + i
    return p if p <= N else 2 * N - p


def _secondary(h: int, i: int) -> Tuple[Optional[int], int]:
    """Folded position and sign of h - i on the segment [0, h]; period 4h."""
    y = i % (4 * h)
    if y == 0 or y == 2 * h:
        return None, 0
    if y <= h:
        return h - y, 1
    if y < 2 * h:
        return y - h, 1
    if y <= 3 * h:
        return h - (y - 2 * h), -1
    return y - 3 * h, -1


def gamma_sequence(a: int, b: int, q: int = 1) -> List[GammaElement]:
    """Elements 0..q(a+b); element 0 is the control direction alone."""
    if a < 1 or b < 1 or q < 1:
        raise ValueError(f"need a, b, q >= 1, got a={a}, b={b}, q={q}")
    mirrored = a > b
    short, N = (min(a, b), q * (a + b))
    h = q * short
    elements = [GammaElement(0, q * a, None, 0)]
    for i in range(1, N + 1):
        k2 = _primary(h, N, i)
        k1, c1 = _secondary(h, i)
        if mirrored:
            k2 = N - k2
            k1 = None if k1 is None else N - k1
        elements.append(GammaElement(i, k2, k1, c1))
    return elements
