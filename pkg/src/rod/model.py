"""State-space model of the rod discretized on q(a+b) intervals.

Nodes 0..N with N = q(a+b); the heat source imposes u on node h = qa, so the
state is every other node. Insulated ends use theta_{-1} = theta_1 and
theta_{N+1} = theta_{N-1}. With b = 0 the source sits on the end node N.
"""

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import structlog

logger = structlog.get_logger(__name__)

SparseRow = Tuple[Tuple[int, int], ...]


class StencilSign(str, Enum):
    """laplacian: q^2 (theta_{i-1} - 2 theta_i + theta_{i+1}); negated: 2 theta_i - theta_{i-1} - theta_{i+1}."""

    LAPLACIAN = "laplacian"
    NEGATED = "negated"

    @classmethod
    def _missing_(cls, value):
        # "paper" is the tag of the printed, sign-flipped stencil
        if isinstance(value, str) and value.lower() == "paper":
            return cls.NEGATED
        return None


def _stencil(node: int, N: int) -> Dict[int, int]:
    """Unscaled Laplacian row of a node, with the insulated-end fold."""
    if N == 0:
        return {}
    if node == 0:
        return {0: -2, 1: 2}
    if node == N:
        return {N: -2, N - 1: 2}
    return {node - 1: 1, node: -2, node + 1: 1}


@dataclass(frozen=True)
class RodModel:
    a: int
    b: int
    q: int
    sign: StencilSign
    rows: Tuple[SparseRow, ...]
    B: Tuple[int, ...]

    @property
    def N(self) -> int:
        return self.q * (self.a + self.b)

    @property
    def heated(self) -> int:
        return self.q * self.a

    @property
    def n(self) -> int:
        return len(self.rows)

    def node_of_state(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"state index {i} outside 0..{self.n - 1}")
        return i if i < self.heated else i + 1

    def state_of_node(self, node: int) -> Optional[int]:
        """State index of a node, None for the heated node."""
        if not 0 <= node <= self.N:
            raise IndexError(f"node {node} outside 0..{self.N}")
        if node == self.heated:
            return None
        return node if node < self.heated else node - 1

    def row_times(self, v: Sequence) -> List:
        """Row vector product v A."""
        out = [0] * self.n
        for i, row in enumerate(self.rows):
            vi = v[i]
            if vi == 0:
                continue
            for j, value in row:
                out[j] += vi * value
        return out

    def times(self, v: Sequence) -> List:
        """Column vector product A v."""
        return [sum(value * v[j] for j, value in row) for row in self.rows]

    def dot_B(self, v: Sequence):
        return sum(vi * bi for vi, bi in zip(v, self.B) if bi)

    def scaled(self, factor: int) -> "RodModel":
        """Same model with A multiplied by factor (B untouched)."""
        rows = tuple(tuple((j, factor * value) for j, value in row) for row in self.rows)
        return replace(self, rows=rows)

    def dense(self) -> Tuple[List[List[Fraction]], List[Fraction]]:
        A = [[Fraction(0)] * self.n for _ in range(self.n)]
        for i, row in enumerate(self.rows):
            for j, value in row:
                A[i][j] = Fraction(value)
        return A, [Fraction(v) for v in self.B]

    def as_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Float A and B for time integration."""
        A = np.zeros((self.n, self.n))
        for i, row in enumerate(self.rows):
            for j, value in row:
                A[i, j] = value
        return A, np.asarray(self.B, dtype=float)

    def with_sign(self, sign: StencilSign) -> "RodModel":
        if sign == self.sign:
            return self
        return build_model(self.a, self.b, self.q, sign)


def build_model(a: int, b: int, q: int = 1, sign: StencilSign = StencilSign.LAPLACIAN) -> RodModel:
    """Assemble (A, B) for lengths a (source side) and b, q intervals per unit length.

    Args:
        a: Distance of the heated node from node 0, in units
        b: Remaining length; 0 puts the source on the end node
        q: Intervals per unit length
        sign: Interior stencil convention

    Returns:
        Model with integer entries; the zero pattern does not depend on sign
    """
    if a < 1 or b < 0 or q < 1:
        raise ValueError(f"need a >= 1, b >= 0, q >= 1, got a={a}, b={b}, q={q}")
    sign = StencilSign(sign)
    N, h = q * (a + b), q * a
    factor = q * q if sign is StencilSign.LAPLACIAN else -1
    rows: List[SparseRow] = []
    B: List[int] = []
    for node in range(N + 1):
        if node == h:
            continue
        row = []
        b_entry = 0
        for col, value in sorted(_stencil(node, N).items()):
            if col == h:
                b_entry += factor * value
            else:
                row.append((col if col < h else col - 1, factor * value))
        rows.append(tuple(row))
        B.append(b_entry)
    logger.debug("Rod model built", a=a, b=b, q=q, sign=sign.value, n=len(rows))
    return RodModel(a, b, q, sign, tuple(rows), tuple(B))


@dataclass(frozen=True)
class FlatOutputVector:
    """Flat output z = sum of weights[node] * theta_node."""

    weights: Mapping[int, Fraction]

    def is_zero(self) -> bool:
        return not any(self.weights.values())

    def state_vector(self, model: RodModel) -> List[Fraction]:
        v = [Fraction(0)] * model.n
        for node, weight in self.weights.items():
            if weight == 0:
                continue
            idx = model.state_of_node(node)
            if idx is None:
                raise ValueError(f"flat output puts weight {weight} on the heated node {node}")
            v[idx] += Fraction(weight)
        return v

    def touches_heated(self, model: RodModel) -> bool:
        return bool(self.weights.get(model.heated, 0))

    def negated(self) -> "FlatOutputVector":
        return FlatOutputVector({k: -v for k, v in self.weights.items()})

    def as_ints(self) -> Dict[int, int]:
        """Weights as plain integers, zeros dropped (Bézout weights are integral)."""
        return {k: int(v) for k, v in sorted(self.weights.items()) if v}
