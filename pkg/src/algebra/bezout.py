"""Linear-time Bézout identity L1 T_a + L2 T_b = 1 computed in the cosh basis.

The walk tracks a single remainder d_i cosh(k_i x). Each step cancels it with a
term c cosh(f x) cosh(alpha x), leaving a new remainder at a reflected frequency:

    i)    k -> |2a - k|   contributes to L1 at f = |a - k|
    ii)a) k -> 2b - k     contributes to L2 at f = |b - k|   (when k >= b - a + 1)
    ii)b) k -> 2a + k     contributes to L1 at f = a + k     (when k <= b - a - 1)

Of the two admissible reflections one leads back to k_{i-1}; the walk takes the
other. It stops on the fixed point k = a (a even) or k = b (b even), where the
remainder is cancelled by a constant times cosh(ax) or cosh(bx).
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import structlog

from src.algebra.cosh_basis import CoshPoly, cosh_mul
from src.exceptions import BothOddError, CommonFactorError
from src.metrics import BEZOUT_DURATION, REJECTED_PROBLEMS, timed

logger = structlog.get_logger(__name__)

_ONE = CoshPoly({0: 1})


class Alpha(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class BezoutProblem:
    """Canonical problem: a < b, coprime, not both odd."""

    a: int
    b: int

    @classmethod
    def create(cls, a: int, b: int) -> Tuple["BezoutProblem", bool]:
        """Validate and canonicalize (a, b).

        Returns:
            The canonical problem and whether the inputs were swapped

        Raises:
            CommonFactorError: gcd(a, b) > 1
            BothOddError: a and b are both odd
        """
        if a < 1 or b < 1:
            raise ValueError(f"lengths must be positive integers, got a={a}, b={b}")
        g = gcd(a, b)
        if g > 1:
            REJECTED_PROBLEMS.labels(reason="common_factor").inc()
            raise CommonFactorError(a, b, g)
        if a % 2 == 1 and b % 2 == 1:
            REJECTED_PROBLEMS.labels(reason="both_odd").inc()
            raise BothOddError(a, b)
        if a > b:
            return cls(b, a), True
        return cls(a, b), False

    @property
    def step_count(self) -> int:
        return (self.a + self.b + 1) // 2

    @property
    def k_final(self) -> int:
        return self.a if self.a % 2 == 0 else self.b


@dataclass(frozen=True)
class BezoutStep:
    index: int
    alpha: Alpha
    k: int
    f: int
    c: int
    d: Fraction


@dataclass(frozen=True)
class BezoutTrace:
    problem: BezoutProblem
    steps: Tuple[BezoutStep, ...]

    def k_sequence(self) -> List[int]:
        """k_0 = 0 followed by the remainder frequency after each non-final step."""
        return [0] + [s.k for s in self.steps[:-1]]

    def alpha_value(self, step: BezoutStep) -> int:
        return self.problem.a if step.alpha is Alpha.A else self.problem.b

    def partial_sums(self) -> Iterator[Tuple[BezoutStep, CoshPoly]]:
        """Running sum_{i <= i0} c_i cosh(f_i x) cosh(alpha_i x) after each step."""
        running: Dict[int, Fraction] = {}
        for step in self.steps:
            term = cosh_mul(CoshPoly({step.f: step.c}), CoshPoly({self.alpha_value(step): 1}))
            for k, v in term.terms.items():
                total = running.get(k, 0) + v
                if total:
                    running[k] = total
                else:
                    running.pop(k, None)
            yield step, CoshPoly(running)

    def satisfies_partial_sums(self) -> bool:
        """Every partial sum equals 1 + d_i cosh(k_i x) exactly."""
        for step, partial in self.partial_sums():
            expected = _ONE + CoshPoly({step.k: step.d})
            if partial != expected:
                logger.debug("Partial sum mismatch", step=step.index, partial=repr(partial))
                return False
        return True


@dataclass(frozen=True)
class BezoutPair:
    problem: BezoutProblem
    L1: CoshPoly
    L2: CoshPoly
    swapped: bool = field(default=False, compare=False)


StepSink = Callable[[int, Alpha, int, int, int], None]


def _walk(a: int, b: int, sink: Optional[StepSink] = None) -> Tuple[List[int], List[int]]:
    """Run the reflection walk for a canonical problem.

    Args:
        a: Shorter length
        b: Longer length, coprime with a, not both odd
        sink: Optional callback receiving (index, alpha, k, f, c) per step

    Returns:
        Dense coefficient arrays of L1 (length b) and L2 (length a)
    """
    A1 = [0] * b
    A2 = [0] * a
    k_final = a if a % 2 == 0 else b
    limit = (a + b + 1) // 2

    A1[a] += 2
    c = 2
    k_prev, k = 0, 2 * a
    index = 1
    if sink is not None:
        sink(index, Alpha.A, k, a, c)

    while k != k_final:
        reflected = abs(2 * a - k)
        if reflected != k_prev:
            alpha, f, k_next = Alpha.A, abs(a - k), reflected
            A1[f] -= c
        elif k >= b - a + 1:
            alpha, f, k_next = Alpha.B, abs(b - k), 2 * b - k
            A2[f] -= c
        else:
            alpha, f, k_next = Alpha.A, a + k, 2 * a + k
            A1[f] -= c
        c = -c
        k_prev, k = k, k_next
        index += 1
        if index >= limit:
            raise RuntimeError(f"walk for ({a}, {b}) did not reach k={k_final} in {limit - 1} steps")
        if sink is not None:
            sink(index, alpha, k, f, c)

    final = -c // 2
    if a % 2 == 0:
        A1[0] += final
        alpha = Alpha.A
    else:
        A2[0] += final
        alpha = Alpha.B
    if sink is not None:
        sink(index + 1, alpha, k, 0, final)
    return A1, A2


def cofactor_arrays(problem: BezoutProblem) -> Tuple[List[int], List[int]]:
    """Dense L1 and L2 arrays of a validated problem, without timing."""
    return _walk(problem.a, problem.b)


def bezout_arrays(a: int, b: int) -> Tuple[BezoutProblem, List[int], List[int]]:
    """Coefficient arrays only: the O(a+b) kernel without trace or rational wrapping."""
    problem, _ = BezoutProblem.create(a, b)
    with timed(BEZOUT_DURATION, mode="arrays"):
        A1, A2 = cofactor_arrays(problem)
    return problem, A1, A2


def bezout_cosh(a: int, b: int) -> Tuple[BezoutPair, BezoutTrace]:
    """Cofactors (L1, L2) with L1 cosh(ax) + L2 cosh(bx) = 1 and the step trace.

    Args:
        a: Positive integer length
        b: Positive integer length

    Returns:
        The canonical pair (deg L1 <= b-1, deg L2 <= a-1) and its trace of (a+b+1)/2 steps

    Raises:
        BothOddError: a and b both odd
        CommonFactorError: gcd(a, b) > 1
    """
    problem, swapped = BezoutProblem.create(a, b)
    steps: List[BezoutStep] = []

    def record(index: int, alpha: Alpha, k: int, f: int, c: int) -> None:
        d = Fraction(c, 2) if abs(c) == 2 else Fraction(0)
        steps.append(BezoutStep(index=index, alpha=alpha, k=k, f=f, c=c, d=d))

    with timed(BEZOUT_DURATION, mode="full") as elapsed:
        A1, A2 = _walk(problem.a, problem.b, record)
        pair = BezoutPair(problem, CoshPoly.from_arrays(A1), CoshPoly.from_arrays(A2), swapped)
    logger.debug("Bezout identity computed", a=problem.a, b=problem.b, steps=len(steps),
                 seconds=elapsed["seconds"])
    return pair, BezoutTrace(problem, tuple(steps))


def verify_identity(pair: BezoutPair) -> CoshPoly:
    """Residual L1 cosh(ax) + L2 cosh(bx) - 1; zero iff the pair is a valid identity."""
    a, b = pair.problem.a, pair.problem.b
    return cosh_mul(pair.L1, CoshPoly({a: 1})) + cosh_mul(pair.L2, CoshPoly({b: 1})) - _ONE
