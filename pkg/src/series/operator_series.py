"""Even power series of cosh-basis operators, sum_j sigma_j x^(2j).

Expanding sum_k c_k cosh(k s x) gives sigma_j = sum_k c_k (k s)^(2j) / (2j)!.
The power sums sum_k c_k k^(2j) are accumulated in exact integers and rounded
once, whatever the numeric mode: with frequencies near 10^5 the individual
terms exceed the result by some twenty orders of magnitude.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from operator import mul
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import structlog

from src.algebra.cosh_basis import CoshPoly
from src.exceptions import ModeMismatchError
from src.series.numeric_mode import NumericMode

logger = structlog.get_logger(__name__)

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class OperatorSeries:
    """Coefficients sigma[j] of x^(2j), j = 0..order. scale is None for derived series."""

    sigma: Tuple
    order: int
    mode: NumericMode
    scale: Optional[Fraction] = None

    def __post_init__(self):
        if len(self.sigma) != self.order + 1:
            raise ValueError(f"series of order {self.order} needs {self.order + 1} coefficients, got {len(self.sigma)}")

    def coefficient(self, power: int):
        """Coefficient of x^power (odd powers vanish)."""
        if power % 2:
            return self.mode.zero()
        return self.sigma[power // 2]

    def _check(self, other: "OperatorSeries") -> None:
        if self.order != other.order or self.mode != other.mode:
            raise ModeMismatchError(f"order {self.order}/{self.mode.label}", f"order {other.order}/{other.mode.label}")

    def __add__(self, other: "OperatorSeries") -> "OperatorSeries":
        self._check(other)
        return OperatorSeries(tuple(u + v for u, v in zip(self.sigma, other.sigma)), self.order, self.mode)

    def __sub__(self, other: "OperatorSeries") -> "OperatorSeries":
        self._check(other)
        return OperatorSeries(tuple(u - v for u, v in zip(self.sigma, other.sigma)), self.order, self.mode)

    def scaled(self, factor) -> "OperatorSeries":
        factor = factor if not isinstance(factor, (int, Fraction)) else self.mode.convert(factor)
        return OperatorSeries(tuple(factor * v for v in self.sigma), self.order, self.mode)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.sigma)


def constant_series(value: Rational, J: int, mode: NumericMode) -> OperatorSeries:
    zero = mode.zero()
    return OperatorSeries((mode.convert(value),) + (zero,) * J, J, mode)


def _power_sums(items: Sequence[Tuple[int, Fraction]], J: int) -> Tuple[List[int], int]:
    """Exact sum_k n_k k^(2j) for j = 0..J over a common denominator D."""
    den = 1
    for _, c in items:
        den = lcm(den, c.denominator)
    nums = [c.numerator * (den // c.denominator) for _, c in items]
    squares = [k * k for k, _ in items]
    powers = [1] * len(items)
    sums = []
    for j in range(J + 1):
        sums.append(sum(map(mul, nums, powers)))
        if j < J:
            powers = list(map(mul, powers, squares))
    return sums, den


def expand_items(items: Iterable[Tuple[int, Rational]], s: Rational, J: int, mode: NumericMode) -> OperatorSeries:
    """Expansion of sum c_k cosh(k s x) from (frequency, coefficient) pairs."""
    if J < 0:
        raise ValueError(f"order must be non-negative, got {J}")
    terms = [(k, Fraction(c)) for k, c in items if c]
    s = Fraction(s)
    sums, den = _power_sums(terms, J)
    s2 = s * s
    sigma = []
    scale_pow = Fraction(1)
    for j, total in enumerate(sums):
        exact = Fraction(total, den * factorial(2 * j)) * scale_pow
        sigma.append(mode.convert(exact))
        scale_pow *= s2
    return OperatorSeries(tuple(sigma), J, mode, s)


def expand(p: CoshPoly, s: Rational, J: int, mode: NumericMode) -> OperatorSeries:
    """Power series of p(x s) truncated after x^(2J)."""
    return expand_items(p.items(), s, J, mode)


def expand_arrays(coeffs: Sequence[int], s: Rational, J: int, mode: NumericMode) -> OperatorSeries:
    """Same as expand for a dense integer array indexed by frequency."""
    return expand_items(((k, c) for k, c in enumerate(coeffs) if c), s, J, mode)


def cosh_series(r, J: int, mode: NumericMode) -> OperatorSeries:
    """Series of cosh(r x): sigma_j = r^(2j) / (2j)!."""
    if J < 0:
        raise ValueError(f"order must be non-negative, got {J}")
    r = mode.convert(r)
    r2 = r * r
    term = mode.one()
    sigma = [term]
    for j in range(1, J + 1):
        term = term * r2 / ((2 * j - 1) * (2 * j))
        sigma.append(term)
    return OperatorSeries(tuple(sigma), J, mode)


def series_mul(A: OperatorSeries, B: OperatorSeries) -> OperatorSeries:
    """Cauchy product truncated at x^(2J)."""
    A._check(B)
    zero = A.mode.zero()
    out = []
    for n in range(A.order + 1):
        acc = zero
        for i in range(n + 1):
            acc = acc + A.sigma[i] * B.sigma[n - i]
        out.append(acc)
    return OperatorSeries(tuple(out), A.order, A.mode)


def identity_residual(S1: OperatorSeries, S2: OperatorSeries, ratio: Rational) -> OperatorSeries:
    """S1(x) cosh(x) + S2(x) cosh(ratio x) - 1, truncated."""
    S1._check(S2)
    J, mode = S1.order, S1.mode
    return (series_mul(S1, cosh_series(1, J, mode))
            + series_mul(S2, cosh_series(ratio, J, mode))
            - constant_series(1, J, mode))


def normalize_pair(S1: OperatorSeries, S2: OperatorSeries, ratio: Rational) -> Tuple[OperatorSeries, OperatorSeries]:
    """Add lambda times the trivial relation so that S2 has no constant term.

    With lambda = S2[0]: S2' = S2 - lambda cosh(x), S1' = S1 + lambda cosh(ratio x).
    """
    S1._check(S2)
    J, mode = S1.order, S1.mode
    lam = S2.sigma[0]
    if lam == 0:
        return S1, S2
    S2n = S2 - cosh_series(1, J, mode).scaled(lam)
    S1n = S1 + cosh_series(ratio, J, mode).scaled(lam)
    logger.debug("Normalized series pair", lam=str(lam), order=J)
    return (OperatorSeries(S1n.sigma, J, mode, S1.scale),
            OperatorSeries(S2n.sigma, J, mode, S2.scale))
