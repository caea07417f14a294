"""Dense polynomials in c = cosh(x) with exact rational coefficients."""

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

Scalar = Union[int, Fraction]


class MonomialPoly:
    """Polynomial sum_i coeffs[i] * c**i, trimmed so the top coefficient is nonzero.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [Fraction(v) for v in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MonomialPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == MonomialPoly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        n = max(len(self._coeffs), len(other._coeffs))
        return MonomialPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "MonomialPoly":
        return MonomialPoly(-v for v in self._coeffs)

    def __sub__(self, other: "MonomialPoly") -> "MonomialPoly":
        return self + (-other)

    def __mul__(self, other: Union["MonomialPoly", Scalar]) -> "MonomialPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return MonomialPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, u in enumerate(self._coeffs):
            if u == 0:
                continue
            for j, v in enumerate(other._coeffs):
                out[i + j] += u * v
        return MonomialPoly(out)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "MonomialPoly":
        return MonomialPoly(factor * v for v in self._coeffs)

    def monic(self) -> "MonomialPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def evaluate(self, c: Scalar) -> Fraction:
        acc = Fraction(0)
        for v in reversed(self._coeffs):
            acc = acc * c + v
        return acc

    def __repr__(self) -> str:
        if not self._coeffs:
            return "MonomialPoly(0)"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            v = self._coeffs[i]
            if v == 0:
                continue
            mono = "" if i == 0 else ("c" if i == 1 else f"c^{i}")
            if mono and abs(v) == 1:
                body = mono
            else:
                body = f"{abs(v)}{mono}"
            sign = "-" if v < 0 else "+"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        return f"MonomialPoly({text})"


@lru_cache(maxsize=512)
def _chebyshev_integers(n: int) -> Tuple[int, ...]:
    """Integer coefficients of T_n, low degree first."""
    return chebyshev_table(n)[n]


def chebyshev_T(n: int) -> MonomialPoly:
    """T_n from T_0 = 1, T_1 = c, T_{n+1} = 2c T_n - T_{n-1}."""
    if n < 0:
        raise ValueError(f"Chebyshev index must be non-negative, got {n}")
    return MonomialPoly(_chebyshev_integers(n))


def chebyshev_table(n_max: int) -> Sequence[Tuple[int, ...]]:
    """Integer coefficient tuples of T_0 .. T_{n_max}, built in one pass."""
    table: List[Tuple[int, ...]] = [(1,)]
    if n_max >= 1:
        table.append((0, 1))
    for k in range(1, n_max):
        cur, prev = table[k], table[k - 1]
        nxt = [0] * (len(cur) + 1)
        for i, v in enumerate(cur):
            nxt[i + 1] += 2 * v
        for i, v in enumerate(prev):
            nxt[i] -= v
        table.append(tuple(nxt))
    return table
