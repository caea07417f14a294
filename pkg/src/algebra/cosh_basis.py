"""Exact polynomials in the cosh basis, sum_k c_k cosh(kx).

Products close under 2 cosh(ix) cosh(jx) = cosh((i+j)x) + cosh(|i-j|x), so the
basis never needs the monomial expansion, whose coefficients grow like 2^(k-1).
"""

import json
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

import mpmath

from src.algebra.monomial import MonomialPoly, chebyshev_table

Scalar = Union[int, Fraction]

_HALF = Fraction(1, 2)


class CoshPoly:
    """Sparse map frequency -> nonzero exact coefficient. Immutable; the zero polynomial is empty."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, Scalar]] = None):
        clean: Dict[int, Fraction] = {}
        for k, c in (terms or {}).items():
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"frequencies must be non-negative integers, got {k!r}")
            value = Fraction(c)
            if value != 0:
                clean[k] = value
        self._terms = clean

    @classmethod
    def _trusted(cls, terms: Dict[int, Fraction]) -> "CoshPoly":
        """Wrap an already-canonical dict without re-validating it."""
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def from_arrays(cls, coeffs: List[int]) -> "CoshPoly":
        """Build from a dense integer array indexed by frequency."""
        return cls._trusted({k: Fraction(c) for k, c in enumerate(coeffs) if c})

    @classmethod
    def single(cls, k: int, c: Scalar = 1) -> "CoshPoly":
        return cls({k: c})

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[int, Fraction]]:
        """Terms sorted by frequency."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_frequency(self) -> int:
        return max(self._terms) if self._terms else -1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoshPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {c}" for k, c in self.items())
        return f"CoshPoly({{{body}}})"

    def __add__(self, other: "CoshPoly") -> "CoshPoly":
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return CoshPoly._trusted(out)

    def __neg__(self) -> "CoshPoly":
        return CoshPoly._trusted({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "CoshPoly") -> "CoshPoly":
        return self + (-other)

    def scale(self, factor: Scalar) -> "CoshPoly":
        if factor == 0:
            return CoshPoly()
        return CoshPoly._trusted({k: c * factor for k, c in self._terms.items()})

    def __mul__(self, other: "CoshPoly") -> "CoshPoly":
        return cosh_mul(self, other)

    def evaluate(self, x: float, dps: int = 30) -> mpmath.mpf:
        """Numerical value of sum_k c_k cosh(kx)."""
        with mpmath.workdps(dps):
            return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * mpmath.cosh(k * mpmath.mpf(x))
                               for k, c in self._terms.items())

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), separators=(",", ":"))

    def to_jsonable(self) -> dict:
        return {"terms": [[k, f"{c.numerator}/{c.denominator}"] for k, c in self.items()]}

    @classmethod
    def from_jsonable(cls, data: Mapping) -> "CoshPoly":
        return cls({int(k): Fraction(c) for k, c in data["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "CoshPoly":
        return cls.from_jsonable(json.loads(text))


def cosh_mul(p: CoshPoly, q: CoshPoly) -> CoshPoly:
    """Product in canonical cosh-basis form."""
    acc: Dict[int, Fraction] = {}
    for i, ci in p._terms.items():
        for j, cj in q._terms.items():
            half = ci * cj * _HALF
            s, d = i + j, abs(i - j)
            acc[s] = acc.get(s, 0) + half
            acc[d] = acc.get(d, 0) + half
    return CoshPoly._trusted({k: v for k, v in acc.items() if v})


def to_monomial(p: CoshPoly) -> MonomialPoly:
    """sum_k c_k T_k(c), using cosh(kx) = T_k(cosh x)."""
    if p.is_zero():
        return MonomialPoly()
    table = chebyshev_table(p.max_frequency)
    out = [Fraction(0)] * (p.max_frequency + 1)
    for k, c in p._terms.items():
        for i, t in enumerate(table[k]):
            if t:
                out[i] += c * t
    return MonomialPoly(out)


def from_monomial(m: MonomialPoly) -> CoshPoly:
    """Inverse basis change: peel the top degree off with the matching T_d."""
    if m.is_zero():
        return CoshPoly()
    table = chebyshev_table(m.degree)
    rest = list(m.coeffs)
    terms: Dict[int, Fraction] = {}
    for d in range(m.degree, -1, -1):
        top = rest[d]
        if top == 0:
            continue
        # leading coefficient of T_d is 2^(d-1), and 1 for T_0
        c = top / table[d][d]
        terms[d] = c
        for i, t in enumerate(table[d]):
            if t:
                rest[i] -= c * t
    return CoshPoly(terms)
