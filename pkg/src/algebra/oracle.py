"""Independent check: extended Euclid on T_a, T_b in the monomial basis over QQ.

This is the general-purpose route whose intermediate coefficients grow with the
2^(a-1) leading term of T_a; it is only meant for small a + b.
"""

from fractions import Fraction
from typing import Tuple

import structlog
from sympy import Poly, QQ, Rational, Symbol

from src.algebra.monomial import MonomialPoly, chebyshev_T

logger = structlog.get_logger(__name__)

_c = Symbol("c")


def _to_sympy(p: MonomialPoly) -> Poly:
    return Poly([Rational(v.numerator, v.denominator) for v in reversed(p.coeffs)] or [0], _c, domain=QQ)


def _from_sympy(p: Poly) -> MonomialPoly:
    coeffs = [Fraction(int(v.p), int(v.q)) for v in reversed(p.all_coeffs())]
    return MonomialPoly(coeffs)


def gcd_oracle(a: int, b: int) -> Tuple[MonomialPoly, MonomialPoly, MonomialPoly]:
    """Monic g = gcd(T_a, T_b) with cofactors U T_a + V T_b = g.

    When g = 1 the cofactors are the minimal-degree ones (deg U < b, deg V < a).

    Args:
        a: Positive integer
        b: Positive integer

    Returns:
        Tuple (g, U, V)
    """
    if a < 1 or b < 1:
        raise ValueError(f"oracle needs positive indices, got a={a}, b={b}")
    ta, tb = _to_sympy(chebyshev_T(a)), _to_sympy(chebyshev_T(b))
    u, v, g = ta.gcdex(tb)
    logger.debug("Extended Euclid finished", a=a, b=b, gcd_degree=g.degree())
    return _from_sympy(g), _from_sympy(u), _from_sympy(v)
