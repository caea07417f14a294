"""Cosh-basis arithmetic, the linear-time Bézout walk and its extended-Euclid oracle."""

from src.algebra.monomial import MonomialPoly, chebyshev_T
from src.algebra.cosh_basis import CoshPoly, cosh_mul, to_monomial, from_monomial
from src.algebra.bezout import (
    Alpha,
    BezoutPair,
    BezoutProblem,
    BezoutStep,
    BezoutTrace,
    bezout_arrays,
    bezout_cosh,
    cofactor_arrays,
    verify_identity,
)
from src.algebra.oracle import gcd_oracle

__all__ = [
    "MonomialPoly",
    "chebyshev_T",
    "CoshPoly",
    "cosh_mul",
    "to_monomial",
    "from_monomial",
    "Alpha",
    "BezoutPair",
    "BezoutProblem",
    "BezoutStep",
    "BezoutTrace",
    "bezout_arrays",
    "bezout_cosh",
    "cofactor_arrays",
    "verify_identity",
    "gcd_oracle",
]
