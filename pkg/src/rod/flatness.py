"""Flat outputs assembled from Bézout cofactors and their exact verification.

z is flat for the single-input model iff w B = w A B = ... = w A^(n-2) B = 0 and
w A^(n-1) B != 0: the output then has relative degree n, so the whole state
and u are expressed from z and its derivatives.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

import structlog

from src.algebra.bezout import BezoutPair, bezout_cosh
from src.rod.linalg import exact_rank
from src.rod.model import FlatOutputVector, RodModel, StencilSign, build_model

logger = structlog.get_logger(__name__)


def flat_output_from_bezout(pair: BezoutPair, q: int = 1) -> FlatOutputVector:
    """z = sum_{k<a} c2_k theta_{qk} + sum_{k<b} c1_k theta_{N-qk}.

    L2 acts from the insulated end of the source side (node 0) and L1 from the
    far end (node N); every node lands strictly inside its own segment.
    """
    a, b = pair.problem.a, pair.problem.b
    N = q * (a + b)
    weights: Dict[int, Fraction] = {}
    for k, c in pair.L2.items():
        weights[q * k] = weights.get(q * k, Fraction(0)) + c
    for k, c in pair.L1.items():
        weights[N - q * k] = weights.get(N - q * k, Fraction(0)) + c
    return FlatOutputVector(weights)


def flat_output_printed_pairing(pair: BezoutPair, q: int = 1) -> FlatOutputVector:
    """Mirror pairing: c1_k on theta_{qk}, c2_k on theta_{N-qk}.

    L1 carries frequencies up to b-1 but the source side only has a intervals,
    so some of its weights can fall on the heated node.
    """
    a, b = pair.problem.a, pair.problem.b
    N = q * (a + b)
    weights: Dict[int, Fraction] = {}
    for k, c in pair.L1.items():
        weights[q * k] = weights.get(q * k, Fraction(0)) + c
    for k, c in pair.L2.items():
        weights[N - q * k] = weights.get(N - q * k, Fraction(0)) + c
    return FlatOutputVector(weights)


def output_sequence(model: RodModel, w: FlatOutputVector) -> List[Fraction]:
    """w A^i B for i = 0..n-1, exact."""
    v = w.state_vector(model)
    out = []
    for i in range(model.n):
        out.append(model.dot_B(v))
        if i < model.n - 1:
            v = model.row_times(v)
    return out


def is_flat_output(model: RodModel, w: FlatOutputVector) -> bool:
    """Dual controllability test: relative degree of z equals n."""
    if w.is_zero() or w.touches_heated(model):
        return False
    v = w.state_vector(model)
    for i in range(model.n):
        d = model.dot_B(v)
        if i < model.n - 1:
            if d != 0:
                return False
            v = model.row_times(v)
        else:
            return d != 0
    return False


def krylov_vectors(model: RodModel, count: int) -> List[List[int]]:
    """B, AB, ..., A^(count-1) B."""
    vectors = []
    v = list(model.B)
    for i in range(count):
        vectors.append(v)
        if i < count - 1:
            v = model.times(v)
    return vectors


def controllability_rank(model: RodModel) -> int:
    """Rank of [B, AB, ..., A^(n-1) B] over the rationals."""
    return exact_rank(krylov_vectors(model, model.n))


@dataclass(frozen=True)
class PairingVerdict:
    pairing: str
    weights: Dict[int, int]
    touches_heated: bool
    is_flat: bool


def pairing_verdicts(a: int, b: int, q: int = 1,
                     sign: StencilSign = StencilSign.LAPLACIAN) -> List[PairingVerdict]:
    """Flatness verdicts of the derived and the printed index pairings."""
    pair, _ = bezout_cosh(a, b)
    model = build_model(pair.problem.a, pair.problem.b, q, sign)
    verdicts = []
    for name, w in (("derived", flat_output_from_bezout(pair, q)),
                    ("printed", flat_output_printed_pairing(pair, q))):
        touches = w.touches_heated(model)
        flat = not touches and is_flat_output(model, w)
        verdicts.append(PairingVerdict(name, w.as_ints(), touches, flat))
    logger.debug("Pairing verdicts", a=a, b=b, q=q,
                 verdicts={v.pairing: v.is_flat for v in verdicts})
    return verdicts
