from src.rod.flatness import (
    PairingVerdict,
    controllability_rank,
    flat_output_from_bezout,
    flat_output_printed_pairing,
    is_flat_output,
    krylov_vectors,
    pairing_verdicts,
)
from src.rod.folding import FoldEvent, FoldMove, fold_tape, fold_tape_events
from src.rod.gamma import GammaElement, gamma_sequence
from src.rod.linalg import exact_rank
from src.rod.model import FlatOutputVector, RodModel, StencilSign, build_model

__all__ = [
    "PairingVerdict",
    "controllability_rank",
    "flat_output_from_bezout",
    "flat_output_printed_pairing",
    "is_flat_output",
    "krylov_vectors",
    "pairing_verdicts",
    "FoldEvent",
    "FoldMove",
    "fold_tape",
    "fold_tape_events",
    "GammaElement",
    "gamma_sequence",
    "exact_rank",
    "FlatOutputVector",
    "RodModel",
    "StencilSign",
    "build_model",
]
