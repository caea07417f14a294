"""Paper-tape computation of the flat-output weights.

The tape has a+b unit boxes; border i carries its index on both faces, read
+1 on the front and -1 on the back. Positions are measured from the heated
crease. The long end is folded over the short one (its boxes turn face down),
then anything overhanging the short end is cut and rotated a half turn in the
plane about that end (faces kept), and anything overhanging the crease is
folded back again. Once the stack lies on [0, s], the other tape end sits
strictly inside and becomes the new short end. Euclid-style, this stops when
the short end measures one box: both ends then have the gcd length. The
signed count of the indices stacked at the odd end (position 1) gives the
flat-output coefficients up to one global sign.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
import structlog

from src.algebra.bezout import BezoutProblem

logger = structlog.get_logger(__name__)


class FoldMove(str, Enum):
    FOLD = "fold"
    CUT = "cut"


@dataclass(frozen=True)
class FoldEvent:
    """One move: where it happens, how long the moved piece is and how many boxes it holds."""

    move: FoldMove
    position: int
    length: int
    layers: int


@dataclass
class Tape:
    """Every box of the tape as one layer of the stack.

    Box m lies on [lo[m], lo[m] + 1]; inner[m] and outer[m] are the border
    indices at its lo and lo + 1 edges, face[m] is +1 front up.
    """

    lo: np.ndarray
    inner: np.ndarray
    outer: np.ndarray
    face: np.ndarray
    ends: List[int]

    @classmethod
    def laid_out(cls, a: int, b: int) -> "Tape":
        """The tape folded once at the crease, short side front up."""
        i = np.arange(a, dtype=np.int64)
        j = np.arange(b, dtype=np.int64)
        return cls(
            lo=np.concatenate([i, j]),
            inner=np.concatenate([a - i, a + j]),
            outer=np.concatenate([a - i - 1, a + j + 1]),
            face=np.concatenate([np.ones(a, dtype=np.int64), -np.ones(b, dtype=np.int64)]),
            ends=[a, b],
        )

    def _reflect(self, mask: np.ndarray, point: int) -> None:
        self.lo[mask] = 2 * point - self.lo[mask] - 1
        inner, outer = self.inner[mask], self.outer[mask]
        self.inner[mask] = outer
        self.outer[mask] = inner

    def cut(self, short: int) -> Optional[FoldEvent]:
        mask = self.lo >= short
        if not mask.any():
            return None
        event = FoldEvent(FoldMove.CUT, short, int(self.lo[mask].max()) + 1 - short, int(mask.sum()))
        self._reflect(mask, short)
        self.ends = [2 * short - p if p > short else p for p in self.ends]
        return event

    def fold(self) -> Optional[FoldEvent]:
        mask = self.lo < 0
        if not mask.any():
            return None
        event = FoldEvent(FoldMove.FOLD, 0, -int(self.lo[mask].min()), int(mask.sum()))
        self._reflect(mask, 0)
        self.face[mask] *= -1
        self.ends = [-p if p < 0 else p for p in self.ends]
        return event

    def settle(self, short: int) -> List[FoldEvent]:
        """Cut, rotate and fold until the whole stack lies on [0, short]."""
        events: List[FoldEvent] = []
        while True:
            cut = self.cut(short)
            if cut is None:
                return events
            events.append(cut)
            fold = self.fold()
            if fold is not None:
                events.append(fold)

    def odd_end_counts(self) -> Dict[int, int]:
        if np.any(self.lo != 0):
            raise RuntimeError("tape did not settle on a single box")
        totals = np.zeros(int(self.outer.max()) + 1, dtype=np.int64)
        np.add.at(totals, self.outer, self.face)
        return {int(border): int(totals[border]) for border in np.flatnonzero(totals)}


def _fold(a: int, b: int) -> Tuple[Tape, List[FoldEvent]]:
    problem, _ = BezoutProblem.create(a, b)
    a, b = problem.a, problem.b
    tape = Tape.laid_out(a, b)
    events = [FoldEvent(FoldMove.FOLD, 0, b, b)]
    short = a
    while True:
        events.extend(tape.settle(short))
        if short == 1:
            break
        nxt = min(tape.ends)
        if not 0 < nxt < short:
            raise RuntimeError(f"tape ({a}, {b}) left its end at {nxt} with short end {short}")
        short = nxt
    return tape, events


def fold_tape_events(a: int, b: int) -> List[FoldEvent]:
    """Folds and cuts in the order they are made, starting with the fold at the crease.

    Raises:
        BothOddError: a and b both odd
        CommonFactorError: gcd(a, b) > 1
    """
    return _fold(a, b)[1]


def fold_tape(a: int, b: int) -> Dict[int, int]:
    """Net signed count per border index stacked at the odd end, zero counts dropped."""
    tape, events = _fold(a, b)
    counts = tape.odd_end_counts()
    logger.debug("Tape folded", a=a, b=b, moves=len(events), layers=int(tape.lo.size))
    return counts
