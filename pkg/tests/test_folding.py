import pytest

from src.algebra.bezout import bezout_cosh
from src.exceptions import BothOddError, CommonFactorError
from src.rod.flatness import flat_output_from_bezout
from src.rod.folding import FoldEvent, FoldMove, Tape, fold_tape, fold_tape_events
from tests.conftest import valid_pairs


def weights(a, b):
    pair, _ = bezout_cosh(a, b)
    return flat_output_from_bezout(pair).as_ints()


def test_tape_2_3_shows_the_opposite_weights():
    assert fold_tape(2, 3) == {1: 2, 3: -2, 5: -1}
    assert fold_tape_events(2, 3) == [
        FoldEvent(FoldMove.FOLD, 0, 3, 3),
        FoldEvent(FoldMove.CUT, 2, 1, 1),
        FoldEvent(FoldMove.CUT, 1, 1, 3),
    ]


def test_tape_1_2():
    assert fold_tape(1, 2) == {0: 1, 2: -2}


def test_overhang_past_the_crease_is_folded_back():
    events = fold_tape_events(4, 9)
    assert [e.move for e in events] == [
        FoldMove.FOLD, FoldMove.CUT, FoldMove.FOLD, FoldMove.CUT, FoldMove.FOLD, FoldMove.CUT,
    ]
    assert [e.position for e in events if e.move is FoldMove.CUT] == [4, 1, 1]
    assert fold_tape(4, 9) == weights(4, 9)


@pytest.mark.parametrize("a,b", valid_pairs(30))
def test_tape_marks_match_flat_output_up_to_sign(a, b):
    expected = weights(a, b)
    counts = fold_tape(a, b)
    assert counts in (expected, {k: -v for k, v in expected.items()})


@pytest.mark.parametrize("a,b", valid_pairs(40))
def test_every_box_lands_once_at_the_odd_end(a, b):
    counts = fold_tape(a, b)
    assert sum(abs(c) for c in counts.values()) == a + b
    assert all(border % 2 == b % 2 for border in counts)


@pytest.mark.parametrize("a,b", valid_pairs(40))
def test_short_end_shrinks_to_one_box(a, b):
    events = fold_tape_events(a, b)
    assert events[0] == FoldEvent(FoldMove.FOLD, 0, b, b)
    cuts = [e.position for e in events if e.move is FoldMove.CUT]
    assert cuts[0] == a and cuts[-1] == 1
    assert cuts == sorted(cuts, reverse=True)
    assert all(e.position == 0 for e in events if e.move is FoldMove.FOLD)


def test_laid_out_tape():
    tape = Tape.laid_out(2, 3)
    assert tape.lo.tolist() == [0, 1, 0, 1, 2]
    assert tape.inner.tolist() == [2, 1, 2, 3, 4]
    assert tape.outer.tolist() == [1, 0, 3, 4, 5]
    assert tape.face.tolist() == [1, 1, -1, -1, -1]
    assert tape.ends == [2, 3]


def test_unsettled_tape_cannot_be_read():
    with pytest.raises(RuntimeError):
        Tape.laid_out(2, 3).odd_end_counts()


def test_tape_is_symmetric_in_arguments():
    assert fold_tape(3, 8) == fold_tape(8, 3)


def test_tape_rejects_invalid_lengths():
    with pytest.raises(BothOddError):
        fold_tape(3, 5)
    with pytest.raises(CommonFactorError):
        fold_tape(4, 6)
