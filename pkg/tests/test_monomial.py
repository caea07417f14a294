from fractions import Fraction

import pytest

from src.algebra.monomial import MonomialPoly, chebyshev_T, chebyshev_table


def test_chebyshev_low_degrees():
    assert chebyshev_T(0) == 1
    assert chebyshev_T(1).coeffs == (0, 1)
    assert chebyshev_T(2).coeffs == (-1, 0, 2)
    assert chebyshev_T(3).coeffs == (0, -3, 0, 4)


def test_chebyshev_values_at_plus_minus_one():
    for n in range(12):
        t = chebyshev_T(n)
        assert t.evaluate(1) == 1
        assert t.evaluate(-1) == (-1) ** n


def test_chebyshev_leading_coefficient():
    table = chebyshev_table(10)
    for n in range(1, 11):
        assert table[n][n] == 2 ** (n - 1)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        chebyshev_T(-1)


def test_arithmetic():
    c = MonomialPoly([0, 1])
    one = MonomialPoly([1])
    assert (c + one) * (c - one) == MonomialPoly([-1, 0, 1])
    assert (c * 3).coeffs == (0, 3)
    assert (c - c).is_zero()
    assert (c - c).degree == -1


def test_monic_and_evaluate():
    p = MonomialPoly([Fraction(1, 2), 0, 4])
    assert p.monic().leading == 1
    assert p.evaluate(Fraction(1, 2)) == Fraction(3, 2)


def test_trailing_zeros_trimmed():
    assert MonomialPoly([1, 0, 0]).degree == 0


def test_repr():
    assert repr(chebyshev_T(3)) == "MonomialPoly(4c^3 - 3c)"
