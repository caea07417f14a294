from fractions import Fraction

import numpy as np
import pytest

from src.rod.linalg import exact_rank
from src.rod.model import FlatOutputVector, StencilSign, build_model


def test_model_2_3():
    model = build_model(2, 3)
    assert (model.N, model.heated, model.n) == (5, 2, 5)
    assert model.B == (0, 1, 1, 0, 0)
    assert model.rows[0] == ((0, -2), (1, 2))
    assert model.rows[2] == ((2, -2), (3, 1))
    assert model.rows[4] == ((3, 2), (4, -2))


def test_state_indexing():
    model = build_model(2, 3)
    assert model.state_of_node(2) is None
    assert model.state_of_node(3) == 2
    assert model.node_of_state(2) == 3
    assert [model.node_of_state(i) for i in range(model.n)] == [0, 1, 3, 4, 5]
    with pytest.raises(IndexError):
        model.state_of_node(6)
    with pytest.raises(IndexError):
        model.node_of_state(5)


def test_laplacian_scaling_with_q():
    model = build_model(1, 2, q=2)
    assert model.N == 6 and model.heated == 2
    assert model.B == (0, 4, 4, 0, 0, 0)
    assert model.rows[1] == ((0, 4), (1, -8))


def test_negated_sign_is_negated_unscaled():
    laplacian = build_model(2, 3, q=3)
    negated = build_model(2, 3, q=3, sign=StencilSign.NEGATED)
    A_l, B_l = laplacian.as_arrays()
    A_p, B_p = negated.as_arrays()
    np.testing.assert_array_equal(A_l, -9 * A_p)
    np.testing.assert_array_equal(B_l, -9 * B_p)
    assert laplacian.with_sign(StencilSign.NEGATED) == negated
    assert negated.with_sign(StencilSign.NEGATED) is negated


def test_printed_stencil_tag_is_accepted():
    assert StencilSign("paper") is StencilSign.NEGATED
    assert build_model(2, 3, sign="paper") == build_model(2, 3, sign=StencilSign.NEGATED)
    with pytest.raises(ValueError):
        StencilSign("dirichlet")


def test_source_on_end_node():
    model = build_model(2, 0)
    assert model.heated == model.N == 2
    assert model.n == 2
    assert model.B == (0, 1)


def test_products_agree_with_dense():
    model = build_model(3, 4, q=2)
    A, B = model.dense()
    v = [Fraction(i + 1, 3) for i in range(model.n)]
    assert model.times(v) == [sum(A[i][j] * v[j] for j in range(model.n)) for i in range(model.n)]
    assert model.row_times(v) == [sum(v[i] * A[i][j] for i in range(model.n)) for j in range(model.n)]
    assert model.dot_B(v) == sum(x * y for x, y in zip(v, B))


def test_scaled_leaves_B():
    model = build_model(2, 3)
    scaled = model.scaled(-3)
    assert scaled.B == model.B
    assert scaled.rows[0] == ((0, 6), (1, -6))


@pytest.mark.parametrize("args", [(0, 3), (2, -1), (2, 3, 0)])
def test_invalid_model(args):
    with pytest.raises(ValueError):
        build_model(*args)


def test_flat_output_vector():
    model = build_model(2, 3)
    w = FlatOutputVector({1: Fraction(-2), 3: Fraction(2), 5: Fraction(1), 4: Fraction(0)})
    assert w.state_vector(model) == [0, -2, 2, 0, 1]
    assert not w.touches_heated(model)
    assert w.negated().as_ints() == {1: 2, 3: -2, 5: -1}
    assert FlatOutputVector({}).is_zero()
    with pytest.raises(ValueError):
        FlatOutputVector({2: Fraction(1)}).state_vector(model)


def test_exact_rank():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    assert exact_rank([[Fraction(1, 2), 1], [1, Fraction(1, 3)]]) == 2
    hilbert = [[Fraction(1, i + j + 1) for j in range(6)] for i in range(6)]
    assert exact_rank(hilbert) == 6
