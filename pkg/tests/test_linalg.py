from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extrinsic_lie.linalg import (
    Span,
    SparseMatrix,
    bracket,
    determinant,
    identity,
    inverse,
    mat_mul,
    rank,
    rref,
    solve,
    trace_product,
)

small = st.integers(-4, 4)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_rref_pivots():
    red, piv = rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert piv == [0, 1]
    assert red[0] == [1, 0, 1] and red[1] == [0, 1, 1]


def test_determinant_known():
    assert determinant([[2, 1], [1, 2]]) == 3
    # Cartan matrix of E8 is unimodular
    e8 = [[2, 0, -1, 0, 0, 0, 0, 0], [0, 2, 0, -1, 0, 0, 0, 0], [-1, 0, 2, -1, 0, 0, 0, 0],
          [0, -1, -1, 2, -1, 0, 0, 0], [0, 0, 0, -1, 2, -1, 0, 0], [0, 0, 0, 0, -1, 2, -1, 0],
          [0, 0, 0, 0, 0, -1, 2, -1], [0, 0, 0, 0, 0, 0, -1, 2]]
    assert determinant(e8) == 1


@given(square(3))
def test_inverse_roundtrip(a):
    if determinant(a) == 0:
        with pytest.raises(ValueError):
            inverse(a)
        return
    assert mat_mul(a, inverse(a)) == identity(3)


@given(square(3), st.lists(small, min_size=3, max_size=3))
def test_solve(a, b):
    if determinant(a) == 0:
        return
    x = solve(a, b)
    assert [sum(Fraction(a[i][j]) * x[j] for j in range(3)) for i in range(3)] == b


@given(square(4))
def test_rank_matches_determinant(a):
    assert (rank(a) == 4) == (determinant(a) != 0)


@given(square(3), square(3), square(3))
def test_sparse_jacobi(a, b, c):
    x, y, z = (SparseMatrix.from_dense(m) for m in (a, b, c))
    total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert not total


@given(square(3), square(3))
def test_sparse_matches_dense(a, b):
    x, y = SparseMatrix.from_dense(a), SparseMatrix.from_dense(b)
    assert (x @ y).to_dense() == mat_mul(a, b)
    assert trace_product(x, y) == (x @ y).trace()


def test_sign_conjugation_and_permutation():
    x = SparseMatrix.from_dense([[1, 2], [3, 4]])
    assert x.conjugate_by_signs([1, -1]).to_dense() == [[1, -2], [-3, 4]]
    assert x.permuted([1, 0]).to_dense() == [[4, 3], [2, 1]]


def test_span_coordinates():
    sp = Span(track=True)
    assert sp.add({"a": 1, "b": 1})
    assert not sp.add({"a": 2, "b": 2})
    assert sp.add({"b": 1})
    assert sp.accepted == [0, 2]
    coords = sp.coordinates({"a": 3, "b": 5})
    assert coords == {0: 3, 2: 2}
    with pytest.raises(ValueError):
        sp.coordinates({"c": 1})


@settings(max_examples=50)
@given(st.lists(st.dictionaries(st.integers(0, 4), small, max_size=4), max_size=6))
def test_span_dimension_is_rank(vectors):
    sp = Span()
    for v in vectors:
        sp.add(v)
    dense = [[v.get(k, 0) for k in range(5)] for v in vectors]
    assert len(sp) == (rank(dense) if dense else 0)
