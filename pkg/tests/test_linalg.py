from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverdims.linalg import (QQ, Field, Matrix, extend_to_basis, in_span, intersect_subspaces,
                               parse_field, rank_kernel_image, solve)

entries = st.integers(-3, 3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rank_of_known_matrix():
    m = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    k = m.kernel()
    assert k.ncols == 1
    assert (m @ k).is_zero()


def test_exact_fractions_survive():
    m = Matrix([[3, 1], [1, 3]])
    x = solve(m, Matrix([[1], [0]]))
    assert x[0, 0] == Fraction(3, 8) and x[1, 0] == Fraction(-1, 8)


def test_inconsistent_system_returns_none():
    assert solve(Matrix([[1, 1], [1, 1]]), Matrix([[1], [2]])) is None


def test_prime_field_arithmetic():
    f = Field(5)
    m = Matrix([[1, 2], [3, 1]], field=f)   # det = -5 = 0 mod 5
    assert m.rank() == 1
    assert Matrix([[1, 2], [3, 1]]).rank() == 2


def test_parse_field():
    assert parse_field("q") == QQ
    assert parse_field("fp:7") == Field(7)
    with pytest.raises(ValueError):
        parse_field("fp:8")


def test_intersection_and_extension():
    e = Matrix.identity(3)
    a = Matrix.from_columns([e.column(0), e.column(1)], 3)
    b = Matrix.from_columns([e.column(1), e.column(2)], 3)
    i = intersect_subspaces([a, b])
    assert i.ncols == 1 and in_span(i, [0, 1, 0])
    assert extend_to_basis(a, e) == [2]


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows):
    m = Matrix(rows)
    r, k, im = rank_kernel_image(m)
    assert r + k.ncols == m.ncols
    assert im.ncols == r
    assert (m @ k).is_zero()
    assert k.rank() == k.ncols


@given(matrices(), st.lists(entries, min_size=5, max_size=5))
@settings(max_examples=60, deadline=None)
def test_solve_reproduces_consistent_rhs(rows, xs):
    m = Matrix(rows)
    x = Matrix.from_columns([xs[:m.ncols]], m.ncols)
    rhs = m @ x
    sol = solve(m, rhs)
    assert sol is not None and m @ sol == rhs


@given(matrices(4, 4))
@settings(max_examples=40, deadline=None)
def test_transpose_preserves_rank(rows):
    m = Matrix(rows)
    assert m.rank() == m.T.rank() if hasattr(m, "T") else m.transpose().rank()


def test_small_worked_cases():
    assert rank_kernel_image(Matrix.identity(2))[1].ncols == 0
    r, k, _ = rank_kernel_image(Matrix([[0] * 3] * 3))
    assert r == 0 and k == Matrix.identity(3)
    r, k, _ = rank_kernel_image(Matrix([[1, 2, 3], [2, 4, 6]]))
    assert (r, k.ncols) == (1, 2)
    assert solve(Matrix([[2]]), Matrix([[1]]))[0, 0] == Fraction(1, 2)
    assert solve(Matrix([[0]]), Matrix([[1]])) is None
    x_axis, y_axis = Matrix([[1], [0]]), Matrix([[0], [1]])
    assert intersect_subspaces([x_axis, y_axis]).ncols == 0
    assert intersect_subspaces([x_axis, x_axis]).ncols == 1


def test_trace_kernel_intersection_size():
    # V (x) V* (x) V (x) V* with dim V = 2: kernels of the three adjacent traces
    from itertools import combinations, product

    from quiverdims.psi import psi
    words = list(product(range(2), repeat=4))

    def trace_kernel(i):
        rows = {}
        for c, w in enumerate(words):
            if w[i - 1] == w[i]:
                rows.setdefault(w[:i - 1] + w[i + 1:], [0] * 16)[c] += 1
        return Matrix(list(rows.values())).kernel()

    K = {i: trace_kernel(i) for i in (1, 2, 3)}
    assert all(k.ncols == 12 for k in K.values())
    assert [intersect_subspaces([K[a], K[b]]).ncols for a, b in combinations(K, 2)] == [8, 9, 8]
    assert intersect_subspaces(list(K.values())).ncols == psi((0, 0), 4).dim == 5
