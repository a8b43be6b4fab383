from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradreg.linalg import (
    QQ,
    EchelonSpan,
    PrimeField,
    SparseMatrix,
    kernel_basis,
    parse_field,
    row_reduce,
)

F5 = PrimeField(5)


def dense(m):
    return [[m.entry(i, j) for j in range(m.ncols)] for i in range(m.nrows)]


def test_empty_matrix():
    m = SparseMatrix(QQ, 0, 0)
    reduced, pivots, rk = row_reduce(m)
    assert rk == 0 and pivots == []
    assert kernel_basis(m) == []


def test_identity_reduces_to_itself():
    m = SparseMatrix.from_dense(QQ, [[1, 0], [0, 1]])
    reduced, pivots, rk = row_reduce(m)
    assert rk == 2
    assert dense(reduced) == dense(m)
    assert kernel_basis(m) == []


def test_rank_one_hand_reduction():
    m = SparseMatrix.from_dense(QQ, [[1, 2], [2, 4]])
    reduced, pivots, rk = row_reduce(m)
    assert rk == 1
    assert pivots == [(0, 0)]
    assert dense(reduced) == [[1, 2], [0, 0]]


def test_kernel_of_zero_matrix():
    m = SparseMatrix(QQ, 1, 3)
    basis = kernel_basis(m)
    assert basis == [{0: 1}, {1: 1}, {2: 1}]


def test_kernel_hand_computation():
    m = SparseMatrix.from_dense(QQ, [[1, 1]])
    assert kernel_basis(m) == [{1: Fraction(1), 0: Fraction(-1)}]


def test_row_reduce_is_idempotent():
    m = SparseMatrix.from_dense(QQ, [[2, 4, 1], [1, 2, 0], [0, 0, 3]])
    reduced, _, _ = row_reduce(m)
    again, _, _ = row_reduce(reduced)
    assert dense(again) == dense(reduced)


def test_prime_field_arithmetic():
    assert F5.of(7) == 2
    assert F5.inv(2) == 3
    assert F5.of(Fraction(1, 2)) == 3
    with pytest.raises(ValueError):
        PrimeField(6)


def test_parse_field():
    assert parse_field("Q") is QQ
    assert parse_field("F 7").prime == 7
    assert parse_field("F32003").prime == 32003
    with pytest.raises(ValueError):
        parse_field("R")


matrices = st.lists(
    st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=5),
    min_size=1,
    max_size=5,
).filter(lambda rows: len({len(r) for r in rows}) == 1)


@settings(max_examples=120, deadline=None)
@given(matrices, st.sampled_from([QQ, F5]))
def test_rank_nullity(rows, field):
    m = SparseMatrix.from_dense(field, rows)
    _, _, rk = row_reduce(m)
    basis = kernel_basis(m)
    assert rk + len(basis) == m.ncols
    for v in basis:
        assert m.apply(v) == {}


@settings(max_examples=80, deadline=None)
@given(matrices, st.sampled_from([QQ, F5]))
def test_rref_idempotent_and_deterministic(rows, field):
    m = SparseMatrix.from_dense(field, rows)
    r1, p1, _ = row_reduce(m)
    r2, p2, _ = row_reduce(m)
    assert dense(r1) == dense(r2) and p1 == p2
    r3, _, _ = row_reduce(r1)
    assert dense(r3) == dense(r1)


@settings(max_examples=80, deadline=None)
@given(matrices, st.sampled_from([QQ, F5]))
def test_echelon_span_matches_row_space(rows, field):
    m = SparseMatrix.from_dense(field, rows)
    span = EchelonSpan(field)
    for row in m.rows:
        span.insert(dict(row))
    reduced, pivots, rk = row_reduce(m)
    assert span.dim == rk
    assert span.pivot_columns() == [c for _, c in pivots]
    # canonical RREF rows agree
    assert span.basis_rows() == [r for r in reduced.rows if r]
    for row in m.rows:
        assert span.contains(dict(row))


def test_echelon_span_insert_returns_snapshot():
    span = EchelonSpan(QQ)
    r = span.insert({0: Fraction(2), 1: Fraction(4)})
    assert r == {0: Fraction(1), 1: Fraction(2)}
    assert span.insert({0: Fraction(1), 1: Fraction(2)}) is None
    r2 = span.insert({1: Fraction(3)})
    assert r2 == {1: Fraction(1)}
    # rows stay fully reduced: pivot row at 0 lost its entry at column 1
    assert span.rows_by_pivot[0] == {0: Fraction(1)}
