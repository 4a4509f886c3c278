"""Exact linear algebra: normal forms, rank, kernels."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latconf.errors import DimensionError, SingularMatrixError
from latconf.matrices import Matrix, frac_to_str, hnf, snf, str_to_frac

small_int = st.integers(min_value=-9, max_value=9)


def int_matrix(rows, cols):
    return st.lists(
        st.lists(small_int, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(Matrix)


def test_basic_arithmetic():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    assert a + b == Matrix([[1, 3], [4, 4]])
    assert a - b == Matrix([[1, 1], [2, 4]])
    assert a * b == Matrix([[2, 1], [4, 3]])
    assert a.transpose() == Matrix([[1, 3], [2, 4]])
    assert a.det() == -2
    assert a.rank() == 2
    assert (a * a.inverse()) == Matrix.identity(2)


def test_singular_inverse_raises():
    with pytest.raises(SingularMatrixError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_shape_mismatch_raises():
    with pytest.raises(DimensionError):
        Matrix([[1, 2]]) * Matrix([[1, 2]])


def test_fraction_strings_round_trip():
    for x in (Fraction(3), Fraction(-5, 2), Fraction(0), Fraction(7, 11)):
        assert str_to_frac(frac_to_str(x)) == x
    assert frac_to_str(Fraction(1, 2)) == "1/2"
    assert frac_to_str(Fraction(4, 2)) == "2"


def test_json_round_trip():
    m = Matrix([[Fraction(1, 2), 3], [-4, Fraction(5, 7)]])
    assert Matrix.from_json(m.to_json()) == m


@settings(max_examples=40, deadline=None)
@given(int_matrix(3, 4))
def test_hnf_postconditions(m):
    h, u = hnf(m)
    assert abs(u.det()) == 1
    assert u * m == h
    # row echelon with nonnegative entries above each pivot
    last_pivot = -1
    for i in range(h.rows):
        row = list(h.data[i])
        nz = next((j for j, x in enumerate(row) if x != 0), None)
        if nz is None:
            continue
        assert nz > last_pivot
        last_pivot = nz
        assert h.entry(i, nz) > 0
        for k in range(i):
            assert 0 <= h.entry(k, nz) < h.entry(i, nz)


@settings(max_examples=40, deadline=None)
@given(int_matrix(3, 4))
def test_snf_postconditions(m):
    d, u, v = snf(m)
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    assert u * m * v == d
    diag = [int(d.entry(i, i)) for i in range(min(d.rows, d.cols))]
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d.entry(i, j) == 0
    for a, b in zip(diag, diag[1:]):
        if b != 0:
            assert a != 0 and b % a == 0


@settings(max_examples=40, deadline=None)
@given(int_matrix(3, 5))
def test_kernel_basis(m):
    k = m.kernel_basis()
    assert k.rows == 5 - m.rank()
    if k.rows:
        assert (m * k.transpose()).is_zero()
        assert k.rank() == k.rows


@settings(max_examples=40, deadline=None)
@given(int_matrix(4, 4))
def test_rank_agrees_with_rref(m):
    red, pivots = m.rref()
    assert m.rank() == len(pivots)


def test_hnf_example():
    h, u = hnf(Matrix([[2, 4], [6, 8]]))
    assert u * Matrix([[2, 4], [6, 8]]) == h
    assert abs(u.det()) == 1
    assert h.entry(1, 0) == 0
