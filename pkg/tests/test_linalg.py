from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from otoric.errors import DimensionError
from otoric.linalg import (
    IntMatrix,
    RationalVector,
    det,
    kernel_contains,
    minor,
    nullity,
    rank,
    rational_kernel_basis,
)


def square(n, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


def matrices(max_rows=5, max_cols=6, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def test_empty_determinant_is_one():
    assert det(IntMatrix(0, 0, ())) == 1


def test_det_small():
    A = IntMatrix.from_rows([[2, 3], [1, 4]])
    assert det(A) == 5
    assert det(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1


def test_det_non_square():
    with pytest.raises(DimensionError):
        det(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_big_integers_stay_exact():
    big = 10**40 + 7
    A = IntMatrix.from_rows([[big, 1], [1, big]])
    assert det(A) == big * big - 1


def test_matrix_rejects_bools_and_bad_shape():
    with pytest.raises((TypeError, ValueError)):
        IntMatrix(1, 1, (True,))
    with pytest.raises((TypeError, ValueError)):
        IntMatrix(2, 2, (1, 2, 3))


def test_minor_deletes_rows_and_columns():
    A = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert minor(A, [0], [0]) == 5 * 10 - 6 * 8
    assert minor(A, [0, 1], [1, 2]) == 7


def test_submatrix_and_labels():
    A = IntMatrix.from_rows([[1, 2], [3, 4]], row_labels=("a", "b"), col_labels=("x", "y"))
    S = A.submatrix([1], [0, 1])
    assert S.to_rows() == [[3, 4]]
    assert S.row_labels == ("b",)
    assert A.transpose().to_rows() == [[1, 3], [2, 4]]


def test_kernel_basis_matches_sympy():
    A = IntMatrix.from_rows([[1, 1, 0, 0], [2, 0, 1, 0], [0, 3, 0, 1]])
    basis = rational_kernel_basis(A)
    assert len(basis) == 1
    assert kernel_contains(A, basis[0].primitive())
    ref = sympy.Matrix(A.to_rows()).nullspace()
    assert len(ref) == 1


def test_kernel_contains_length_check():
    A = IntMatrix.from_rows([[1, 1]])
    with pytest.raises(DimensionError):
        kernel_contains(A, [1, -1, 0])


def test_rational_vector_primitive():
    v = RationalVector.from_fractions([Fraction(1, 2), Fraction(-3, 4), Fraction(0)])
    assert v.primitive() == (2, -3, 0)
    assert len(v) == 3


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 5).flatmap(square))
def test_det_matches_sympy(rows):
    n = len(rows)
    A = IntMatrix(n, n, tuple(x for r in rows for x in r))
    expected = int(sympy.Matrix(rows).det()) if n else 1
    assert det(A) == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_laplace_expansion_along_first_row(rows):
    A = IntMatrix.from_rows(rows)
    n = A.rows
    expansion = sum((-1) ** j * A[0, j] * minor(A, [0], [j]) for j in range(n))
    assert det(A) == expansion


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(rows):
    A = IntMatrix.from_rows(rows)
    assert rank(A) == sympy.Matrix(rows).rank()
    assert rank(A) + nullity(A) == A.cols
    basis = rational_kernel_basis(A)
    assert len(basis) == nullity(A)
    for b in basis:
        assert kernel_contains(A, b.primitive())
    if basis:
        M = sympy.Matrix([b.to_fractions() for b in basis])
        assert M.rank() == len(basis)
