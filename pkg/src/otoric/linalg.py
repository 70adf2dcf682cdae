"""Exact integer linear algebra.

Everything here works on Python ints, so entries never overflow and no
floating point is involved.  Determinants and ranks use fraction-free
(Bareiss) elimination; every division performed during elimination is
checked to be exact.

Indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError

__all__ = [
    "IntMatrix",
    "RationalVector",
    "det",
    "minor",
    "rank",
    "nullity",
    "rational_kernel_basis",
    "kernel_contains",
]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]
    row_labels: tuple[str, ...] = ()
    col_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for x in self.entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"matrix entries must be int, got {type(x).__name__}")
        if not self.row_labels:
            object.__setattr__(self, "row_labels", tuple(str(i) for i in range(self.rows)))
        if not self.col_labels:
            object.__setattr__(self, "col_labels", tuple(str(j) for j in range(self.cols)))
        for name, labels, size in (
            ("row", self.row_labels, self.rows),
            ("column", self.col_labels, self.cols),
        ):
            if len(labels) != size:
                raise DimensionError(f"{name} labels: expected {size}, got {len(labels)}")
            if len(set(labels)) != size:
                raise DimensionError(f"duplicate {name} labels")

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        row_labels: Sequence[str] = (),
        col_labels: Sequence[str] = (),
        cols: int | None = None,
    ) -> "IntMatrix":
        nrows = len(rows)
        if cols is None:
            cols = len(rows[0]) if rows else len(col_labels)
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        entries = tuple(int(x) for r in rows for x in r)
        return cls(nrows, cols, entries, tuple(row_labels), tuple(col_labels))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        """Matrix formed by the given rows and columns, in the given order."""
        entries = tuple(self[i, j] for i in row_idx for j in col_idx)
        return IntMatrix(
            len(row_idx),
            len(col_idx),
            entries,
            tuple(self.row_labels[i] for i in row_idx),
            tuple(self.col_labels[j] for j in col_idx),
        )

    def delete(self, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> "IntMatrix":
        drop_r, drop_c = set(rows), set(cols)
        for i in drop_r:
            if not 0 <= i < self.rows:
                raise DimensionError(f"row index {i} out of range")
        for j in drop_c:
            if not 0 <= j < self.cols:
                raise DimensionError(f"column index {j} out of range")
        return self.submatrix(
            [i for i in range(self.rows) if i not in drop_r],
            [j for j in range(self.cols) if j not in drop_c],
        )

    def matvec(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise DimensionError(f"vector length {len(v)} != {self.cols} columns")
        return [sum(a * x for a, x in zip(self.row(i), v) if a and x) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [list(self.column(j)) for j in range(self.cols)],
            self.col_labels,
            self.row_labels,
            cols=self.rows,
        )


@dataclass(frozen=True)
class RationalVector:
    """Vector of rationals stored as integer numerators over one denominator."""

    numerators: tuple[int, ...]
    common_denominator: int = 1

    def __post_init__(self):
        if self.common_denominator <= 0:
            raise ValueError("common denominator must be positive")

    @classmethod
    def from_fractions(cls, values: Iterable[Fraction]) -> "RationalVector":
        values = [Fraction(x) for x in values]
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in values), 1)
        return cls(tuple(int(x * den) for x in values), den).reduce()

    def reduce(self) -> "RationalVector":
        g = reduce(gcd, self.numerators, self.common_denominator)
        if g <= 1:
            return self
        return RationalVector(
            tuple(x // g for x in self.numerators), self.common_denominator // g
        )

    def to_fractions(self) -> list[Fraction]:
        return [Fraction(x, self.common_denominator) for x in self.numerators]

    def primitive(self) -> tuple[int, ...]:
        """Integer multiple with coprime entries (sign preserved)."""
        g = reduce(gcd, self.numerators, 0)
        if g == 0:
            return self.numerators
        return tuple(x // g for x in self.numerators)

    def __len__(self):
        return len(self.numerators)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact Bareiss division {num} / {den}")
    return q


def _fraction_free_echelon(m: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """Bareiss elimination in place with column pivot search.

    Returns (matrix, pivot columns, number of row swaps).  Pivots are the
    lowest-index nonzero entry in the current column.
    """
    nrows = len(m)
    pivots: list[int] = []
    swaps = 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
            swaps += 1
        piv = m[r][c]
        for i in range(r + 1, nrows):
            lead = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = _exact_div(row_i[j] * piv - lead * row_r[j], prev)
            row_i[c] = 0
            # columns left of c in rows below r are already zero
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots, swaps


def det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination.  The 0x0 determinant is 1."""
    if not A.is_square:
        raise DimensionError(f"determinant of non-square {A.rows}x{A.cols} matrix")
    n = A.rows
    if n == 0:
        return 1
    m, pivots, swaps = _fraction_free_echelon(A.to_rows(), n)
    if len(pivots) < n:
        return 0
    return -m[n - 1][n - 1] if swaps % 2 else m[n - 1][n - 1]


def minor(A: IntMatrix, deleted_rows: Iterable[int] = (), deleted_cols: Iterable[int] = ()) -> int:
    """Determinant of A with the given rows and columns removed."""
    sub = A.delete(deleted_rows, deleted_cols)
    if not sub.is_square:
        raise DimensionError(
            f"surviving submatrix is {sub.rows}x{sub.cols}, not square"
        )
    return det(sub)


def rank(A: IntMatrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    _, pivots, _ = _fraction_free_echelon(A.to_rows(), A.cols)
    return len(pivots)


def nullity(A: IntMatrix) -> int:
    return A.cols - rank(A)


def rational_kernel_basis(A: IntMatrix) -> list[RationalVector]:
    """Basis of {x in Q^cols : A x = 0}, one vector per free column.

    The vector for free column f has a 1 in position f and zeros in the other
    free positions, so the basis is in reduced form with respect to the
    pivot columns.
    """
    n = A.cols
    if A.rows == 0:
        m, pivots = [], []
    else:
        m, pivots, _ = _fraction_free_echelon(A.to_rows(), n)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for t in range(len(pivots) - 1, -1, -1):
            c = pivots[t]
            row = m[t]
            s = sum((row[j] * x[j] for j in range(c + 1, n) if row[j] and x[j]), Fraction(0))
            x[c] = -s / row[c]
        basis.append(RationalVector.from_fractions(x))
    return basis


def kernel_contains(A: IntMatrix, v: Sequence[int]) -> bool:
    if len(v) != A.cols:
        raise DimensionError(f"vector length {len(v)} != {A.cols} columns")
    return all(x == 0 for x in A.matvec(v))
