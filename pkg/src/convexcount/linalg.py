"""Exact rational linear algebra for small dense systems.

Rationals are ``fractions.Fraction`` values, which are always held in
lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Rational = Fraction


class SingularMatrixError(ArithmeticError):
    pass


class RationalMatrix:
    """Dense row-major matrix of ``Fraction`` entries."""

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(Fraction(e) for e in entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def matvec(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(self.row(i), x)), Fraction(0)) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"RationalMatrix({self.to_rows()})"


def build_stretch_system(m: int) -> RationalMatrix:
    """``m x m`` matrix with entry ``(l, k) = l**k`` for ``l, k = 1..m``."""
    if m < 1:
        raise ValueError(f"system size must be positive, got {m}")
    return RationalMatrix(m, m, [l**k for l in range(1, m + 1) for k in range(1, m + 1)])


def gauss_solve_exact(a: RationalMatrix, y: Sequence) -> list[Fraction]:
    """Solve ``a x = y`` exactly by Gauss-Jordan elimination.

    The pivot is the first non-zero entry at or below the diagonal.  The
    solution is checked against ``a`` before it is returned.
    """
    n = a.rows
    if a.cols != n:
        raise ValueError("matrix must be square")
    if len(y) != n:
        raise ValueError("right-hand side length does not match the matrix")
    aug = [row + [Fraction(b)] for row, b in zip(a.to_rows(), y)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [e / p for e in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [e - f * q for e, q in zip(aug[r], aug[col])]
    x = [aug[i][n] for i in range(n)]
    if a.matvec(x) != [Fraction(b) for b in y]:
        raise ArithmeticError("solution failed verification")
    return x


def bareiss_determinant(a: RationalMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Rational entries are first scaled to integers by the common denominator.
    Every intermediate value is then an integer minor of the scaled matrix.
    """
    n = a.rows
    if a.cols != n:
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    den = lcm(*(e.denominator for e in a.entries))
    m = [[int(e * den) for e in row] for row in a.to_rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], den**n)

