"""Dense exact matrices over any ring whose elements supply +, * and ==.

Entries may be ints, Fractions, or Polynomials (mixed freely, since those
types coerce each other); nothing here ever rounds.
"""

from __future__ import annotations

from typing import Callable, Sequence

DEFAULT_CAP = 4096


def checked_dim(b: int, depth: int, cap: int = DEFAULT_CAP) -> int:
    """Validate a (base, depth) pair and return b**depth, guarding blowup."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    dim = b**depth
    if dim > cap:
        raise ValueError(f"dimension {b}^{depth} = {dim} exceeds cap {cap}")
    return dim


class Matrix:
    """Immutable dense matrix with exact entrywise arithmetic."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("rows have unequal lengths")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> Matrix:
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(
                a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
            )
        )

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in matrix addition")
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            cols = other.transpose().rows
            return Matrix(
                [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
            )
        return self.map(lambda e: e * other)

    def __rmul__(self, other):
        return self.map(lambda e: other * e)

    def power(self, k: int) -> Matrix:
        """k-th power by repeated multiplication (k is small here)."""
        if self.nrows != self.ncols:
            raise ValueError("power requires a square matrix")
        if k < 0:
            raise ValueError(f"power must be non-negative, got {k}")
        if k == 0:
            return Matrix.identity(self.nrows)
        acc = self
        for _ in range(k - 1):
            acc = acc * self
        return acc

    def kron(self, other: Matrix) -> Matrix:
        """Kronecker product; the left factor indexes the blocks."""
        rows = []
        for arow in self.rows:
            for brow in other.rows:
                rows.append([a * b for a in arow for b in brow])
        return Matrix(rows)

    def transpose(self) -> Matrix:
        return Matrix(list(zip(*self.rows)))

    def skew_transpose(self) -> Matrix:
        """Reflection across the anti-diagonal: out[i][j] = self[n-1-j][n-1-i]."""
        if self.nrows != self.ncols:
            raise ValueError("skew transpose requires a square matrix")
        n = self.nrows
        return Matrix(
            [[self.rows[n - 1 - j][n - 1 - i] for j in range(n)] for i in range(n)]
        )

    def map(self, fn: Callable) -> Matrix:
        return Matrix([[fn(e) for e in row] for row in self.rows])

    def matvec(self, vec: Sequence) -> list:
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match matrix width")
        return [sum(a * v for a, v in zip(row, vec)) for row in self.rows]

    def is_lower_triangular(self, strict: bool = False) -> bool:
        for i, row in enumerate(self.rows):
            first_banned = i + (0 if strict else 1)
            if any(e != 0 for e in row[first_banned:]):
                return False
        return True

    def diagonal(self) -> list:
        return [self.rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def __str__(self):
        body = "\n".join("  ".join(str(e) for e in row) for row in self.rows)
        return body

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})\n{self}"
