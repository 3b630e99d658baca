"""
Dense matrices over a finite field with exact Gaussian elimination.
"""

from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from listsource.errors import DimensionMismatch, InvalidField, RankDeficient, SingularMatrix

RowReduction = namedtuple('RowReduction', ['rref', 'rank', 'pivots'])


def reduce_rows(field, rows, ncols):
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots = []
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        scale = field.inv(rows[pivot_row][col])
        rows[pivot_row] = [field.mul(scale, v) for v in rows[pivot_row]]
        for r in range(len(rows)):
            factor = rows[r][col]
            if r != pivot_row and factor != 0:
                rows[r] = [field.sub(v, field.mul(factor, p)) for v, p in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return pivots


class _EchelonBasis:
    """Incrementally grown basis kept in reduced form, one pivot per row."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    def reduce(self, vector):
        field = self.field
        v = list(vector)
        for row, col in zip(self.rows, self.pivots):
            factor = v[col]
            if factor != 0:
                v = [field.sub(a, field.mul(factor, b)) for a, b in zip(v, row)]
        return v

    def insert(self, vector):
        """Add vector if it is independent of the basis; report whether it was."""
        field = self.field
        v = self.reduce(vector)
        col = next((j for j, value in enumerate(v) if value != 0), None)
        if col is None:
            return False
        scale = field.inv(v[col])
        v = [field.mul(scale, a) for a in v]
        for i, row in enumerate(self.rows):
            factor = row[col]
            if factor != 0:
                self.rows[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(col)
        return True

    @property
    def rank(self):
        return len(self.rows)


@dataclass(frozen=True)
class MatrixGF:
    """Row-major matrix over `field`; immutable once built."""

    field: object
    rows: int
    cols: int
    elements: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative shape {self.rows}x{self.cols}")
        if len(self.elements) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.elements)} elements for a {self.rows}x{self.cols} matrix")
        for value in self.elements:
            if not self.field.contains(value):
                raise InvalidField(f"{value!r} is not an element of GF({self.field.order})")

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch("column count is required for an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f"ragged row of length {len(r)}, expected {cols}")
        return cls(field, len(rows), cols, tuple(int(v) for r in rows for v in r))

    @classmethod
    def identity(cls, field, n):
        return cls.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, (0,) * (rows * cols))

    def row(self, i):
        return list(self.elements[i * self.cols:(i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def get(self, i, j):
        return self.elements[i * self.cols + j]

    def as_array(self):
        return np.array(self.elements, dtype=np.int64).reshape(self.rows, self.cols)

    def mul_vec(self, x):
        """m . x over the field."""
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} for {self.cols} columns")
        field = self.field
        result = []
        for i in range(self.rows):
            acc = 0
            for a, b in zip(self.row(i), x):
                if a and b:
                    acc = field.add(acc, field.mul(a, b))
            result.append(acc)
        return result

    def apply_batch(self, xs):
        """Multiply every row of the (N x cols) array `xs`; returns N x rows."""
        xs = np.asarray(xs, dtype=np.int64)
        if xs.ndim != 2 or xs.shape[1] != self.cols:
            raise DimensionMismatch(f"batch of shape {xs.shape} for {self.cols} columns")
        h = self.as_array()
        if not self.field.is_binary:
            return (xs @ h.T) % self.field.modulus
        table = self.field.multiplication_table()
        out = np.zeros((xs.shape[0], self.rows), dtype=np.int64)
        for i in range(self.rows):
            for j in range(self.cols):
                if h[i, j]:
                    out[:, i] ^= table[xs[:, j], h[i, j]]
        return out

    def rref_rank(self):
        """Reduced row echelon form, rank and pivot columns (increasing)."""
        rows = self.to_rows()
        pivots = reduce_rows(self.field, rows, self.cols)
        reduced = MatrixGF.from_rows(self.field, rows, self.cols)
        return RowReduction(reduced, len(pivots), tuple(pivots))

    @property
    def rank(self):
        return self.rref_rank().rank

    def stack(self, other):
        """Rows of self followed by rows of other."""
        if other.cols != self.cols or other.field != self.field:
            raise DimensionMismatch(f"cannot stack {self.cols} and {other.cols} columns")
        return MatrixGF(self.field, self.rows + other.rows, self.cols, self.elements + other.elements)

    def select_columns(self, columns):
        return MatrixGF.from_rows(
            self.field, [[self.get(i, j) for j in columns] for i in range(self.rows)], len(columns))

    def solve_square(self, b):
        """Unique x with self . x = b."""
        n = self.rows
        if self.cols != n:
            raise DimensionMismatch(f"{self.rows}x{self.cols} matrix is not square")
        if len(b) != n:
            raise DimensionMismatch(f"right-hand side of length {len(b)} for {n} rows")
        augmented = [row + [int(v)] for row, v in zip(self.to_rows(), b)]
        pivots = reduce_rows(self.field, augmented, n)
        if len(pivots) < n:
            raise SingularMatrix(f"rank {len(pivots)} < {n}")
        return [augmented[i][n] for i in range(n)]

    def complete_basis(self):
        """
        Standard basis rows D with rank([self; D]) = cols.

        Scans e_0, e_1, ... in index order and keeps each vector that raises
        the rank of the stack, so the result is deterministic.
        """
        basis = _EchelonBasis(self.field, self.cols)
        for i in range(self.rows):
            if not basis.insert(self.row(i)):
                raise RankDeficient(f"parity check has rank < {self.rows} rows")
        chosen = []
        for j in range(self.cols):
            if basis.rank == self.cols:
                break
            unit = [1 if c == j else 0 for c in range(self.cols)]
            if basis.insert(unit):
                chosen.append(unit)
        return MatrixGF.from_rows(self.field, chosen, self.cols)
