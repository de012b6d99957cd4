"""Exact matrices over the scalar types of field.py.

Elimination uses the first nonzero entry as pivot, so ranks, kernels and
reduced forms are bit-reproducible.
"""

from __future__ import annotations

from .field import rat, is_rational


def _inv(x):
    return 1 / x if is_rational(x) else x.inverse()


class ExactMatrix:
    """Dense rows-of-lists matrix of exact scalars."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n):
        return cls([[rat(1) if i == j else rat(0) for j in range(n)] for i in range(n)])

    def copy(self):
        return ExactMatrix(self.rows)

    def transpose(self):
        return ExactMatrix(list(map(list, zip(*self.rows)))) if self.rows else ExactMatrix([])

    def mul_vec(self, v):
        return [sum((a * x for a, x in zip(row, v) if a and x), rat(0)) for row in self.rows]

    def rref(self):
        """(reduced rows, pivot column list); does not modify self."""
        rows = [list(r) for r in self.rows]
        pivots = []
        row = 0
        for col in range(self.ncols):
            pivot_row = next((r for r in range(row, self.nrows) if rows[r][col]), None)
            if pivot_row is None:
                continue
            rows[row], rows[pivot_row] = rows[pivot_row], rows[row]
            inv = _inv(rows[row][col])
            rows[row] = [x * inv for x in rows[row]]
            for r in range(self.nrows):
                if r != row and rows[r][col]:
                    factor = rows[r][col]
                    rows[r] = [x - factor * y for x, y in zip(rows[r], rows[row])]
            pivots.append(col)
            row += 1
            if row == self.nrows:
                break
        return rows, pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Vectors spanning the null space, one per free column, in column order."""
        rows, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = [rat(0)] * self.ncols
            v[free] = rat(1)
            for i, col in enumerate(pivots):
                v[col] = -rows[i][free]
            basis.append(v)
        return basis

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = rat(1)
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if rows[r][col]), None)
            if pivot_row is None:
                return rat(0)
            if pivot_row != col:
                rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
                det = -det
            det = det * rows[col][col]
            inv = _inv(rows[col][col])
            for r in range(col + 1, n):
                if rows[r][col]:
                    factor = rows[r][col] * inv
                    rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
        return det

    def solve(self, b):
        """One solution of A x = b, or None if inconsistent."""
        aug = ExactMatrix([row + [bi] for row, bi in zip(self.rows, b)])
        rows, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [rat(0)] * self.ncols
        for i, col in enumerate(pivots):
            x[col] = rows[i][self.ncols]
        return x

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


def kernel_basis(matrix):
    """Null-space basis of a matrix given as ExactMatrix or rows."""
    if not isinstance(matrix, ExactMatrix):
        matrix = ExactMatrix(matrix)
    return matrix.kernel_basis()


def matrix_rank(rows):
    return ExactMatrix(rows).rank()


def det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def cross3(u, v):
    return [u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]]
