"""Exact linear algebra over the rationals.

Rank uses fraction-free (Bareiss) elimination on an integer matrix obtained
by clearing denominators column by column.  Null spaces and solves use
Gauss-Jordan elimination on Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(value)


def _integer_columns(columns) -> list:
    """Scale every column by the lcm of its denominators; rank is unchanged."""
    out = []
    for col in columns:
        col = [to_fraction(x) for x in col]
        scale = lcm(*(x.denominator for x in col)) if col else 1
        out.append([int(x * scale) for x in col])
    return out


def rank(columns) -> int:
    """Rank of the matrix whose columns are given."""
    cols = _integer_columns(columns)
    if not cols or not cols[0]:
        return 0
    # work on rows = columns transposed; rank is transpose-invariant
    rows = [list(c) for c in cols]
    nrows, ncols = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                rows[i][j] = (rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
        if r == nrows:
            break
    return r


def rref(matrix) -> tuple:
    """Reduced row echelon form of a row-major matrix; returns (rows, pivot columns)."""
    rows = [[to_fraction(x) for x in row] for row in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace(columns) -> list:
    """Basis of {x : sum_j x_j * columns[j] = 0}, one Fraction vector per free column."""
    k = len(columns)
    if k == 0:
        return []
    height = len(columns[0])
    matrix = [[columns[j][i] for j in range(k)] for i in range(height)]
    rows, pivots = rref(matrix)
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * k
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve(columns, target):
    """Coefficients x with sum_j x_j * columns[j] = target, or None if inconsistent.

    The columns must be linearly independent; the solution is then unique.
    """
    k = len(columns)
    height = len(target)
    matrix = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(height)]
    rows, pivots = rref(matrix)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise ValueError("columns are linearly dependent")
    x = [Fraction(0)] * k
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][k]
    return x
