"""Small exact-rational linear algebra kernel (dense, Fraction-valued).

Sizes here are tiny (dimension <= 8), so plain Gaussian elimination over
`Fraction` is both exact and fast.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import Inconsistent, UnderDetermined

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form; returns (matrix, pivot column indices)."""
    m = to_matrix(rows)
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def matvec(rows: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [
        sum((Fraction(a) * Fraction(b) for a, b in zip(row, v, strict=True)), Fraction(0))
        for row in rows
    ]


def solve_unique(a_rows: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve A x = b demanding a unique solution.

    Raises UnderDetermined when the system is solvable but does not pin x
    down, and Inconsistent when no solution exists.
    """
    a = to_matrix(a_rows)
    if not a:
        raise UnderDetermined("empty system")
    ncols = len(a[0])
    aug = [row + [Fraction(x)] for row, x in zip(a, [Fraction(v) for v in b], strict=True)]
    m, pivots = rref(aug)
    for row in m:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            raise Inconsistent("no solution satisfies all the prescribed values")
    if pivots and pivots[-1] == ncols:
        raise Inconsistent("no solution satisfies all the prescribed values")
    if len([p for p in pivots if p < ncols]) < ncols:
        raise UnderDetermined("the prescribed values do not determine a unique class")
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = m[r][-1]
    return x


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} for A given by `rows` with `ncols` columns."""
    if not rows:
        return [
            [Fraction(1) if j == i else Fraction(0) for j in range(ncols)]
            for i in range(ncols)
        ]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(v)
    return basis
