"""Exact integer/rational linear algebra for small dense systems."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .errors import IntegralityError


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> List[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly; the matrix must be invertible."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        row = a[col] = [v / p for v in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [v - factor * w for v, w in zip(a[i], row)]
    return [a[i][n] for i in range(n)]


def solve_integral(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> List[int]:
    """Like :func:`solve` but insists on an integer solution."""
    out = []
    for i, v in enumerate(solve(matrix, rhs)):
        if v.denominator != 1:
            raise IntegralityError(f"component {i} of exact solve is {v}, not an integer")
        out.append(v.numerator)
    return out


def transpose(matrix: Sequence[Sequence[int]]) -> List[List[int]]:
    return [list(col) for col in zip(*matrix)]
