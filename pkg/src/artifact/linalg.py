"""Exact linear algebra over Q and Q(i), plus a division-free determinant for rings."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form. Entries must support field arithmetic.

    Returns (matrix, pivot_columns). Input is not modified.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c] if not isinstance(mat[r][c], int) else Fraction(1, mat[r][c])
        row = [x * inv for x in mat[r]]
        mat[r] = row
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], row)]
        pivots.append(c)
        r += 1
    return mat, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][c]
        for i in range(r + 1, len(mat)):
            a = mat[i][c]
            mat[i] = [(piv * x - a * y) // prev for x, y in zip(mat[i], mat[r])]
        prev = piv
        r += 1
        if r == len(mat):
            break
    return r


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of {x : A x = 0}, one vector per free column."""
    mat, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][f]
        basis.append(vec)
    return basis


def ring_det(matrix: Sequence[Sequence[T]], zero: T, one: T,
             is_zero: Callable[[T], bool] | None = None) -> T:
    """Determinant by Laplace expansion along rows, memoized on column subsets.

    Only ring operations are used, so polynomial entries are fine.
    """
    n = len(matrix)
    if n == 0:
        return one
    is_zero = is_zero or (lambda x: not x)
    nz = [[not is_zero(x) for x in row] for row in matrix]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: int):
        # cols is a bitmask of columns still available; returns det of rows row.. against cols
        if row == n:
            return one
        total = zero
        sign = 1
        for c in range(n):
            if not cols >> c & 1:
                continue
            if nz[row][c]:
                sub = minor(row + 1, cols & ~(1 << c))
                if not is_zero(sub):
                    term = matrix[row][c] * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return minor(0, (1 << n) - 1)
