"""Exact dense linear algebra over the rationals.

Plain Gaussian elimination with partial (first-nonzero) pivoting on
Fraction matrices.  Matrices here are small (at most a few hundred rows at
desk scale) so no fraction-free tricks are needed; exactness is the point.
"""

from __future__ import annotations

from fractions import Fraction


class RankDeficient(Exception):
    pass


def matrix_rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    m = [list(map(Fraction, r)) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        prow = m[rank]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            if f:
                f *= inv
                row = m[r]
                for c in range(col, ncols):
                    row[c] -= f * prow[c]
        rank += 1
        if rank == nrows:
            break
    return rank


class ExactLU:
    """LU factorization with row pivoting of a square invertible matrix.

    Stored as PA = LU with L unit lower triangular.  ``solve`` answers
    A x = b exactly; construction raises RankDeficient on singular input.
    """

    def __init__(self, rows: list[list[Fraction]]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("square matrix required")
        lu = [list(map(Fraction, r)) for r in rows]
        perm = list(range(n))
        for col in range(n):
            piv = next((r for r in range(col, n) if lu[r][col]), None)
            if piv is None:
                raise RankDeficient(f"rank < {n} (failed at column {col})")
            if piv != col:
                lu[col], lu[piv] = lu[piv], lu[col]
                perm[col], perm[piv] = perm[piv], perm[col]
            inv = 1 / lu[col][col]
            for r in range(col + 1, n):
                f = lu[r][col]
                if f:
                    f *= inv
                    lu[r][col] = f
                    lrow, crow = lu[r], lu[col]
                    for c in range(col + 1, n):
                        if crow[c]:
                            lrow[c] -= f * crow[c]
                else:
                    lu[r][col] = Fraction(0)
        self.n = n
        self.lu = lu
        self.perm = perm

    def solve(self, b: list[Fraction]) -> list[Fraction]:
        n = self.n
        y = [Fraction(b[self.perm[r]]) for r in range(n)]
        lu = self.lu
        for r in range(n):
            row = lu[r]
            acc = y[r]
            for c in range(r):
                if row[c] and y[c]:
                    acc -= row[c] * y[c]
            y[r] = acc
        for r in range(n - 1, -1, -1):
            row = lu[r]
            acc = y[r]
            for c in range(r + 1, n):
                if row[c] and y[c]:
                    acc -= row[c] * y[c]
            y[r] = acc / row[r]
        return y
