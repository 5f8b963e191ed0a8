"""Pure-Python fraction-free Gauss-Jordan elimination over the integers.

This is the fallback for :mod:`gkm._elim_ext` and the reference the compiled
kernel is benchmarked and tested against.
"""
from __future__ import annotations


def rref(matrix: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free reduced row echelon form of an integer matrix.

    Returns ``(rows, pivots)``: the nonzero rows of the reduced form and the
    pivot column of each row. Every pivot entry equals the same nonzero
    integer ``D``, every other entry of a pivot column is zero, and all
    intermediate values are minors of the input, so integer division by the
    previous pivot is exact.
    """
    a = [list(r) for r in matrix if any(r)]
    m = len(a)
    pivots: list[int] = []
    prev = 1
    k = 0
    for j in range(ncols):
        if k == m:
            break
        p = k
        while p < m and a[p][j] == 0:
            p += 1
        if p == m:
            continue
        if p != k:
            a[k], a[p] = a[p], a[k]
        rowk = a[k]
        piv = rowk[j]
        for i in range(m):
            if i == k:
                continue
            row = a[i]
            c = row[j]
            start = 0 if i < k else j
            if c == 0:
                if piv != prev:
                    for x in range(start, ncols):
                        if row[x]:
                            row[x] = piv * row[x] // prev
            else:
                for x in range(start, ncols):
                    row[x] = (piv * row[x] - c * rowk[x]) // prev
        prev = piv
        pivots.append(j)
        k += 1
    return a[:k], pivots
