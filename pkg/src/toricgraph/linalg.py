"""Exact and modular matrix ranks, plus integer kernel bases.

GF(p) ranks go through the kernel backend (compiled or fallback); exact
ranks use fraction-free Bareiss elimination on python ints, so there is
no overflow and no floating point anywhere.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from ._kernels import rank_mod_p

DEFAULT_PRIME = 32003


def rank(mat, field: int | None = DEFAULT_PRIME) -> int:
    """Rank of an integer matrix over GF(field), or over Q if field is None."""
    a = np.asarray(mat, dtype=np.int64)
    if a.size == 0:
        return 0
    if field is None:
        return rank_exact(a.tolist())
    return rank_mod_p(a, field)


def rank_exact(rows) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    rank_ = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for r in range(row + 1, m):
            for j in range(col + 1, n):
                a[r][j] = (a[r][j] * a[row][col] - a[r][col] * a[row][j]) // prev
            a[r][col] = 0
        prev = a[row][col]
        row += 1
        rank_ += 1
        if row == m:
            break
    return rank_


def integer_kernel_basis(mat) -> list[tuple[int, ...]]:
    """Basis of the integer kernel of ``mat``, as primitive integer vectors.

    Column elimination on ``[mat; I]``: columns of the identity block under
    the zero columns of the reduced matrix span the kernel lattice (any
    integral basis suffices for the downstream saturation).
    """
    a = [list(map(int, row)) for row in np.asarray(mat, dtype=np.int64)]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_op(j, k, q):
        # column_k -= q * column_j
        for row in a:
            row[k] -= q * row[j]
        for row in u:
            row[k] -= q * row[j]

    pivot_col = 0
    for i in range(m):
        while True:
            nonzero = [j for j in range(pivot_col, n) if a[i][j] != 0]
            if not nonzero:
                break
            j0 = min(nonzero, key=lambda j: abs(a[i][j]))
            if j0 != pivot_col:
                for row in a:
                    row[pivot_col], row[j0] = row[j0], row[pivot_col]
                for row in u:
                    row[pivot_col], row[j0] = row[j0], row[pivot_col]
            done = True
            for k in range(pivot_col + 1, n):
                if a[i][k] != 0:
                    q = a[i][k] // a[i][pivot_col]
                    col_op(pivot_col, k, q)
                    if a[i][k] != 0:
                        done = False
            if done:
                pivot_col += 1
                break
    kernel = []
    for j in range(n):
        if all(a[i][j] == 0 for i in range(m)):
            vec = [u[i][j] for i in range(n)]
            g = 0
            for v in vec:
                g = gcd(g, v)
            if g > 1:
                vec = [v // g for v in vec]
            if any(vec):
                kernel.append(tuple(vec))
    return kernel
