# cython: language_level=3
"""Compiled GF(p) elimination kernel.

Forward row reduction of an int64 matrix modulo a prime, reporting the
rank. This is the inner loop of every homology computation, so it is
kept free of python objects past the setup stage.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def rank_mod_p(cnp.ndarray[cnp.int64_t, ndim=2] mat, long p):
    """Rank of ``mat`` over GF(p). The input array is not modified."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] a = np.remainder(mat, p)
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t row = 0
    cdef Py_ssize_t col, r, j, piv
    cdef long inv, factor, v

    for col in range(n):
        if row == m:
            break
        piv = -1
        for r in range(row, m):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(col, n):
                v = a[row, j]
                a[row, j] = a[piv, j]
                a[piv, j] = v
        inv = pow(a[row, col], p - 2, p)
        for r in range(row + 1, m):
            factor = (a[r, col] * inv) % p
            if factor == 0:
                continue
            a[r, col] = 0
            for j in range(col + 1, n):
                if a[row, j] != 0:
                    a[r, j] = (a[r, j] - factor * a[row, j]) % p
        row += 1
    return row
