"""Fallback GF(p) elimination kernel (numpy, no compiled code).

Mirrors the interface of ``_gfcore``; selected at import time when the
extension is absent. Row operations are vectorized, so intermediate
products stay below 2**63 for any prime p < 2**31.
"""

import numpy as np


def rank_mod_p(mat, p):
    """Rank of ``mat`` over GF(p). The input array is not modified."""
    a = np.remainder(np.asarray(mat, dtype=np.int64), p)
    m, n = a.shape
    row = 0
    for col in range(n):
        if row == m:
            break
        piv = row + int(np.argmax(a[row:, col] != 0))
        if a[piv, col] == 0:
            continue
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        inv = pow(int(a[row, col]), p - 2, p)
        below = a[row + 1 :, col] != 0
        if below.any():
            rows = row + 1 + np.nonzero(below)[0]
            factors = (a[rows, col] * inv) % p
            a[rows, col:] = (a[rows, col:] - np.outer(factors, a[row, col:])) % p
        row += 1
    return row
