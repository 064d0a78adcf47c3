"""Word-size modular elimination used for one-sided rank bounds.

For any integer matrix A, rank of A mod p never exceeds the rank over Q
(reduction can only kill minors), and the kernel dimension mod p is
correspondingly an upper bound for the exact kernel dimension.  The degreewise
computations in `syzygies` and `saturation` combine these bounds with exact
witnesses so that every reported dimension is certified exact; this module by
itself never produces a reported number.
"""

from __future__ import annotations

import numpy as np

PRIME = 2_147_483_647  # 2^31 - 1; products of two residues fit in int64


def reduce_array(A):
    """Reduce a numpy object (or integer) array mod PRIME into int64."""
    return (A % PRIME).astype(np.int64)


def columns_to_mod_array(cols, nrows):
    A = np.zeros((nrows, len(cols)), dtype=np.int64)
    for j, col in enumerate(cols):
        for i, v in col.items():
            A[i, j] = v % PRIME
    return A


def mod_rank(A):
    """Rank of an int64 array over GF(PRIME); destroys A."""
    nrows, ncols = A.shape
    if nrows == 0 or ncols == 0:
        return 0
    r = 0
    for c in range(ncols):
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), PRIME - 2, PRIME)
        A[r, c:] = (A[r, c:] * inv) % PRIME
        below = A[r + 1 :, c]
        mask = below != 0
        if mask.any():
            A[r + 1 :, c:][mask] = (
                A[r + 1 :, c:][mask] - below[mask, None] * A[r, c:][None, :]
            ) % PRIME
        r += 1
        if r == nrows:
            break
    return r


def mod_rank_rows(A):
    """Like mod_rank, but also reports which original rows became pivot rows.

    Returns (rank, row_indices); row_indices has length rank and refers to
    the row numbering of A before any swaps.  Destroys A.
    """
    nrows, ncols = A.shape
    perm = list(range(nrows))
    if nrows == 0 or ncols == 0:
        return 0, []
    r = 0
    for c in range(ncols):
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
            perm[r], perm[i] = perm[i], perm[r]
        inv = pow(int(A[r, c]), PRIME - 2, PRIME)
        A[r, c:] = (A[r, c:] * inv) % PRIME
        below = A[r + 1 :, c]
        mask = below != 0
        if mask.any():
            A[r + 1 :, c:][mask] = (
                A[r + 1 :, c:][mask] - below[mask, None] * A[r, c:][None, :]
            ) % PRIME
        r += 1
        if r == nrows:
            break
    return r, perm[:r]


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(start):
    """Descending stream of primes starting at the largest prime <= start."""
    n = start
    while n > 2:
        if _is_prime(n):
            yield n
        n -= 1


def mod_rref_kernel(A, p):
    """Reduced row echelon form and canonical kernel over GF(p).

    Takes an int64 array with entries already reduced mod p (p^2 must fit in
    int64) and destroys it.  Returns (pivots, kernel, pivot_rows) where
    kernel is a (nullity x ncols) int64 array in the canonical
    unit-free-column shape and pivot_rows indexes the original rows that
    carried the pivots.
    """
    nrows, ncols = A.shape
    perm = list(range(nrows))
    pivots = []
    r = 0
    for c in range(ncols):
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
            perm[r], perm[i] = perm[i], perm[r]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        col = A[:, c]
        mask = col != 0
        mask[r] = False
        if mask.any():
            A[mask, c:] = (A[mask, c:] - col[mask, None] * A[r, c:][None, :]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    kernel = np.zeros((len(free), ncols), dtype=np.int64)
    for idx, j in enumerate(free):
        kernel[idx, j] = 1
        for rr, pc in enumerate(pivots):
            v = A[rr, j]
            if v:
                kernel[idx, pc] = (-int(v)) % p
    return tuple(pivots), kernel, perm[:r]


def mod_rank_of_columns(cols, nrows):
    return mod_rank(columns_to_mod_array(cols, nrows))


def mod_nullity_of_columns(cols, nrows):
    return len(cols) - mod_rank_of_columns(cols, nrows)
