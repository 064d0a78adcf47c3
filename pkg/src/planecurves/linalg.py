"""Exact dense linear algebra over Q.

The public API (rank, rref, nullspace_basis, subspace_dimension) works on
RationalMatrix values with Fraction entries and is fully exact and
deterministic.  Internally everything runs on integer-cleared rows held in
numpy object arrays, with fraction-free elimination and content stripping to
keep entries small.  Pivots are chosen by smallest bit-length in the current
column (ties by row index), which both fixes the elimination order and keeps
coefficient growth down; the final reduced echelon form is the canonical one
over Q, so results do not depend on these internal choices.

A word-size modular engine lives in `modular`; it is only ever used for
one-sided bounds (a mod-p rank is a lower bound for the exact rank), never
as the source of a reported number on its own.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .errors import DiagnosticError

try:  # large-integer arithmetic is much faster on gmpy2 limbs when present
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = int

# rows whose largest entry stays below this many bits skip content stripping
_STRIP_BITS = 96


class RationalMatrix:
    """Dense row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows=None, cols=None):
        data = [[Fraction(v) for v in row] for row in entries]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged or mis-sized matrix data")
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def zero(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)], rows, cols)

    def entry(self, i, j):
        return self.entries[i][j]

    def transpose(self):
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"


def _to_integer_rows(entries):
    """Clear denominators row by row; returns a numpy object array."""
    out = []
    for row in entries:
        lcm = 1
        for v in row:
            d = Fraction(v).denominator
            lcm = lcm * d // gcd(lcm, d)
        out.append([int(Fraction(v) * lcm) for v in row])
    return np.array(out, dtype=object)


def _row_content(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _maybe_strip(A, i):
    row = A[i]
    big = False
    for v in row:
        if v and abs(v).bit_length() > _STRIP_BITS:
            big = True
            break
    if not big:
        return
    g = _row_content(row)
    if g > 1:
        A[i] = row // g


def int_echelon(A):
    """In-place fraction-free forward elimination of an integer object array.

    Returns (rank, pivot_columns).  Rows 0..rank-1 end up in echelon form.
    """
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        best = -1
        best_bits = None
        for i in range(r, nrows):
            v = A[i, c]
            if v != 0:
                b = abs(v).bit_length()
                if best_bits is None or b < best_bits:
                    best_bits = b
                    best = i
                    if b == 1:
                        break
        if best < 0:
            continue
        if best != r:
            tmp = A[r].copy()
            A[r] = A[best]
            A[best] = tmp
        piv = A[r, c]
        below = A[r + 1 :, c]
        mask = np.array([v != 0 for v in below], dtype=bool)
        if mask.any():
            sub = A[r + 1 :][mask]
            fac = sub[:, c].copy()
            sub = sub * piv - fac[:, None] * A[r][None, :]
            for k in range(sub.shape[0]):
                row = sub[k]
                g = _row_content(row)
                if g > 1:
                    sub[k] = row // g
            A[r + 1 :][mask] = sub
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots


def int_rref(A):
    """Canonical primitive-integer RREF.

    Returns (R, pivots) where R is a rank x ncols object array whose rows are
    content-1 with positive pivot entries; dividing each row by its pivot
    yields the unique RREF over Q.
    """
    rank, pivots = int_echelon(A)
    R = A[:rank].copy()
    for r in range(rank - 1, -1, -1):
        pc = pivots[r]
        piv = R[r, pc]
        for i in range(r):
            f = R[i, pc]
            if f != 0:
                R[i] = R[i] * piv - f * R[r]
                _maybe_strip(R, i)
    for r in range(rank):
        g = _row_content(R[r])
        if g > 1:
            R[r] = R[r] // g
        if R[r, pivots[r]] < 0:
            R[r] = -R[r]
    return R, pivots


def kernel_from_rref(R, pivots, ncols):
    """Canonical right-kernel basis from a primitive-integer RREF.

    One vector per free column j (ascending): unit at j, -R[r,j]/R[r,piv] at
    pivot coordinates, zero elsewhere.
    """
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for j in free:
        vec = [Fraction(0)] * ncols
        vec[j] = Fraction(1)
        for r in range(rank):
            val = R[r, j]
            if val:
                vec[pivots[r]] = Fraction(-int(val), int(R[r, pivots[r]]))
        basis.append(vec)
    return basis


def int_kernel(A):
    """Canonical kernel basis of an integer object array."""
    ncols = A.shape[1]
    R, pivots = int_rref(A)
    return kernel_from_rref(R, pivots, ncols)


def _rational_reconstruct(c, M, bound):
    """The unique n/d with c d = n (mod M), |n| <= bound, 0 < d <= bound,
    gcd(n, d) = 1; None when no such fraction exists."""
    r0, r1 = M, c % M
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    d = abs(s1)
    if d == 0 or d > bound:
        return None
    n = r1 if s1 > 0 else -r1
    if gcd(abs(n), d) != 1:
        return None
    return Fraction(int(n), int(d))


def multimodular_kernel(A, expected_nullity=None, max_primes=256, fallback=True):
    """Certified canonical kernel basis via Chinese remaindering.

    Computes the canonical kernel mod many word-size primes, lifts by CRT and
    rational reconstruction, and then proves the result exactly: the
    candidate vectors are visibly independent (unit free columns), the best
    prime shows rank >= ncols - nullity, and A v = 0 is verified over the
    integers by residue checks against fresh primes whose product exceeds
    the a priori bound on the entries of A v.  The two bounds meet, so the
    returned basis and its cardinality are exact.

    When expected_nullity is given (a dimension certified elsewhere), a
    prime exhibiting a smaller kernel proves the expectation wrong and
    raises ValueError.  When the entries fail to reconstruct within
    max_primes, falls back to exact elimination if `fallback` is set and
    raises DiagnosticError otherwise.
    """
    from . import modular

    nrows, ncols = A.shape
    if ncols == 0:
        return []
    if expected_nullity == 0:
        if modular.mod_rank(modular.reduce_array(A)) == ncols:
            return []
        raise ValueError("expected trivial kernel, found rank deficiency")
    pivots_ref = None
    target = expected_nullity
    residues = None
    modulus = 1
    used = 0
    next_attempt = 3
    probe = None
    result = None
    work = A
    for p in modular.primes_below(modular.PRIME):
        if used >= max_primes:
            break
        Ap = (work % p).astype(np.int64)
        piv, ker, piv_rows = modular.mod_rref_kernel(Ap, p)
        if target is None:
            target = ker.shape[0]
        if ker.shape[0] != target:
            if ker.shape[0] < target:
                if expected_nullity is not None:
                    raise ValueError(
                        "kernel smaller than the certified dimension"
                    )
                # a luckier prime: restart the accumulation on it
                target = ker.shape[0]
                pivots_ref = None
                residues = None
                modulus = 1
                used = 0
                probe = None
            else:
                continue  # unlucky prime
        if pivots_ref is None:
            pivots_ref = piv
            if work is A and len(piv_rows) < nrows:
                # the pivot rows span the row space over Q (mod-p
                # independent rows stay independent); shrink the workload
                work = A[piv_rows]
        elif piv != pivots_ref:
            continue
        ker_obj = ker.astype(object)
        if residues is None:
            residues = ker_obj
            modulus = _mpz(p)
        else:
            inv = pow(modulus % p, p - 2, p)
            delta = ((ker_obj - residues) * inv) % p
            residues = residues + modulus * delta
            modulus = modulus * p
        used += 1
        if used < next_attempt:
            continue
        next_attempt = used + max(2, used // 4)
        bound = isqrt(modulus // 2)
        if probe is None:
            flat = residues.ravel()
            nz = [i for i, v in enumerate(flat) if v]
            step = max(1, len(nz) // 32)
            probe = nz[::step][:32]
        flat = residues.ravel()
        if any(
            _rational_reconstruct(_mpz(flat[i]), modulus, bound) is None
            for i in probe
        ):
            continue
        vectors = _reconstruct_matrix(residues, modulus, bound)
        if vectors is None:
            continue
        result = vectors
        break
    if result is None:
        if not fallback:
            raise DiagnosticError(
                "multimodular kernel did not reconstruct"
            )
        return int_kernel(A)
    _verify_kernel(A, result, ncols)
    return [[Fraction(v) for v in row] for row in result]


def _reconstruct_matrix(residues, modulus, bound):
    rows = []
    for row in residues:
        out = []
        for c in row:
            if c == 0:
                out.append(Fraction(0))
                continue
            f = _rational_reconstruct(_mpz(c), modulus, bound)
            if f is None:
                return None
            out.append(f)
        rows.append(out)
    return rows


def _verify_kernel(A, vectors, ncols):
    """Prove A v = 0 over Z for every candidate v by residue arithmetic."""
    from . import modular

    cleared = np.zeros((ncols, len(vectors)), dtype=object)
    max_w = 1
    for j, vec in enumerate(vectors):
        lcm = 1
        for v in vec:
            den = v.denominator
            lcm = lcm * den // gcd(lcm, den)
        for i, v in enumerate(vec):
            w = int(v * lcm)
            cleared[i, j] = w
            if abs(w) > max_w:
                max_w = abs(w)
    max_a = 1
    for row in A:
        for v in row:
            if v and abs(v) > max_a:
                max_a = abs(v)
    bound = 2 * ncols * max_a * max_w
    checked = 1
    # primes small enough that an int64 row-times-column sum cannot overflow
    for q in modular.primes_below(isqrt((1 << 62) // max(ncols, 1))):
        if checked > bound:
            break
        Aq = (A % q).astype(np.int64)
        Wq = (cleared % q).astype(np.int64)
        if np.any((Aq @ Wq) % q):
            raise DiagnosticError(
                "reconstructed kernel fails exact verification"
            )
        checked *= q
    else:  # pragma: no cover
        raise DiagnosticError("verification prime stream exhausted")


# ---------------------------------------------------------------------------
# public RationalMatrix operations


def rank(M):
    """Exact rank over Q.  Empty matrices have rank 0."""
    if M.rows == 0 or M.cols == 0:
        return 0
    A = _to_integer_rows(M.entries)
    r, _ = int_echelon(A)
    return r


def rref(M):
    """The canonical reduced row echelon form over Q, padded with zero rows."""
    if M.rows == 0 or M.cols == 0:
        return RationalMatrix(M.entries, M.rows, M.cols)
    A = _to_integer_rows(M.entries)
    R, pivots = int_rref(A)
    out = []
    for r in range(len(pivots)):
        piv = int(R[r, pivots[r]])
        out.append([Fraction(int(v), piv) for v in R[r]])
    for _ in range(M.rows - len(pivots)):
        out.append([Fraction(0)] * M.cols)
    return RationalMatrix(out, M.rows, M.cols)


def nullspace_basis(M):
    """Canonical basis of the right kernel (cols - rank vectors)."""
    if M.cols == 0:
        return []
    if M.rows == 0:
        basis = []
        for j in range(M.cols):
            vec = [Fraction(0)] * M.cols
            vec[j] = Fraction(1)
            basis.append(vec)
        return basis
    A = _to_integer_rows(M.entries)
    return int_kernel(A)


def subspace_dimension(vectors):
    """Dimension of the span of a list of equal-length rational vectors."""
    vectors = list(vectors)
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors of mismatched lengths")
    if n == 0:
        return 0
    A = _to_integer_rows(vectors)
    r, _ = int_echelon(A)
    return r


def matvec(M, v):
    """M . v with exact arithmetic."""
    if len(v) != M.cols:
        raise ValueError("vector length does not match matrix width")
    return [
        sum((row[j] * v[j] for j in range(M.cols)), Fraction(0))
        for row in M.entries
    ]


def columns_to_array(cols, nrows):
    """Assemble sparse integer columns (dicts row -> value) into an object
    array with the columns as matrix columns."""
    A = np.zeros((nrows, len(cols)), dtype=object)
    for j, col in enumerate(cols):
        for i, v in col.items():
            A[i, j] = int(v)
    return A


def rows_to_array(rows, ncols):
    """Assemble sparse integer rows (dicts col -> value) into an object array."""
    A = np.zeros((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, v in row.items():
            A[i, j] = int(v)
    return A
