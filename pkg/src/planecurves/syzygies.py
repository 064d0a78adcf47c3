"""Degreewise Jacobian syzygies of a reduced plane curve.

For a form f of degree d with Jacobian ideal J_f, the syzygy module in degree
r is the kernel of (a, b, c) -> a f_x + b f_y + c f_z on triples of degree-r
forms.  This module computes dim Syz_r for all r up to 2(d-1), the minimal
generator degrees d_1 <= ... <= d_m (the exponents), the relation degrees one
homological step up, and Hilbert function slices of J_f and of the Milnor
algebra S/J_f.

Every dimension is certified exact.  The workhorse is a two-sided sandwich:
the kernel dimension of the syzygy matrix mod p bounds dim Syz_r from above,
and the mod-p rank of the multiples of the already-found generators bounds the
generated submodule, hence dim Syz_r at generated degrees, from below.  When
the bounds agree the degree is settled without any bignum work; when they do
not (at genuine generator degrees, or for an unlucky prime) the degree is
redone with exact fraction-free elimination and new generators are extracted
from the exact kernel.  Chosen generators are additionally verified by
expanding a f_x + b f_y + c f_z with plain polynomial arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import linalg, modular
from .errors import DiagnosticError, NonReducedCurveError
from .poly import (
    HomogeneousPolynomial,
    basis_size,
    from_vector,
    is_reduced_probabilistic,
    monomial_basis,
    monomial_index,
    partials,
    zero_poly,
)


class GradedSliceBasis:
    """A basis of one graded piece of a subspace of S_k or of S_r^3."""

    __slots__ = ("degree", "ambient", "basis")

    def __init__(self, degree, ambient, basis):
        self.degree = degree
        self.ambient = ambient
        self.basis = basis

    @property
    def dimension(self):
        return len(self.basis)

    def __repr__(self):
        return (
            f"GradedSliceBasis(degree={self.degree}, ambient={self.ambient}, "
            f"dim={len(self.basis)})"
        )


class SyzygyProfile:
    """Generator and relation degrees of Syz(J_f), plus degreewise dims."""

    __slots__ = ("d", "mdr", "generator_degrees", "second_syzygy_degrees", "dims")

    def __init__(self, d, mdr, generator_degrees, second_syzygy_degrees, dims):
        self.d = d
        self.mdr = mdr
        self.generator_degrees = tuple(generator_degrees)
        self.second_syzygy_degrees = (
            None if second_syzygy_degrees is None else tuple(second_syzygy_degrees)
        )
        self.dims = dict(dims)
        if len(self.generator_degrees) < 2:
            raise DiagnosticError(
                f"syzygy module with {len(self.generator_degrees)} generators"
            )
        if self.generator_degrees[0] != self.mdr:
            raise DiagnosticError("smallest generator degree disagrees with mdr")

    def __repr__(self):
        return (
            f"SyzygyProfile(d={self.d}, generators={self.generator_degrees}, "
            f"relations={self.second_syzygy_degrees})"
        )


# ---------------------------------------------------------------------------
# matrix builders (sparse integer columns: dict row index -> value)


def _integer_partials(f):
    g = f.primitive_integer()
    return tuple(
        {e: int(c) for e, c in p.terms.items()} for p in partials(g)
    )


def _syzygy_columns(parts, d, r):
    """Columns of S_r^3 -> S_{r+d-1}; column order is block a, b, c with
    graded-lex monomials inside each block."""
    target = monomial_index(r + d - 1)
    cols = []
    for part in parts:
        items = list(part.items())
        for m in monomial_basis(r):
            col = {}
            for e, v in items:
                col[target[(m[0] + e[0], m[1] + e[1], m[2] + e[2])]] = v
            cols.append(col)
    return cols


def _shift_component(comp, m, target, offset):
    out = {}
    for e, v in comp.items():
        out[offset + target[(m[0] + e[0], m[1] + e[1], m[2] + e[2])]] = v
    return out


def _multiple_columns(gens, r):
    """Degree-r monomial multiples of syzygy triples, as vectors in the
    concatenated (a, b, c) coordinate space of 3*C(r+2,2)."""
    nr = basis_size(r)
    target = monomial_index(r)
    cols = []
    for s, comps in gens:
        if s > r:
            continue
        for m in monomial_basis(r - s):
            col = {}
            for blk, comp in enumerate(comps):
                col.update(_shift_component(comp, m, target, blk * nr))
            cols.append(col)
    return cols


def _vector_to_triple(vec, r):
    """Split a length 3*C(r+2,2) integer vector into three coefficient dicts."""
    nr = basis_size(r)
    basis = monomial_basis(r)
    comps = []
    for blk in range(3):
        comp = {}
        for i, m in enumerate(basis):
            v = vec[blk * nr + i]
            if v:
                comp[m] = v
        comps.append(comp)
    return comps


def _triple_polys(triple, r):
    return tuple(HomogeneousPolynomial(r, comp) for comp in triple)


def _primitive_int_vector(vec):
    lcm = 1
    for v in vec:
        d = v.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(v * lcm) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


# membership testing against a growing row space; rows are kept as a map
# pivot index -> integer row, each row forward-reduced only


def _leading_index(vec):
    for i, v in enumerate(vec):
        if v:
            return i
    return None


def _reduce_into(vec, rowdict):
    """Fraction-free reduction of vec by rowdict; returns the residue (a new
    integer list, content-stripped) or None when vec lies in the row space."""
    vec = list(vec)
    while True:
        lead = _leading_index(vec)
        if lead is None:
            return None
        row = rowdict.get(lead)
        if row is None:
            g = 0
            for v in vec:
                g = gcd(g, v)
            if g > 1:
                vec = [v // g for v in vec]
            return vec
        piv = row[lead]
        fac = vec[lead]
        vec = [a * piv - fac * b for a, b in zip(vec, row)]


def _rowdict_from_columns(cols, nrows):
    rowdict = {}
    for col in cols:
        vec = [0] * nrows
        for i, v in col.items():
            vec[i] = v
        res = _reduce_into(vec, rowdict)
        if res is not None:
            rowdict[_leading_index(res)] = res
    return rowdict


# ---------------------------------------------------------------------------
# the certified scan


class _Scan:
    """Cached per-curve syzygy computation."""

    def __init__(self, f):
        if f.is_zero():
            raise ValueError("the zero polynomial is not a curve")
        self.f = f.primitive_integer()
        self.d = f.degree
        self.parts = _integer_partials(self.f)
        self.bound = max(2 * (self.d - 1), 3)
        self.dims = {}
        self.gens = []  # (degree, triple of integer coefficient dicts)
        self.relations = None
        self._run()

    # exact dimension of Syz_r together with generator extraction for
    # r <= bound; degrees above the bound only settle the dimension
    def _run(self):
        for r in range(self.bound + 1):
            self._settle(r, extract=True)
        if any(s >= self.bound - 1 for s, _ in self.gens):
            raise DiagnosticError(
                "syzygy generators at the edge of the degree-"
                f"{self.bound} scan window; result untrusted"
            )

    def _settle(self, r, extract=False):
        if r in self.dims and not extract:
            return self.dims[r]
        d = self.d
        nrows = basis_size(r + d - 1)
        ambient = 3 * basis_size(r)
        syz_cols = _syzygy_columns(self.parts, d, r)
        upper = ambient - modular.mod_rank_of_columns(syz_cols, nrows)
        if upper == 0:
            # a zero kernel mod p certifies a zero kernel over Q
            self.dims[r] = 0
            return 0
        mult_cols = _multiple_columns(self.gens, r)
        lower = (
            modular.mod_rank_of_columns(mult_cols, ambient) if mult_cols else 0
        )
        if upper == lower:
            # the generated submodule already fills a space at least this
            # big, and the kernel is at most this big: both are exact
            self.dims[r] = upper
            return upper
        kernel = linalg.int_kernel(linalg.columns_to_array(syz_cols, nrows))
        self.dims[r] = len(kernel)
        if extract:
            rowdict = _rowdict_from_columns(mult_cols, ambient)
            for vec in kernel:
                ivec = _primitive_int_vector(vec)
                res = _reduce_into(ivec, rowdict)
                if res is not None:
                    triple = _vector_to_triple(ivec, r)
                    self._verify_generator(triple, r)
                    self.gens.append((r, triple))
                    rowdict[_leading_index(res)] = res
        return self.dims[r]

    def _verify_generator(self, triple, r):
        a, b, c = _triple_polys(triple, r)
        fx, fy, fz = partials(self.f)
        total = a * fx + b * fy + c * fz
        if not total.is_zero():
            raise DiagnosticError("extracted vector is not a syzygy")

    def syzygy_dim(self, r):
        if r < 0:
            return 0
        if r not in self.dims:
            self._settle(r)
        return self.dims[r]

    def generator_degrees(self):
        return tuple(sorted(s for s, _ in self.gens))

    # ----- relations among the chosen generators (one homological step up)

    def relation_degrees(self):
        """Minimal generator degrees of the module of relations (h_1..h_m)
        with sum h_i g_i = 0, in the internal syzygy grading."""
        if self.relations is not None:
            return self.relations
        m = len(self.gens)
        expected = m - 2
        if expected == 0:
            self.relations = ()
            return self.relations
        gens = sorted(self.gens, key=lambda g: g[0])
        degs = [s for s, _ in gens]
        rel_gens = []  # (e, components h_i as integer dicts)
        cap = 3 * self.d
        e = degs[0] + 1
        while len(rel_gens) < expected:
            if e > min(self.bound, cap):
                raise DiagnosticError(
                    f"found {len(rel_gens)} of {expected} relation "
                    f"generators below degree {e}; free rank check failed"
                )
            ncols = sum(basis_size(e - s) for s in degs)
            # the chosen generators span Syz_e exactly (certified by the
            # level-one scan), so the relation space dimension is forced
            dim_rel = ncols - self.syzygy_dim(e)
            if dim_rel == 0:
                e += 1
                continue
            ambient = 3 * basis_size(e)
            found_cols = self._relation_multiple_columns(rel_gens, degs, e)
            lower = (
                modular.mod_rank_of_columns(found_cols, ncols)
                if found_cols
                else 0
            )
            if lower != dim_rel:
                rel_matrix = linalg.columns_to_array(
                    _multiple_columns(gens, e), ambient
                )
                kernel = linalg.int_kernel(rel_matrix)
                if len(kernel) != dim_rel:
                    raise DiagnosticError("relation space dimension mismatch")
                rowdict = _rowdict_from_columns(found_cols, ncols)
                for vec in kernel:
                    ivec = _primitive_int_vector(vec)
                    res = _reduce_into(ivec, rowdict)
                    if res is not None:
                        comps = self._split_relation(ivec, degs, e)
                        self._verify_relation(comps, gens, e)
                        rel_gens.append((e, comps))
                        rowdict[_leading_index(res)] = res
            e += 1
        self.relations = tuple(sorted(s for s, _ in rel_gens))
        return self.relations

    @staticmethod
    def _split_relation(vec, degs, e):
        comps = []
        off = 0
        for s in degs:
            n = basis_size(e - s)
            basis = monomial_basis(e - s)
            comp = {}
            for i, mono in enumerate(basis):
                v = vec[off + i]
                if v:
                    comp[mono] = v
            comps.append(comp)
            off += n
        return comps

    @staticmethod
    def _relation_multiple_columns(rel_gens, degs, e):
        """Multiples of the found relation generators inside the block
        coordinate space of (h_1, ..., h_m) at relation degree e."""
        offsets = []
        off = 0
        for s in degs:
            offsets.append(off)
            off += basis_size(e - s)
        cols = []
        for re, comps in rel_gens:
            for m in monomial_basis(e - re):
                col = {}
                for comp, s, offset in zip(comps, degs, offsets):
                    target = monomial_index(e - s)
                    col.update(_shift_component(comp, m, target, offset))
                cols.append(col)
        return cols

    def _verify_relation(self, comps, gens, e):
        total = [zero_poly(e)] * 3
        for comp, (s, triple) in zip(comps, gens):
            h = HomogeneousPolynomial(e - s, comp)
            for i, g in enumerate(_triple_polys(triple, s)):
                total[i] = total[i] + h * g
        if any(not t.is_zero() for t in total):
            raise DiagnosticError("extracted vector is not a relation")


_SCAN_CACHE: dict[HomogeneousPolynomial, _Scan] = {}


def _scan(f):
    key = f.primitive_integer()
    scan = _SCAN_CACHE.get(key)
    if scan is None:
        scan = _Scan(key)
        _SCAN_CACHE[key] = scan
    return scan


def _check_reduced(f, skip_reduced=False):
    if f.is_zero():
        raise ValueError("the zero polynomial is not a curve")
    if not skip_reduced and not is_reduced_probabilistic(f):
        raise NonReducedCurveError("input has a repeated factor")


# ---------------------------------------------------------------------------
# public operations


def syzygy_slice(f, r):
    """Exact basis of the degree-r syzygies of the Jacobian of f."""
    if f.is_zero():
        raise ValueError("the zero polynomial is not a curve")
    if r < 0:
        return GradedSliceBasis(r, 0, [])
    g = f.primitive_integer()
    parts = _integer_partials(g)
    cols = _syzygy_columns(parts, g.degree, r)
    kernel = linalg.int_kernel(
        linalg.columns_to_array(cols, basis_size(r + g.degree - 1))
    )
    return GradedSliceBasis(r, 3 * basis_size(r), kernel)


def jacobian_slice(f, k):
    """Exact basis of (J_f)_k, in reduced echelon form."""
    if f.is_zero():
        raise ValueError("the zero polynomial is not a curve")
    d = f.degree
    nk = basis_size(k)
    if k < d - 1:
        return GradedSliceBasis(k, nk, [])
    g = f.primitive_integer()
    target = monomial_index(k)
    rows = []
    for part in _integer_partials(g):
        items = list(part.items())
        for m in monomial_basis(k - d + 1):
            row = {}
            for e, v in items:
                row[target[(m[0] + e[0], m[1] + e[1], m[2] + e[2])]] = v
            rows.append(row)
    A = linalg.rows_to_array(rows, nk)
    R, pivots = linalg.int_rref(A)
    basis = []
    for i in range(len(pivots)):
        piv = int(R[i, pivots[i]])
        basis.append([Fraction(int(v), piv) for v in R[i]])
    return GradedSliceBasis(k, nk, basis)


def jacobian_dim(f, k):
    """dim (J_f)_k via the certified syzygy dimensions."""
    d = f.degree
    if k < d - 1:
        return 0
    r = k - d + 1
    return 3 * basis_size(r) - _scan(f).syzygy_dim(r)


def milnor_hilbert(f, k):
    """Hilbert function of the Milnor algebra S/J_f at degree k."""
    if f.is_zero():
        raise ValueError("the zero polynomial is not a curve")
    if k < 0:
        return 0
    return basis_size(k) - jacobian_dim(f, k)


def mdr(f):
    """Minimal degree of a nontrivial Jacobian relation.

    Avoids the full generator scan: a zero kernel mod p already certifies a
    zero exact kernel, so only the first candidate degree needs an exact
    confirmation."""
    if f.is_zero():
        raise ValueError("the zero polynomial is not a curve")
    key = f.primitive_integer()
    cached = _SCAN_CACHE.get(key)
    d = key.degree
    parts = _integer_partials(key)
    for r in range(d):
        if cached is not None:
            dim = cached.syzygy_dim(r)
        else:
            nrows = basis_size(r + d - 1)
            cols = _syzygy_columns(parts, d, r)
            dim = 3 * basis_size(r) - modular.mod_rank_of_columns(cols, nrows)
            if dim > 0:
                dim = len(
                    linalg.int_kernel(linalg.columns_to_array(cols, nrows))
                )
        if dim > 0:
            return r
    raise DiagnosticError("no syzygy found up to the Koszul degree")


def syzygy_dims(f):
    """dict r -> dim Syz_r for r in [0, 2(d-1)]."""
    scan = _scan(f)
    return {r: scan.syzygy_dim(r) for r in range(2 * (f.degree - 1) + 1)}


def minimal_generator_degrees(f, skip_reduced=False):
    """SyzygyProfile with the exponents (d_1, ..., d_m); the relation part
    is left unset."""
    _check_reduced(f, skip_reduced)
    scan = _scan(f)
    degrees = scan.generator_degrees()
    return SyzygyProfile(f.degree, degrees[0], degrees, None, scan.dims)


def graded_resolution(f, skip_reduced=False):
    """Full SyzygyProfile including the second-syzygy degrees e_j of the
    minimal resolution of the Milnor algebra."""
    _check_reduced(f, skip_reduced)
    scan = _scan(f)
    degrees = scan.generator_degrees()
    d = f.degree
    # relation degree e in the internal grading sits at shift e + d - 1 in
    # the resolution of S/J_f
    shifts = tuple(sorted(e + d - 1 for e in scan.relation_degrees()))
    for j, e in enumerate(shifts):
        eps = e - (d + degrees[j + 2] - 1)
        if eps < 1:
            raise DiagnosticError(
                f"relation shift {e} violates e_j >= d + d_(j+2)"
            )
    return SyzygyProfile(d, degrees[0], degrees, shifts, scan.dims)


def koszul_syzygies(f):
    """The three Koszul relations among the partials, as degree d-1 triples."""
    fx, fy, fz = partials(f)
    zero = zero_poly(f.degree - 1)
    return (
        (fy, -fx, zero),
        (fz, zero, -fx),
        (zero, fz, -fy),
    )


def is_syzygy(f, triple):
    """Exact membership test: a f_x + b f_y + c f_z = 0."""
    a, b, c = triple
    fx, fy, fz = partials(f)
    return (a * fx + b * fy + c * fz).is_zero()


def syzygy_polynomials(f, r):
    """The degree-r syzygies as triples of polynomials (not just vectors)."""
    slice_ = syzygy_slice(f, r)
    nr = basis_size(r)
    out = []
    for vec in slice_.basis:
        out.append(
            tuple(
                from_vector(vec[blk * nr : (blk + 1) * nr], r)
                for blk in range(3)
            )
        )
    return out


def render_resolution(profile):
    """Resolution string: `0 -> S(-a) -> S(-b)^m + ... -> S(-c)^3 -> S`.

    Shifts in each stage are listed from most negative to least negative;
    a ^count suffix is omitted for multiplicity one.
    """

    def stage(shifts):
        counts = {}
        for s in shifts:
            counts[s] = counts.get(s, 0) + 1
        parts = []
        for s in sorted(counts, reverse=True):
            c = counts[s]
            term = f"S(-{s})"
            if c > 1:
                term += f"^{c}"
            parts.append(term)
        return " + ".join(parts)

    d = profile.d
    pieces = ["0"]
    if profile.second_syzygy_degrees:
        pieces.append(stage(profile.second_syzygy_degrees))
    pieces.append(stage(d - 1 + di for di in profile.generator_degrees))
    pieces.append(f"S(-{d - 1})^3")
    pieces.append("S")
    return " -> ".join(pieces)
