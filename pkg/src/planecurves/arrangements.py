"""Constructors for the named curves and arrangements, point-line duality,
and the multiplicity combinatorics of line arrangements."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .poly import (
    HomogeneousPolynomial,
    PolynomialMap,
    ProjectivePoint,
    linear_form,
    monomial_basis,
    product,
    pullback,
    variable,
)


class LineArrangement:
    """A list of pairwise non-proportional linear forms."""

    def __init__(self, lines):
        lines = list(lines)
        vecs = [_line_coeffs(f) for f in lines]
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                if _proportional(vecs[i], vecs[j]):
                    raise ValueError(f"lines {i} and {j} are proportional")
        self.lines = lines

    def __len__(self):
        return len(self.lines)

    def defining_polynomial(self):
        return product(self.lines)


class PointSet:
    """A list of pairwise distinct projective points, order preserved."""

    def __init__(self, points):
        points = [
            p if isinstance(p, ProjectivePoint) else ProjectivePoint(*p)
            for p in points
        ]
        if len(set(points)) != len(points):
            raise ValueError("points are not pairwise distinct")
        self.points = points

    def __len__(self):
        return len(self.points)

    def remove(self, point):
        if not isinstance(point, ProjectivePoint):
            point = ProjectivePoint(*point)
        return PointSet([p for p in self.points if p != point])

    def to_json(self):
        return {
            "points": [
                [str(c) for c in p.coords] for p in self.points
            ]
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            [ProjectivePoint(*(Fraction(c) for c in row)) for row in data["points"]]
        )


class MultiplicityTable:
    """Counts t_k of intersection points of multiplicity k >= 2.

    singular_points is a list of (point, multiplicity) pairs when the points
    are rational and available; closed-form tables (Fermat family) carry None.
    """

    def __init__(self, t, singular_points=None, num_lines=None):
        self.t = {k: v for k, v in t.items() if v}
        self.singular_points = singular_points
        self.num_lines = num_lines

    def max_multiplicity(self):
        return max(self.t) if self.t else 0

    def incidence_defect(self):
        """Sum t_k*C(k,2) - C(d,2); zero for an honest line arrangement."""
        if self.num_lines is None:
            raise ValueError("table carries no line count")
        pairs = sum(v * comb(k, 2) for k, v in self.t.items())
        return pairs - comb(self.num_lines, 2)


def _line_coeffs(f):
    if f.degree != 1 or f.is_zero():
        raise ValueError("expected a nonzero linear form")
    return tuple(f.coeff(m) for m in monomial_basis(1))


def _proportional(u, v):
    return (
        u[0] * v[1] == u[1] * v[0]
        and u[0] * v[2] == u[2] * v[0]
        and u[1] * v[2] == u[2] * v[1]
    )


def dual_arrangement(Z):
    """Line a*x + b*y + c*z = 0 for each point (a:b:c), order preserved."""
    if len(Z) == 0:
        raise ValueError("empty point set has no dual arrangement")
    return LineArrangement([linear_form(*p.coords) for p in Z.points])


def dual_points(A):
    """Points dual to the lines of an arrangement (inverse of dual_arrangement
    up to the canonical scaling of projective coordinates)."""
    return PointSet([ProjectivePoint(*_line_coeffs(f)) for f in A.lines])


def line_combinatorics(A):
    """Exact intersection combinatorics of a line arrangement.

    All pairwise intersection points are computed via cross products, merged
    under projective equality, and each surviving point gets multiplicity
    equal to the number of incident lines.
    """
    if len(A) < 2:
        raise ValueError("need at least two lines")
    vecs = [_line_coeffs(f) for f in A.lines]
    seen = {}
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            u, v = vecs[i], vecs[j]
            cross = (
                u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0],
            )
            pt = ProjectivePoint(*cross)
            if pt not in seen:
                mult = sum(
                    1
                    for w in vecs
                    if w[0] * pt.coords[0] + w[1] * pt.coords[1] + w[2] * pt.coords[2]
                    == 0
                )
                seen[pt] = mult
    t = {}
    for mult in seen.values():
        t[mult] = t.get(mult, 0) + 1
    return MultiplicityTable(
        t, singular_points=sorted(seen.items(), key=lambda kv: -kv[1]), num_lines=len(A)
    )


def tjurina_ordinary(table):
    """Total Tjurina number of an arrangement with only ordinary singular
    points: sum over points of (multiplicity - 1)^2."""
    return sum(v * (k - 1) ** 2 for k, v in table.t.items())


# ---------------------------------------------------------------------------
# Fermat family

def _power_difference(var_a, var_b, n):
    """var_a^n - var_b^n as a form."""
    ea = [0, 0, 0]
    eb = [0, 0, 0]
    ea[var_a] = n
    eb[var_b] = n
    return HomogeneousPolynomial(n, {tuple(ea): 1, tuple(eb): -1})


def _cyclotomic_like(var_a, var_b, n):
    """(var_a^n - var_b^n) / (var_a - var_b)."""
    terms = {}
    for i in range(n):
        e = [0, 0, 0]
        e[var_a] = n - 1 - i
        e[var_b] = i
        terms[tuple(e)] = 1
    return HomogeneousPolynomial(n - 1, terms)


def fermat(n):
    """The 3n-line arrangement (x^n - y^n)(y^n - z^n)(z^n - x^n).

    The individual lines need n-th roots of unity, so only the rational
    product polynomial is returned, together with the closed-form
    multiplicity table: n^2 triple points plus three points of multiplicity n
    (merged into t_3 when n = 3).
    """
    if n < 3:
        raise ValueError("fermat arrangement needs n >= 3")
    poly = product(
        [
            _power_difference(0, 1, n),
            _power_difference(1, 2, n),
            _power_difference(2, 0, n),
        ]
    )
    t = {3: n * n}
    t[n] = t.get(n, 0) + 3
    table = MultiplicityTable(t, singular_points=None, num_lines=3 * n)
    return poly, table


def fermat_deleted(n):
    """The arrangement of 3n - 1 lines obtained by deleting x - y from the
    Fermat arrangement; degree 3n - 1, exact rational coefficients."""
    if n < 3:
        raise ValueError("deleted Fermat arrangement needs n >= 3")
    return product(
        [
            _cyclotomic_like(0, 1, n),
            _power_difference(1, 2, n),
            _power_difference(2, 0, n),
        ]
    )


def fermat_deleted_table(n):
    """Closed-form multiplicity table of the deleted Fermat arrangement:
    two points of multiplicity n, one of multiplicity n-1, n^2 - n triple
    points and n double points (values at equal multiplicity merge)."""
    if n < 3:
        raise ValueError("deleted Fermat arrangement needs n >= 3")
    t = {}
    for k, v in ((n, 2), (n - 1, 1), (3, n * n - n), (2, n)):
        t[k] = t.get(k, 0) + v
    return MultiplicityTable(t, singular_points=None, num_lines=3 * n - 1)


# ---------------------------------------------------------------------------
# Kummer covers and the conic family

def kummer_map(k):
    x, y, z = variable(0), variable(1), variable(2)
    pk = HomogeneousPolynomial(k, {(k, 0, 0): 1})
    qk = HomogeneousPolynomial(k, {(0, k, 0): 1})
    rk = HomogeneousPolynomial(k, {(0, 0, k): 1})
    return PolynomialMap(pk, qk, rk)


def kummer_pullback(f, k):
    """Pullback of f under (x:y:z) -> (x^k : y^k : z^k)."""
    if k < 2:
        raise ValueError("Kummer cover needs k >= 2")
    return pullback(f, kummer_map(k))


def conic_family(k):
    """x^k y^k + z^{2k}: the union of k smooth conics, singular exactly at
    (1:0:0) and (0:1:0)."""
    if k < 2:
        raise ValueError("conic family needs k >= 2")
    return HomogeneousPolynomial(2 * k, {(k, k, 0): 1, (0, 0, 2 * k): 1})


# ---------------------------------------------------------------------------
# named objects

_Z18_COORDS = [
    (0, 1, 0), (-1, 1, 0), (-2, 1, 0), (-3, 1, 0), (-3, 2, 0), (4, 0, -1),
    (1, 1, -1), (2, 1, -1), (3, 1, -1), (4, 1, -1), (0, 2, -1), (1, 2, -1),
    (2, 2, -1), (0, 3, -1), (1, 3, -1), (-2, 3, -1), (-1, 3, -1), (-2, 4, -1),
]

_CHMN19_LINES = [
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, -1, 0), (2, 1, 0),
    (2, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1), (1, 0, 2),
    (1, 0, -2), (0, 1, 2), (0, 1, -2), (1, -1, 1), (1, -1, -1), (1, -1, 2),
    (1, -1, -2),
]


def _maclane_lines_poly():
    return product(
        [
            HomogeneousPolynomial(2, {(2, 0, 0): 1, (1, 1, 0): 1, (0, 2, 0): 1}),
            _power_difference(1, 2, 3),
            _power_difference(2, 0, 3),
        ]
    )


def _klein_decic():
    base = HomogeneousPolynomial(
        10,
        {
            (2, 2, 6): 320,
            (3, 3, 4): -160,
            (4, 4, 2): 20,
            (5, 5, 0): 6,
            (10, 0, 0): 1,
            (0, 10, 0): 1,
        },
    )
    quintics = HomogeneousPolynomial(5, {(5, 0, 0): 1, (0, 5, 0): 1})
    tail = HomogeneousPolynomial(5, {(0, 0, 5): 32, (1, 1, 3): -20, (2, 2, 1): 5})
    return base - Fraction(4) * (quintics * tail)


def _four_conics():
    return product(
        [
            HomogeneousPolynomial(2, {(1, 1, 0): 1, (0, 0, 2): -1}),
            HomogeneousPolynomial(2, {(1, 1, 0): 1, (0, 0, 2): 1}),
            HomogeneousPolynomial(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -2}),
            HomogeneousPolynomial(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 2}),
        ]
    )


def flat_extension_map():
    """(x:y:z) -> (x^2 + 2y^2 : y^2 + 3z^2 : z^2 + 5x^2)."""
    return PolynomialMap(
        HomogeneousPolynomial(2, {(2, 0, 0): 1, (0, 2, 0): 2}),
        HomogeneousPolynomial(2, {(0, 2, 0): 1, (0, 0, 2): 3}),
        HomogeneousPolynomial(2, {(0, 0, 2): 1, (2, 0, 0): 5}),
    )


def maclane_conics_table():
    """Singularity counts of the 8-conic arrangement: 16 nodes, 32 ordinary
    triple points."""
    return MultiplicityTable({2: 16, 3: 32}, singular_points=None, num_lines=None)


NAMED = (
    "maclane_lines",
    "A9",
    "klein_decic",
    "four_conics",
    "chmn19",
    "Z18",
    "Z17",
    "maclane_conics",
)


def named(name):
    """Exact transcription of a named curve or point set."""
    if name == "maclane_lines":
        return _maclane_lines_poly()
    if name == "A9":
        return variable(0) * _maclane_lines_poly()
    if name == "klein_decic":
        return _klein_decic()
    if name == "four_conics":
        return _four_conics()
    if name == "chmn19":
        return product([linear_form(*c) for c in _CHMN19_LINES])
    if name == "Z18":
        return PointSet(_Z18_COORDS)
    if name == "Z17":
        return PointSet(_Z18_COORDS).remove((-2, 1, 0))
    if name == "maclane_conics":
        return pullback(_maclane_lines_poly(), flat_extension_map())
    raise KeyError(f"unknown named object: {name!r}")


# ---------------------------------------------------------------------------
# rational interpolation conditions for duals of Fermat-type arrangements
#
# The lines of the (deleted) Fermat arrangement need roots of unity, but
# their dual points sit on the coordinate lines in Galois-stable packets, so
# the vanishing conditions they impose on a degree-j form are rational: the
# restriction of the form to each coordinate line must be divisible by an
# explicit rational univariate polynomial.

class DivisibilityConditions:
    """Point conditions given by per-coordinate-line divisibility.

    Each entry of `divisors` is (axis, coefficient list of D ascending) with
    axis in {0, 1, 2} selecting the restriction g(1,t,0), g(0,1,t), g(t,0,1)
    respectively; the packet contributes deg(D) independent conditions.
    """

    def __init__(self, divisors):
        self.divisors = [(axis, list(D)) for axis, D in divisors]
        self.count = sum(len(D) - 1 for _, D in self.divisors)

    def rows(self, degree):
        from .poly import monomial_index

        idx = monomial_index(degree)
        ncols = len(idx)
        out = []
        for axis, D in self.divisors:
            e = len(D) - 1
            # residues of t^i modulo D, as length-e coefficient vectors
            residues = []
            cur = [Fraction(0)] * e
            for i in range(degree + 1):
                if i < e:
                    vec = [Fraction(0)] * e
                    vec[i] = Fraction(1)
                else:
                    # t * previous residue, reduced by D (monic after scaling)
                    prev = residues[-1]
                    shifted = [Fraction(0)] + prev[: e - 1]
                    top = prev[e - 1]
                    if top:
                        lead = Fraction(D[e])
                        for j in range(e):
                            shifted[j] -= top * Fraction(D[j]) / lead
                    vec = shifted
                residues.append(vec)
            rows = [[Fraction(0)] * ncols for _ in range(e)]
            for exp, col in idx.items():
                i, j, k = exp
                if axis == 0 and k == 0:
                    power = j
                elif axis == 1 and i == 0:
                    power = k
                elif axis == 2 and j == 0:
                    power = i
                else:
                    continue
                res = residues[power]
                for r in range(e):
                    if res[r]:
                        rows[r][col] += res[r]
            out.extend(rows)
        return out


def _roots_product_coeffs(n):
    """Coefficients (ascending) of prod_a (t + zeta^a) = t^n - (-1)^n."""
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    coeffs[0] = -((-1) ** n)
    return coeffs


def _divide_linear(coeffs, root):
    """Divide a univariate polynomial by (t - root); must be exact."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    carry = Fraction(0)
    for i in range(n, 0, -1):
        carry = Fraction(coeffs[i]) + carry * root
        out[i - 1] = carry
    rem = Fraction(coeffs[0]) + carry * root
    if rem != 0:
        raise ValueError("division by t - root is not exact")
    return out


def fermat_dual_conditions(n, delete_second_family_base=False):
    """Interpolation conditions imposed by the duals of the deleted Fermat
    arrangement's lines (3n - 1 points; one fewer when the line y - z is
    removed as well, giving the plus-one family)."""
    full = _roots_product_coeffs(n)
    minus_one = _divide_linear(full, Fraction(-1))  # removes the t = -1 root
    divisors = [(0, minus_one)]  # x - y deleted from the first pencil
    if delete_second_family_base:
        divisors.append((1, minus_one))
    else:
        divisors.append((1, full))
    divisors.append((2, full))
    return DivisibilityConditions(divisors)
