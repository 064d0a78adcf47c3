"""Exact arithmetic on homogeneous polynomials in x, y, z.

Everything is over Q (fractions.Fraction).  Monomials are exponent triples
(i, j, k); polynomials store only nonzero coefficients.  The global monomial
order is graded lexicographic with x > y > z: within a fixed degree,
monomials are listed by decreasing x-exponent, then decreasing y-exponent.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

Exponent = tuple[int, int, int]

X, Y, Z = 0, 1, 2


@lru_cache(maxsize=None)
def monomial_basis(degree):
    """All exponent triples of total degree `degree`, graded-lex descending."""
    if degree < 0:
        return ()
    return tuple(
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(degree):
    """Map exponent triple -> position in monomial_basis(degree)."""
    return {m: i for i, m in enumerate(monomial_basis(degree))}


def basis_size(degree):
    """dim of the space of degree-d forms in three variables: C(d+2, 2)."""
    return comb(degree + 2, 2) if degree >= 0 else 0


class HomogeneousPolynomial:
    """A homogeneous form in Q[x,y,z] of a fixed degree.

    The zero polynomial is representable in every degree (empty term map with
    an explicit degree tag).  Instances are immutable and hashable.
    """

    __slots__ = ("degree", "_terms", "_hash")

    def __init__(self, degree, terms):
        cleaned = {}
        for exp, coeff in terms.items():
            c = Fraction(coeff)
            if c == 0:
                continue
            if sum(exp) != degree or min(exp) < 0:
                raise ValueError(f"monomial {exp} does not have degree {degree}")
            cleaned[tuple(exp)] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_terms", cleaned)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("HomogeneousPolynomial is immutable")

    @property
    def terms(self):
        return dict(self._terms)

    def coeff(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.degree, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return HomogeneousPolynomial(self.degree, terms)

    def __neg__(self):
        return HomogeneousPolynomial(
            self.degree, {e: -c for e, c in self._terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogeneousPolynomial):
            prod = {}
            for (a, b, c), u in self._terms.items():
                for (d, e, f), v in other._terms.items():
                    key = (a + d, b + e, c + f)
                    prod[key] = prod.get(key, Fraction(0)) + u * v
            return HomogeneousPolynomial(self.degree + other.degree, prod)
        scalar = Fraction(other)
        return HomogeneousPolynomial(
            self.degree, {e: c * scalar for e, c in self._terms.items()}
        )

    __rmul__ = __mul__

    def partial(self, var):
        """Partial derivative with respect to variable index 0, 1, or 2."""
        terms = {}
        for exp, c in self._terms.items():
            if exp[var] > 0:
                e2 = list(exp)
                e2[var] -= 1
                terms[tuple(e2)] = c * exp[var]
        return HomogeneousPolynomial(max(self.degree - 1, 0), terms)

    def evaluate(self, point):
        """Exact value at a coordinate triple of rationals."""
        a, b, c = (Fraction(v) for v in point)
        total = Fraction(0)
        for (i, j, k), coeff in self._terms.items():
            total += coeff * a**i * b**j * c**k
        return total

    def leading_term(self):
        """(exponent, coefficient) of the graded-lex leading monomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms)
        return exp, self._terms[exp]

    def primitive_integer(self):
        """Scalar-normalized copy: integer coefficients, content 1, first
        nonzero coefficient (in graded-lex order) positive."""
        if not self._terms:
            return self
        denom_lcm = 1
        for c in self._terms.values():
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        ints = {e: c * denom_lcm for e, c in self._terms.items()}
        content = 0
        for c in ints.values():
            content = gcd(content, int(c))
        lead = max(ints)
        sign = 1 if ints[lead] > 0 else -1
        scale = Fraction(sign, content)
        return HomogeneousPolynomial(
            self.degree, {e: c * scale for e, c in ints.items()}
        )

    def __repr__(self):
        if not self._terms:
            return f"HomogeneousPolynomial(degree={self.degree}, 0)"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            c = self._terms[exp]
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip("xyz", exp)
                if e > 0
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def zero_poly(degree):
    return HomogeneousPolynomial(degree, {})


def linear_form(a, b, c):
    return HomogeneousPolynomial(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})


def variable(var):
    exp = [0, 0, 0]
    exp[var] = 1
    return HomogeneousPolynomial(1, {tuple(exp): 1})


def product(polys):
    result = HomogeneousPolynomial(0, {(0, 0, 0): 1})
    for p in polys:
        result = result * p
    return result


def partials(f):
    """The three partial derivatives of a nonzero form."""
    if f.is_zero():
        raise ValueError("partials of the zero polynomial are undefined")
    return f.partial(X), f.partial(Y), f.partial(Z)


class ProjectivePoint:
    """A point of P^2 with rational coordinates, canonicalized so that the
    first nonzero coordinate equals 1."""

    __slots__ = ("coords",)

    def __init__(self, a, b, c):
        coords = (Fraction(a), Fraction(b), Fraction(c))
        if all(v == 0 for v in coords):
            raise ValueError("(0:0:0) is not a projective point")
        lead = next(v for v in coords if v != 0)
        object.__setattr__(self, "coords", tuple(v / lead for v in coords))

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "({}:{}:{})".format(*self.coords)


class PolynomialMap:
    """A triple of equal-degree forms, defining (x:y:z) -> (g1:g2:g3)."""

    __slots__ = ("components",)

    def __init__(self, g1, g2, g3):
        if not (g1.degree == g2.degree == g3.degree):
            raise ValueError("map components must share one degree")
        if g1.is_zero() and g2.is_zero() and g3.is_zero():
            raise ValueError("map components must not all vanish")
        object.__setattr__(self, "components", (g1, g2, g3))

    def __setattr__(self, name, value):
        raise AttributeError("PolynomialMap is immutable")

    @property
    def degree(self):
        return self.components[0].degree


def pullback(f, phi):
    """f(g1, g2, g3): homogeneous of degree deg(f) * deg(phi)."""
    g1, g2, g3 = phi.components
    out_degree = f.degree * phi.degree
    # cache powers of the components
    pow1 = {0: HomogeneousPolynomial(0, {(0, 0, 0): 1})}
    pow2 = {0: pow1[0]}
    pow3 = {0: pow1[0]}
    result = zero_poly(out_degree)
    for (i, j, k), c in f._terms.items():
        for cache, g, e in ((pow1, g1, i), (pow2, g2, j), (pow3, g3, k)):
            while max(cache) < e:
                n = max(cache)
                cache[n + 1] = cache[n] * g
        term = pow1[i] * pow2[j] * pow3[k] * c
        if term.degree != out_degree:
            # happens only when a component power vanished
            term = zero_poly(out_degree)
        result = result + term
    return result


def coefficient_vector(f, degree=None):
    """Coordinates of f in the canonical graded-lex basis of its degree."""
    d = f.degree if degree is None else degree
    if f.degree != d:
        raise ValueError(f"expected degree {d}, got {f.degree}")
    vec = [Fraction(0)] * basis_size(d)
    idx = monomial_index(d)
    for exp, c in f._terms.items():
        vec[idx[exp]] = c
    return vec


def from_vector(vec, degree):
    """Inverse of coefficient_vector."""
    basis = monomial_basis(degree)
    if len(vec) != len(basis):
        raise ValueError("vector length does not match the degree basis")
    return HomogeneousPolynomial(
        degree, {m: v for m, v in zip(basis, vec) if v != 0}
    )


def divide_exact(f, g):
    """Exact quotient f / g; raises if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return zero_poly(f.degree - g.degree)
    q_terms = {}
    rem = f
    g_exp, g_coeff = g.leading_term()
    while rem:
        r_exp, r_coeff = rem.leading_term()
        q_exp = tuple(a - b for a, b in zip(r_exp, g_exp))
        if min(q_exp) < 0:
            raise ValueError("polynomial division is not exact")
        q_coeff = r_coeff / g_coeff
        q_terms[q_exp] = q_terms.get(q_exp, Fraction(0)) + q_coeff
        mono = HomogeneousPolynomial(sum(q_exp), {q_exp: q_coeff})
        rem = rem - mono * g
    return HomogeneousPolynomial(f.degree - g.degree, q_terms)


def equal_up_to_scalar(f, g):
    """True when f = c * g for a nonzero rational c."""
    if f.degree != g.degree:
        return False
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    if set(f._terms) != set(g._terms):
        return False
    exp = next(iter(f._terms))
    ratio = f._terms[exp] / g._terms[exp]
    return all(c == ratio * g._terms[e] for e, c in f._terms.items())


def _univariate_squarefree(coeffs):
    """Squarefree test for a univariate rational polynomial given as a
    coefficient list (ascending powers): gcd(p, p') is constant."""
    def strip(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def poly_mod(a, b):
        a = list(a)
        while len(a) >= len(b) > 0:
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] -= f * c
            strip(a)
        return a

    p = strip(list(coeffs))
    if len(p) <= 1:
        return True
    dp = strip([c * i for i, c in enumerate(p)][1:])
    a, b = p, dp
    while b:
        a, b = b, poly_mod(a, b)
    return len(a) == 1


def is_reduced_probabilistic(f, trials=8, seed=0):
    """Squarefreeness check by restriction to random rational lines.

    A False result is definitive (f has a repeated factor); True is correct
    with overwhelming probability over the random lines.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial is not a curve")
    rng = random.Random(seed)
    for _ in range(trials):
        while True:
            p = [rng.randint(-50, 50) for _ in range(3)]
            q = [rng.randint(-50, 50) for _ in range(3)]
            # the line through p and q must be honest (p, q independent)
            cross = (
                p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0],
            )
            if any(cross):
                break
        # restrict f to the parametrized line s*p + t*q and dehomogenize
        coeffs = [Fraction(0)] * (f.degree + 1)
        for (i, j, k), c in f.terms.items():
            # expand (p0 s + q0 t)^i ... collecting by power of t
            conv = {0: Fraction(1)}
            for var, e in ((0, i), (1, j), (2, k)):
                pv, qv = Fraction(p[var]), Fraction(q[var])
                binom = {
                    t: comb(e, t) * pv ** (e - t) * qv**t for t in range(e + 1)
                }
                conv = _convolve(conv, binom)
            for t, v in conv.items():
                coeffs[t] += c * v
        if all(c == 0 for c in coeffs):
            continue  # degenerate line inside the curve; resample
        if not _univariate_squarefree(coeffs):
            return False
    return True


def _convolve(a, b):
    out = {}
    for i, u in a.items():
        for j, v in b.items():
            out[i + j] = out.get(i + j, Fraction(0)) + u * v
    return out


# ---------------------------------------------------------------------------
# JSON interchange (shared with the CLI)

def poly_to_json(f):
    return {
        "degree": f.degree,
        "terms": [
            {
                "num": str(c.numerator),
                "den": str(c.denominator),
                "exp": list(exp),
            }
            for exp, c in sorted(f.terms.items(), reverse=True)
        ],
    }


def poly_from_json(data):
    terms = {}
    for t in data["terms"]:
        exp = tuple(t["exp"])
        terms[exp] = Fraction(int(t["num"]), int(t["den"]))
    return HomogeneousPolynomial(data["degree"], terms)


def poly_dumps(f):
    return json.dumps(poly_to_json(f))


def poly_loads(s):
    return poly_from_json(json.loads(s))
