"""Fat-point interpolation: detecting unexpected curves directly.

For a point set Z and a generic point P, the linear system of degree-d
curves through Z with multiplicity m at P has expected dimension
max(dim I(Z)_d - C(m+1,2), 0); Z has the U(2,d,m)-property when the actual
dimension is larger.  Genericity of P is realized by sampling random
rational points and certifying the minimum kernel dimension across samples.

Condition sources other than plain point sets are supported through duck
typing: any object with `rows(degree)` (returning rational condition rows)
and `count` can stand in for Z.  This is how arrangements whose dual points
are irrational but Galois-stable enter the exact computation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

from . import linalg
from .classify import UnexpectedVerdict
from .errors import DiagnosticError
from .poly import (
    HomogeneousPolynomial,
    ProjectivePoint,
    basis_size,
    from_vector,
    monomial_basis,
)

_BASE_BOUND = 10**6


class FatPointSystem:
    """Degree-d curves through Z with an m-fold point at P."""

    __slots__ = ("Z", "P", "m", "d")

    def __init__(self, Z, P, m, d):
        if m < 0:
            raise ValueError("multiplicity must be nonnegative")
        if hasattr(Z, "points") and any(P == z for z in Z.points):
            raise ValueError("the fat point must avoid Z")
        self.Z = Z
        self.P = P
        self.m = m
        self.d = d


def _condition_rows(Z, d):
    """Rational rows cutting out I(Z)_d inside S_d."""
    if hasattr(Z, "rows"):
        return Z.rows(d)
    rows = []
    for p in Z.points:
        a, b, c = p.coords
        rows.append(
            [a**i * b**j * c**k for (i, j, k) in monomial_basis(d)]
        )
    return rows


def _derivative_rows(P, m, d):
    """One row per partial of exact order m-1, evaluated at P; by the Euler
    relation these force all lower-order partials of a degree-d form too."""
    a, b, c = P.coords
    rows = []
    for (u, v, w) in monomial_basis(m - 1) if m >= 1 else ():
        row = []
        for (i, j, k) in monomial_basis(d):
            if i < u or j < v or k < w:
                row.append(Fraction(0))
                continue
            coeff = 1
            for top, down in ((i, u), (j, v), (k, w)):
                for t in range(down):
                    coeff *= top - t
            row.append(coeff * a ** (i - u) * b ** (j - v) * c ** (k - w))
        rows.append(row)
    return rows


def conditions_matrix(sys):
    """The full interpolation matrix of a FatPointSystem."""
    rows = _condition_rows(sys.Z, sys.d)
    rows += _derivative_rows(sys.P, sys.m, sys.d)
    return linalg.RationalMatrix(rows, len(rows), basis_size(sys.d))


def _point_count(Z):
    return Z.count if hasattr(Z, "rows") else len(Z.points)


def _sample_point(rng, bound, Z):
    while True:
        coords = tuple(rng.randint(-bound, bound) for _ in range(3))
        if not any(coords):
            continue
        P = ProjectivePoint(*coords)
        if hasattr(Z, "points") and any(P == z for z in Z.points):
            continue
        return P


def _kernel_dim(Z, P, m, d):
    sys = FatPointSystem(Z, P, m, d)
    M = conditions_matrix(sys)
    return M.cols - linalg.rank(M)


def system_dimension(Z, m, d, seed=0, samples=3, _return_witness=False):
    """Certified generic dimension of the fat-point linear system.

    Takes the minimum kernel dimension over at least three random points P
    and requires the minimum to occur at least twice; on failure the
    coordinate bound is doubled and fresh samples are drawn."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    rng = random.Random(seed)
    bound = _BASE_BOUND
    for _ in range(4):
        dims = []
        for _ in range(samples):
            P = _sample_point(rng, bound, Z)
            dims.append((_kernel_dim(Z, P, m, d), P))
        best = min(v for v, _ in dims)
        if sum(1 for v, _ in dims if v == best) >= 2:
            if _return_witness:
                witness = next(P for v, P in dims if v == best)
                return best, witness
            return best
        bound *= 2
    raise DiagnosticError(
        "generic dimension did not certify after repeated resampling"
    )


def has_unexpected(Z, d, m, seed=0):
    """Exact comparison of the actual and expected system dimensions."""
    point_rows = _condition_rows(Z, d)
    nd = basis_size(d)
    iz = nd - linalg.subspace_dimension(point_rows) if point_rows else nd
    expected = max(iz - comb(m + 1, 2), 0)
    actual = system_dimension(Z, m, d, seed=seed)
    return UnexpectedVerdict(
        actual > expected,
        m,
        (d, d),
        "interpolation",
        details={
            "d": d,
            "m": m,
            "actual": actual,
            "expected": expected,
            "points": _point_count(Z),
        },
    )


def unexpected_curve_equation(Z, d, m, seed=0):
    """The unique curve of the system when its dimension is one, normalized
    to integer coefficients with content 1 and positive leading sign."""
    dim, P = system_dimension(Z, m, d, seed=seed, _return_witness=True)
    if dim != 1:
        raise ValueError(f"system dimension is {dim}, not 1")
    sys = FatPointSystem(Z, P, m, d)
    M = conditions_matrix(sys)
    kernel = linalg.nullspace_basis(M)
    curve = from_vector(kernel[0], d).primitive_integer()
    _verify_curve(curve, Z, P, m)
    return curve


def _verify_curve(curve, Z, P, m):
    vec = [curve.coeff(e) for e in monomial_basis(curve.degree)]
    if hasattr(Z, "points"):
        for z in Z.points:
            if curve.evaluate(z.coords) != 0:
                raise DiagnosticError("curve misses a base point")
    else:
        for row in Z.rows(curve.degree):
            if sum(a * b for a, b in zip(row, vec)) != 0:
                raise DiagnosticError("curve violates a linear condition")
    for row in _derivative_rows(P, m, curve.degree):
        if sum(a * b for a, b in zip(row, vec)) != 0:
            raise DiagnosticError("curve is not singular enough at P")
