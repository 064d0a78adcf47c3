"""Taxonomy of reduced plane curves by their Jacobian syzygies.

A curve whose syzygy module has m minimal generators of degrees
d_1 <= ... <= d_m is free when m = 2, and for m = 3 it is nearly free when
d_1 + d_2 = d with d_2 = d_3, plus-one generated of level d_3 when
d_1 + d_2 = d with d_3 > d_2, and a general 3-syzygy curve otherwise.  The
module also evaluates the combinatorial criterion for unexpected curves
attached to a planar point set through its dual line arrangement.
"""

from __future__ import annotations

import json
from math import isqrt

from . import arrangements, saturation, syzygies
from .errors import DiagnosticError
from .poly import linear_form, product


class ClassificationRecord:
    __slots__ = (
        "d",
        "curve_class",
        "exponents",
        "almost_free",
        "nu",
        "tau",
        "splitting",
        "level",
    )

    def __init__(
        self,
        d,
        curve_class,
        exponents,
        almost_free,
        nu,
        tau,
        splitting=None,
        level=None,
    ):
        self.d = d
        self.curve_class = curve_class
        self.exponents = tuple(exponents)
        self.almost_free = almost_free
        self.nu = nu
        self.tau = tau
        self.splitting = splitting
        self.level = level

    def to_json(self):
        return {
            "d": self.d,
            "class": self.curve_class,
            "exponents": list(self.exponents),
            "almost_free": self.almost_free,
            "nu": self.nu,
            "tau": self.tau,
            "splitting": list(self.splitting) if self.splitting else None,
            "level": self.level,
        }

    def dumps(self):
        return json.dumps(self.to_json())

    def __repr__(self):
        return (
            f"ClassificationRecord(d={self.d}, class={self.curve_class}, "
            f"exponents={self.exponents}, nu={self.nu}, tau={self.tau})"
        )


class UnexpectedVerdict:
    """Outcome of an unexpected-curve test, by either route."""

    __slots__ = (
        "admits",
        "multiplicity",
        "degree_range",
        "method",
        "irreducible_minimal",
        "details",
    )

    def __init__(
        self,
        admits,
        multiplicity,
        degree_range,
        method,
        irreducible_minimal=None,
        details=None,
    ):
        self.admits = admits
        self.multiplicity = multiplicity
        self.degree_range = degree_range
        self.method = method
        self.irreducible_minimal = irreducible_minimal
        self.details = dict(details or {})

    def to_json(self):
        return {
            "admits": self.admits,
            "multiplicity": self.multiplicity,
            "degree_range": list(self.degree_range)
            if self.degree_range
            else None,
            "method": self.method,
            "irreducible_minimal": self.irreducible_minimal,
            **self.details,
        }

    def __repr__(self):
        return (
            f"UnexpectedVerdict(admits={self.admits}, "
            f"method={self.method}, degrees={self.degree_range})"
        )


def classify(f, skip_reduced=False):
    """Combine the syzygy profile and the defect profile of f into a record."""
    profile = syzygies.minimal_generator_degrees(f, skip_reduced=skip_reduced)
    defect = saturation.n_profile(f, skip_reduced=True)
    d = f.degree
    degs = profile.generator_degrees
    m = len(degs)
    level = None
    if m == 2:
        curve_class = "free"
        if degs[0] + degs[1] != d - 1:
            raise DiagnosticError(
                f"free curve with exponents {degs} summing to "
                f"{degs[0] + degs[1]} != d - 1"
            )
    elif m == 3:
        if degs[0] + degs[1] == d:
            if degs[1] == degs[2]:
                curve_class = "nearly_free"
            else:
                curve_class = "plus_one_generated"
                level = degs[2]
        else:
            curve_class = "three_syzygy"
    else:
        curve_class = f"m_syzygy({m})"
    if (defect.nu == 0) != (curve_class == "free"):
        raise DiagnosticError("nu = 0 and freeness disagree")
    if (defect.nu == 1) != (curve_class == "nearly_free"):
        raise DiagnosticError("nu = 1 and near-freeness disagree")
    total = sum(defect.n_values.values())
    almost_free = total == (1 if d % 2 == 0 else 2)
    try:
        splitting = splitting_type(d, defect.tau, defect.nu)
    except ValueError:
        # meaningful only for line arrangements; absent otherwise
        splitting = None
    return ClassificationRecord(
        d,
        curve_class,
        degs,
        almost_free,
        defect.nu,
        defect.tau,
        splitting=splitting,
        level=level,
    )


def splitting_type(d, tau, nu):
    """The pair (a, b) with a + b = d - 1 and a b = (d-1)^2 - tau - nu.

    Raises ValueError when no integer pair exists (inputs not from a line
    arrangement, or inconsistent)."""
    s = d - 1
    prod = s * s - tau - nu
    disc = s * s - 4 * prod
    if disc < 0:
        raise ValueError("negative discriminant: no real splitting")
    root = isqrt(disc)
    if root * root != disc or (s - root) % 2:
        raise ValueError("splitting type is not integral")
    a = (s - root) // 2
    return (a, s - a)


def _dual_product(Z):
    return product(
        [linear_form(*p.coords) for p in Z.points]
    ).primitive_integer()


def unexpected_by_criterion(Z):
    """Combinatorial test for unexpected curves attached to the point set Z.

    Uses a_Z = mdr of the dual arrangement's defining polynomial and the
    maximal multiplicity of the dual arrangement: Z admits an unexpected
    curve exactly when m(A_Z) <= a_Z + 1 and 2 (a_Z + 1) < |Z|, in degrees
    a_Z < j <= |Z| - a_Z - 2."""
    if len(Z) == 0:
        raise ValueError("empty point set")
    f = _dual_product(Z)
    a = syzygies.mdr(f)
    arrangement = arrangements.LineArrangement(
        [linear_form(*p.coords) for p in Z.points]
    )
    table = arrangements.line_combinatorics(arrangement)
    mult = table.max_multiplicity()
    admits = mult <= a + 1 and 2 * (a + 1) < len(Z)
    j_min, j_max = a + 1, len(Z) - a - 2
    return UnexpectedVerdict(
        admits,
        a if admits else None,
        (j_min, j_max) if admits and j_min <= j_max else None,
        "criterion",
        details={"a_Z": a, "max_multiplicity": mult, "points": len(Z)},
    )


def nearly_free_unexpected(d1, d2):
    """For a nearly free dual arrangement with exponents (d1, d2): does it
    admit an unexpected curve (of degree d1 + 1)?"""
    return d2 - d1 >= 3


def cor10_profile(d, d1, d2, d3):
    """Predicted defect profile of a plus-one generated curve of level d3.

    With k_j = 2d - d_j - 3 and T = 3d - 6: the profile vanishes below k_3,
    ramps as j - k_3 + 1 on [k_3, k_2], plateaus at d_3 - d_2 + 1 up to T/2,
    and is mirrored onto the upper half by duality."""
    if d2 == d3:
        raise ValueError("nearly free curve: the profile formula needs d2 < d3")
    if d1 + d2 != d:
        raise ValueError("not plus-one generated: d1 + d2 != d")
    k3 = 2 * d - d3 - 3
    k2 = 2 * d - d2 - 3
    T = 3 * d - 6
    nu = d3 - d2 + 1
    n = {}
    for j in range(T + 1):
        jj = min(j, T - j)
        if jj < k3:
            n[j] = 0
        elif jj <= k2:
            n[j] = jj - k3 + 1
        else:
            n[j] = nu
    return n


def minimal_unexpected_irreducible(Z):
    """Whether the minimal-degree unexpected curve of Z is irreducible:
    true exactly when every single-point deletion preserves a_Z."""
    f = _dual_product(Z)
    a = syzygies.mdr(f)
    for p in Z.points:
        g = product(
            [linear_form(*q.coords) for q in Z.points if q != p]
        ).primitive_integer()
        ai = syzygies.mdr(g)
        if ai > a:
            raise DiagnosticError(
                f"deletion raised the syzygy degree: {ai} > {a}"
            )
        if ai != a:
            return False
    return True
