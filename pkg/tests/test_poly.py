import json
from fractions import Fraction

import pytest

from planecurves import poly
from planecurves.poly import (
    HomogeneousPolynomial,
    PolynomialMap,
    ProjectivePoint,
    X,
    Y,
    Z,
    linear_form,
    variable,
)


def test_monomial_basis_order():
    # graded lex with x > y > z, descending
    assert poly.monomial_basis(2) == (
        (2, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (0, 2, 0),
        (0, 1, 1),
        (0, 0, 2),
    )


def test_basis_size():
    for d in range(7):
        assert poly.basis_size(d) == len(poly.monomial_basis(d))


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        HomogeneousPolynomial(2, {(1, 0, 0): 1})


def test_addition_and_zero():
    f = linear_form(1, 2, 3)
    assert (f - f).is_zero()
    assert not poly.zero_poly(4)


def test_product_degree():
    f = linear_form(1, 0, -1) * linear_form(0, 1, 1)
    assert f.degree == 2
    assert f.coeff((1, 1, 0)) == 1


def test_partial_derivative():
    f = HomogeneousPolynomial(3, {(2, 1, 0): 5})
    assert f.partial(X).coeff((1, 1, 0)) == 10
    assert f.partial(Y).coeff((2, 0, 0)) == 5
    assert f.partial(Z).is_zero()


def test_euler_relation():
    # x f_x + y f_y + z f_z = d f
    f = HomogeneousPolynomial(4, {(2, 1, 1): 3, (0, 4, 0): -2, (1, 0, 3): 7})
    total = sum(
        (variable(v) * f.partial(v) for v in (X, Y, Z)),
        poly.zero_poly(4),
    )
    assert total == f * 4


def test_evaluate():
    f = HomogeneousPolynomial(2, {(1, 0, 1): 1, (0, 2, 0): -1})
    assert f.evaluate((1, 1, 1)) == 0
    assert f.evaluate((2, 1, 3)) == 5


def test_primitive_integer_normalization():
    f = HomogeneousPolynomial(1, {(1, 0, 0): Fraction(-2, 3), (0, 1, 0): Fraction(-4, 3)})
    g = f.primitive_integer()
    assert g.coeff((1, 0, 0)) == 1
    assert g.coeff((0, 1, 0)) == 2


def test_pullback_degree():
    f = HomogeneousPolynomial(2, {(2, 0, 0): 1, (0, 1, 1): -1})
    phi = PolynomialMap(
        variable(X) * variable(X),
        variable(Y) * variable(Y),
        variable(X) * variable(Z),
    )
    g = poly.pullback(f, phi)
    assert g.degree == 4
    assert g.coeff((4, 0, 0)) == 1


def test_pullback_composition_with_evaluation():
    f = HomogeneousPolynomial(2, {(1, 1, 0): 1, (0, 0, 2): 1})
    phi = PolynomialMap(
        linear_form(1, 1, 0) * linear_form(1, -1, 0),
        variable(Y) * variable(Z),
        variable(X) * variable(X),
    )
    g = poly.pullback(f, phi)
    pt = (Fraction(2), Fraction(3), Fraction(-1))
    images = tuple(c.evaluate(pt) for c in phi.components)
    assert g.evaluate(pt) == f.evaluate(images)


def test_coefficient_vector_roundtrip():
    f = HomogeneousPolynomial(3, {(1, 1, 1): Fraction(5, 7), (3, 0, 0): -2})
    vec = poly.coefficient_vector(f)
    assert poly.from_vector(vec, 3) == f


def test_divide_exact():
    a = linear_form(1, 2, 3)
    b = linear_form(-1, 0, 5)
    c = linear_form(2, 2, 1)
    f = a * b * c
    assert poly.equal_up_to_scalar(poly.divide_exact(f, b), a * c)
    with pytest.raises(ValueError):
        poly.divide_exact(f, linear_form(1, 1, 1))


def test_equal_up_to_scalar():
    f = linear_form(1, 2, 3)
    assert poly.equal_up_to_scalar(f, f * Fraction(-7, 3))
    assert not poly.equal_up_to_scalar(f, linear_form(1, 2, 4))


def test_projective_point_canonical():
    p = ProjectivePoint(2, 4, 6)
    q = ProjectivePoint(1, 2, 3)
    assert p == q
    assert hash(p) == hash(q)
    with pytest.raises(ValueError):
        ProjectivePoint(0, 0, 0)


def test_reduced_check_accepts_squarefree():
    f = variable(X) * variable(Y) * variable(Z)
    assert poly.is_reduced_probabilistic(f)


def test_reduced_check_rejects_square():
    f = variable(X) * variable(X) * variable(Y)
    assert not poly.is_reduced_probabilistic(f)


def test_reduced_check_rejects_square_of_dense_form():
    g = linear_form(1, -2, 3) * linear_form(4, 5, -6)
    assert not poly.is_reduced_probabilistic(g * g)


def test_json_roundtrip():
    f = HomogeneousPolynomial(
        4, {(4, 0, 0): Fraction(1, 3), (0, 2, 2): -5, (1, 1, 2): Fraction(22, 7)}
    )
    data = json.loads(poly.poly_dumps(f))
    assert data["degree"] == 4
    assert all(set(t) == {"num", "den", "exp"} for t in data["terms"])
    assert poly.poly_loads(poly.poly_dumps(f)) == f
