import json

import pytest

from planecurves import arrangements as ar
from planecurves.classify import (
    classify,
    cor10_profile,
    nearly_free_unexpected,
    splitting_type,
    unexpected_by_criterion,
)
from planecurves.poly import HomogeneousPolynomial, variable

TRIANGLE = variable(0) * variable(1) * variable(2)


def test_classify_triangle_free():
    rec = classify(TRIANGLE)
    assert rec.curve_class == "free"
    assert rec.exponents == (1, 1)
    assert rec.nu == 0
    assert rec.tau == 3
    assert rec.splitting == (1, 1)
    assert rec.level is None


def test_classify_smooth_conic():
    # the Koszul syzygies already generate; formally this is the nearly free
    # shape with exponents (1, 1, 1)
    f = HomogeneousPolynomial(2, {(1, 0, 1): 1, (0, 2, 0): -1})
    rec = classify(f)
    assert rec.curve_class == "nearly_free"
    assert rec.nu == 1
    assert rec.tau == 0


def test_classify_nearly_free_octic():
    rec = classify(ar.fermat_deleted(3))
    assert rec.curve_class == "nearly_free"
    assert rec.exponents == (4, 4, 4)
    assert rec.nu == 1
    assert rec.tau == 36


def test_classify_conic_family():
    for k in (2, 3):
        rec = classify(ar.conic_family(k))
        assert rec.curve_class == "nearly_free"
        assert rec.exponents == (1, 2 * k - 1, 2 * k - 1)
        assert rec.tau == 2 * (2 * k - 1) * (k - 1)
        assert rec.nu == 1


def test_classify_almost_free_flags():
    # odd degree: total defect 2; even degree: total defect 1
    assert classify(ar.named("A9")).almost_free
    assert classify(ar.named("four_conics")).almost_free
    assert not classify(ar.conic_family(2)).almost_free


def test_classify_json():
    rec = classify(TRIANGLE)
    data = json.loads(rec.dumps())
    assert data["class"] == "free"
    assert data["exponents"] == [1, 1]
    assert data["splitting"] == [1, 1]


def test_splitting_type_known_values():
    assert splitting_type(18, 217, 2) == (7, 10)
    assert splitting_type(17, 189, 4) == (7, 9)
    assert splitting_type(3, 3, 0) == (1, 1)


def test_splitting_type_sum_and_product():
    for d, tau, nu in ((18, 217, 2), (17, 189, 4)):
        a, b = splitting_type(d, tau, nu)
        assert a + b == d - 1
        assert a * b == (d - 1) ** 2 - tau - nu


def test_splitting_type_rejects_non_integral():
    with pytest.raises(ValueError):
        splitting_type(4, 1, 0)


def test_unexpected_criterion_z18():
    verdict = unexpected_by_criterion(ar.named("Z18"))
    assert verdict.admits
    assert verdict.method == "criterion"
    assert verdict.details["a_Z"] == 7
    assert verdict.details["max_multiplicity"] == 5
    assert verdict.degree_range == (8, 9)


def test_unexpected_criterion_z17():
    verdict = unexpected_by_criterion(ar.named("Z17"))
    assert verdict.admits
    assert verdict.details["a_Z"] == 7
    assert verdict.degree_range == (8, 8)


def test_unexpected_criterion_small_set_rejects():
    Z = ar.PointSet([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    verdict = unexpected_by_criterion(Z)
    assert not verdict.admits
    assert verdict.degree_range is None
    assert verdict.multiplicity is None


def test_unexpected_criterion_empty_set():
    with pytest.raises(ValueError):
        unexpected_by_criterion(ar.PointSet([]))


def test_nearly_free_unexpected_threshold():
    assert not nearly_free_unexpected(4, 4)
    assert not nearly_free_unexpected(4, 6)
    assert nearly_free_unexpected(8, 11)
    assert nearly_free_unexpected(7, 10)


def test_cor10_profile_z18_values():
    n = cor10_profile(18, 7, 11, 12)
    T = 48
    assert n[20] == 0
    assert n[21] == 1
    assert n[22] == 2
    assert all(n[j] == 2 for j in range(22, 27))
    assert n[27] == 1
    assert n[28] == 0
    # duality of the prediction itself
    assert all(n[j] == n[T - j] for j in n)


def test_cor10_profile_rejects_nearly_free():
    with pytest.raises(ValueError):
        cor10_profile(8, 4, 4, 4)
    with pytest.raises(ValueError):
        cor10_profile(8, 3, 4, 6)


def test_verdict_json():
    verdict = unexpected_by_criterion(ar.named("Z17"))
    data = verdict.to_json()
    assert data["admits"] is True
    assert data["degree_range"] == [8, 8]
    assert data["a_Z"] == 7
