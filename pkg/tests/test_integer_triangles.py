import math
from fractions import Fraction
from math import gcd

import pytest

from aptriangles import (
    InvariantError,
    IntegerTriangle,
    NonPositive,
    NotCoprime,
    ParityViolation,
    RatioConditionViolation,
    TriangleParams,
    brute_force_triangles,
    enumerate_triangles,
    gcd_class_check,
    primitive_reduce,
    triangle_from_params,
    validate_params,
)
from aptriangles.integer_triangles import describe_sides

F = Fraction
SQ3 = math.sqrt(3)


@pytest.mark.parametrize("args,exc", [
    ((1, 2, 1), ParityViolation),
    ((4, 1, 2), RatioConditionViolation),
    ((4, 2, 4), NotCoprime),
    ((0, 1, 1), NonPositive),
    ((2, 1, 4), ParityViolation),
])
def test_validate_params_rejects(args, exc):
    with pytest.raises(exc):
        validate_params(*args)


def test_validate_params_types():
    with pytest.raises(TypeError):
        validate_params(4.0, 2, 1)
    assert validate_params(4, 2, 1) == TriangleParams(4, 2, 1)


@pytest.mark.parametrize("params,sides,rho,sin_coef", [
    ((4, 2, 1), (8, 13, 15), F(36, 13), F(4, 13)),
    ((1, 1, 1), (1, 1, 1), F(3), F(1, 2)),
    ((1, 5, 1), (5, 19, 21), F(45, 19), F(5, 38)),
    ((1, 1, 3), (3, 3, 3), F(3), F(1, 2)),
    ((4, 4, 3), (48, 57, 63), F(56, 19), F(8, 19)),
])
def test_triangle_from_params(params, sides, rho, sin_coef):
    t = triangle_from_params(TriangleParams(*params))
    assert t.sides == sides
    assert t.rho == rho
    assert t.sin_a_coef == sin_coef


def test_equilateral_angles_exact():
    t = triangle_from_params(TriangleParams(1, 1, 1))
    assert (t.A_deg, t.phi_deg, t.Gamma_deg) == (60.0, 0.0, 60.0)


def test_describe_rejects_non_60():
    with pytest.raises(InvariantError):
        describe_sides(3, 4, 5, TriangleParams(1, 1, 1))


def test_brute_force_small():
    assert brute_force_triangles(1) == [(1, 1, 1)]
    assert brute_force_triangles(2) == [(1, 1, 1), (2, 2, 2)]
    expected = sorted([(k, k, k) for k in range(1, 9)] + [(3, 7, 8), (5, 7, 8)])
    assert brute_force_triangles(8) == expected
    found = brute_force_triangles(15)
    assert (7, 13, 15) in found and (8, 13, 15) in found


def test_enumerate_small():
    assert [t.sides for t in enumerate_triangles(1)] == [(1, 1, 1)]
    assert [t.sides for t in enumerate_triangles(8)] == brute_force_triangles(8)
    sides = {t.sides for t in enumerate_triangles(21)}
    assert {(5, 19, 21), (16, 19, 21)} <= sides


def test_enumerate_witness_is_smallest():
    by_sides = {t.sides: t.params for t in enumerate_triangles(30)}
    # (3,3,3) arises from (1,1,3) and (3,1,1); lexicographic min is d=1
    assert by_sides[(3, 3, 3)] == TriangleParams(1, 1, 3)
    assert by_sides[(6, 6, 6)] == TriangleParams(2, 1, 3)


@pytest.mark.parametrize("max_gamma", [50, 200])
def test_enumeration_matches_oracle(max_gamma):
    assert [t.sides for t in enumerate_triangles(max_gamma)] == brute_force_triangles(max_gamma)


@pytest.fixture(scope="module")
def generated():
    return enumerate_triangles(400)


def test_invariants_on_family(generated):
    for t in generated:
        a, b, c = t.sides
        assert b * b == a * a + c * c - a * c
        assert 0 < a <= b <= c and a + b > c
        assert 2 < t.rho <= 3
        assert t.rho == F(a + b + c, b)
        p = t.params
        assert t.sin_a_coef == F(2 * p.kappa * p.lam, 3 * p.kappa**2 + p.lam**2)
        assert math.sin(math.radians(t.A_deg)) == pytest.approx(t.sin_a, abs=1e-12)
        assert t.A_deg <= 60
        assert (t.A_deg == 60) == (a == c)
        assert t.A_deg + 60 + t.Gamma_deg == pytest.approx(180, abs=1e-9)
        assert t.Gamma_deg == pytest.approx(60 + t.phi_deg, abs=1e-9)
        assert 0 <= t.phi_deg < 60


@pytest.mark.parametrize("t,expected", [
    ((48, 57, 63), (16, 19, 21)),
    ((8, 13, 15), (8, 13, 15)),
    ((3, 3, 3), (1, 1, 1)),
])
def test_primitive_reduce(t, expected):
    assert primitive_reduce(t) == expected


def test_primitive_reduce_triangle():
    t = triangle_from_params(TriangleParams(4, 4, 3))
    a, b, c = primitive_reduce(t)
    assert b * b == a * a + c * c - a * c


@pytest.mark.parametrize("k,l,expected", [(4, 3, 3), (2, 1, 1), (1, 3, 3), (5, 1, 1)])
def test_gcd_class_check(k, l, expected):
    assert gcd_class_check(k, l) == expected


def test_gcd_class_check_rejects():
    with pytest.raises(RatioConditionViolation):
        gcd_class_check(1, 2)
    with pytest.raises(NotCoprime):
        gcd_class_check(3, 3)


def test_third_triangle_inequality_exhaustive():
    # alpha + gamma > beta, whose proof is left out in the source
    for k in range(1, 60):
        for l in range(1, 180):
            if gcd(k, l) == 1 and (l <= k or l >= 3 * k):
                i = 1 if k % 2 and l % 2 else 4
                t = triangle_from_params(TriangleParams(i, k, l))
                assert t.alpha + t.gamma > t.beta
                assert t.beta + t.gamma > t.alpha
