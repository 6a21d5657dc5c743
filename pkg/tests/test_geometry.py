import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from aptriangles import (
    NonPositiveSide,
    Sides,
    TriangleInequalityViolation,
    angles_from_sides,
    half_angle_tan,
    inradius,
    make_triangle,
    semiperimeter,
    validate_sides,
)

F = Fraction


def heron_inradius(a, b, c):
    # area / semiperimeter, kept independent of the (t-a)(t-b)(t-c)/t form
    a, b, c = float(a), float(b), float(c)
    s = (a + b + c) / 2
    return math.sqrt(s * (s - a) * (s - b) * (s - c)) / s


sides_st = st.tuples(
    *[st.fractions(min_value=F(1, 100), max_value=1000, max_denominator=100)] * 3
).filter(lambda t: sum(t) > 2 * max(t))


def test_validate_sorts():
    assert validate_sides(8, 15, 13) == Sides(F(8), F(13), F(15))
    assert tuple(validate_sides(3, 4, 5)) == (3, 4, 5)


@pytest.mark.parametrize("args,exc", [
    ((1, 1, 2), TriangleInequalityViolation),
    ((1, 2, 10), TriangleInequalityViolation),
    ((0, 1, 1), NonPositiveSide),
    ((-3, 4, 5), NonPositiveSide),
])
def test_validate_rejects(args, exc):
    with pytest.raises(exc):
        validate_sides(*args)


def test_unsorted_direct_construction_rejected():
    with pytest.raises(ValueError):
        Sides(F(5), F(4), F(3))


def test_accepts_strings_and_floats():
    assert validate_sides("1/2", 0.5, F(1, 2)) == Sides(F(1, 2), F(1, 2), F(1, 2))


@pytest.mark.parametrize("sides,tau", [((1, 1, 1), F(3, 2)), ((3, 4, 5), 6), ((8, 13, 15), 18)])
def test_semiperimeter(sides, tau):
    assert semiperimeter(validate_sides(*sides)) == tau


@pytest.mark.parametrize("sides,r", [
    ((3, 4, 5), 1.0),
    ((1, 1, 1), 1 / (2 * math.sqrt(3))),
    ((8, 13, 15), math.sqrt(10 * 5 * 3 / 18)),
])
def test_inradius(sides, r):
    s = validate_sides(*sides)
    assert inradius(s) == pytest.approx(r, rel=1e-14)
    assert inradius(s) == pytest.approx(heron_inradius(*sides), rel=1e-12)


def test_angles_known():
    assert angles_from_sides(validate_sides(1, 1, 1)) == (60.0, 60.0, 60.0)
    A, B, G = angles_from_sides(validate_sides(3, 4, 5))
    assert A == pytest.approx(math.degrees(math.asin(3 / 5)), abs=1e-12)
    assert B == pytest.approx(math.degrees(math.asin(4 / 5)), abs=1e-12)
    assert G == 90.0
    A, B, G = angles_from_sides(validate_sides(8, 13, 15))
    assert B == 60.0
    assert A == pytest.approx(32.2042275, abs=1e-7)
    assert G == pytest.approx(87.7957725, abs=1e-7)


@pytest.mark.parametrize("sides,vertex,expected", [
    ((3, 4, 5), "Gamma", 1.0),
    ((3, 4, 5), "A", 1 / 3),
    ((1, 1, 1), "B", 1 / math.sqrt(3)),
])
def test_half_angle_tan(sides, vertex, expected):
    assert half_angle_tan(validate_sides(*sides), vertex) == pytest.approx(expected, rel=1e-14)


def test_half_angle_bad_vertex():
    with pytest.raises(ValueError):
        half_angle_tan(validate_sides(3, 4, 5), "D")


def test_make_triangle():
    t = make_triangle(13, 8, 15)
    assert t.tau == 18
    assert t.B == 60.0
    assert t.inradius > 0


@given(sides_st)
def test_angles_sorted_and_sum(t):
    s = validate_sides(*t)
    A, B, G = angles_from_sides(s)
    assert 0 < A <= B <= G < 180
    assert A + B + G == pytest.approx(180, abs=1e-9)


@given(sides_st)
def test_inradius_half_angle_forms_agree(t):
    s = validate_sides(*t)
    r = inradius(s)
    tau = semiperimeter(s)
    for side, ang in zip(s, angles_from_sides(s)):
        via_angle = float(tau - side) * math.tan(math.radians(ang) / 2)
        assert via_angle == pytest.approx(r, rel=1e-10)
    for vertex, ang in zip(("A", "B", "Gamma"), angles_from_sides(s)):
        assert half_angle_tan(s, vertex) == pytest.approx(math.tan(math.radians(ang) / 2), rel=1e-10)


def _opposite(p, q, angle):
    # p^2 + q^2 - 2pq cos(angle), written as (p - q)^2 + 4pq sin^2(angle/2)
    return math.sqrt((p - q) ** 2 + 4 * p * q * math.sin(angle / 2) ** 2)


@given(sides_st)
def test_law_of_cosines_round_trip(t):
    s = validate_sides(*t)
    a, b, c = (float(x) for x in s)
    A, B, G = (math.radians(x) for x in angles_from_sides(s))
    assert _opposite(b, c, A) == pytest.approx(a, rel=1e-9)
    assert _opposite(a, c, B) == pytest.approx(b, rel=1e-9)
    assert _opposite(a, b, G) == pytest.approx(c, rel=1e-9)


@given(sides_st, st.fractions(min_value=F(1, 50), max_value=50, max_denominator=50))
def test_scaling_invariance(t, k):
    s = validate_sides(*t)
    for x, y in zip(angles_from_sides(s), angles_from_sides(s.scaled(k))):
        assert x == pytest.approx(y, abs=1e-12 * 180)
