"""Exact triangle primitives.

Side lengths are kept as :class:`fractions.Fraction` so that every integer
and rational result is bit-exact. Angles and the inradius are irrational in
general and are returned as floats, in degrees for angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import NonPositiveSide, TriangleInequalityViolation

Number = Union[int, float, Fraction, str]

_VERTICES = {"A": 0, "B": 1, "Gamma": 2, "Γ": 2, "C": 2}


def as_fraction(value: Number) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Floats are converted to the exact binary value they hold; strings go
    through the Fraction parser (``"36/13"``, ``"2.5"``).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a side length")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise NonPositiveSide(f"non-finite value {value!r}")
        return Fraction(value)
    return Fraction(value)


@dataclass(frozen=True)
class Sides:
    """Sorted exact side lengths ``a <= b <= c``.

    Build through :func:`validate_sides`; the constructor re-checks the
    invariants but does not sort.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        if self.a <= 0:
            raise NonPositiveSide(f"side {self.a} is not positive")
        if not (self.a <= self.b <= self.c):
            raise ValueError("Sides must be sorted; use validate_sides()")
        if self.a + self.b <= self.c:
            raise TriangleInequalityViolation(
                f"{self.a} + {self.b} <= {self.c}: not a proper triangle"
            )

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def scaled(self, k: Number) -> "Sides":
        k = as_fraction(k)
        return Sides(self.a * k, self.b * k, self.c * k)


def validate_sides(a: Number, b: Number, c: Number) -> Sides:
    """Sort three lengths and check they form a non-degenerate triangle.

    >>> validate_sides(8, 15, 13)
    Sides(a=Fraction(8, 1), b=Fraction(13, 1), c=Fraction(15, 1))
    """
    x, y, z = sorted(as_fraction(v) for v in (a, b, c))
    if x <= 0:
        raise NonPositiveSide(f"side {x} is not positive")
    if x + y <= z:
        raise TriangleInequalityViolation(f"{x} + {y} <= {z}: degenerate or impossible")
    return Sides(x, y, z)


def semiperimeter(s: Sides) -> Fraction:
    return (s.a + s.b + s.c) / 2


def _fsqrt(q: Fraction) -> float:
    # Fraction -> float is correctly rounded, so this is a single rounding
    # followed by a correctly rounded sqrt.
    return math.sqrt(q)


def inradius(s: Sides) -> float:
    """Inscribed-circle radius, sqrt((t-a)(t-b)(t-c)/t) with t the semiperimeter."""
    t = semiperimeter(s)
    return _fsqrt((t - s.a) * (t - s.b) * (t - s.c) / t)


def _heron16(s: Sides) -> Fraction:
    # 16 * area^2, exact.
    a, b, c = s
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)


def _angle_opposite(opp: Fraction, p: Fraction, q: Fraction, k16: Fraction) -> float:
    # tan(angle) = 4*area / (p^2 + q^2 - opp^2); both parts are exact before
    # rounding, so atan2 stays accurate for very thin triangles too.
    adj = p * p + q * q - opp * opp
    if adj > 0 and k16 == 3 * adj * adj:
        return 60.0
    return math.degrees(math.atan2(_fsqrt(k16), float(adj)))


def angles_from_sides(s: Sides) -> tuple[float, float, float]:
    """Angles (A, B, Gamma) in degrees, opposite a, b, c respectively.

    Since the sides are sorted the angles come out ascending. An angle of
    exactly 60 degrees (b^2 = a^2 + c^2 - ac and its analogues) is reported
    as exactly ``60.0``.
    """
    k16 = _heron16(s)
    a, b, c = s
    return (
        _angle_opposite(a, b, c, k16),
        _angle_opposite(b, a, c, k16),
        _angle_opposite(c, a, b, k16),
    )


def half_angle_tan(s: Sides, vertex: str) -> float:
    """tan of half the angle at ``vertex`` via r / (t - opposite side).

    ``vertex`` is one of ``"A"``, ``"B"``, ``"Gamma"`` (``"C"`` and ``"Γ"``
    are accepted aliases).
    """
    try:
        idx = _VERTICES[vertex]
    except KeyError:
        raise ValueError(f"unknown vertex {vertex!r}") from None
    t = semiperimeter(s)
    opposite = (s.a, s.b, s.c)[idx]
    return inradius(s) / float(t - opposite)


@dataclass(frozen=True)
class Triangle:
    sides: Sides
    tau: Fraction
    angles: tuple[float, float, float]
    inradius: float = field(repr=False)

    @property
    def A(self) -> float:
        return self.angles[0]

    @property
    def B(self) -> float:
        return self.angles[1]

    @property
    def Gamma(self) -> float:
        return self.angles[2]


def make_triangle(a: Number, b: Number, c: Number) -> Triangle:
    s = validate_sides(a, b, c)
    return Triangle(
        sides=s,
        tau=semiperimeter(s),
        angles=angles_from_sides(s),
        inradius=inradius(s),
    )
