"""Construction of the unique B = 60 degree triangle from (beta, rho).

rho is the perimeter divided by the middle side beta. A triangle with
B = 60 degrees and sides alpha <= beta <= gamma exists iff 2 < rho <= 3,
and then

    alpha, gamma = (beta / 2) * (rho - 1 -/+ sqrt((3 - rho)(1 + rho) / 3)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import NonPositiveSide, RhoOutOfRange
from .geometry import Number, Sides, Triangle, as_fraction, make_triangle, validate_sides

RhoLike = Union[int, float, Fraction, str]

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class ShapeRatio:
    """A validated shape ratio, 2 < value <= 3, held exactly."""

    value: Fraction

    def __post_init__(self):
        v = as_fraction(self.value)
        object.__setattr__(self, "value", v)
        if v <= 2:
            raise RhoOutOfRange(self.value, "lower")
        if v > 3:
            raise RhoOutOfRange(self.value, "upper")

    def __float__(self):
        return float(self.value)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


_SQRT_BITS = 128


def _approx_sqrt(q: Fraction) -> Fraction:
    """Rational within a relative 2**-128 of sqrt(q), q > 0."""
    n, d = q.numerator, q.denominator
    return Fraction(isqrt(n * d << (2 * _SQRT_BITS)), d << _SQRT_BITS)


def unit_sides(rho: RhoLike | ShapeRatio) -> tuple[Fraction, Fraction, bool]:
    """(alpha/beta, gamma/beta, exact) for the triangle with shape ratio ``rho``.

    Exact when the discriminant (3-rho)(1+rho)/3 is a rational square;
    otherwise the square root is a rational approximation good to ~1e-38
    relative, and the flag is False.
    """
    r = rho.value if isinstance(rho, ShapeRatio) else ShapeRatio(rho).value
    disc = (3 - r) * (1 + r) / 3
    root = _rational_sqrt(disc)
    if root is not None:
        return (r - 1 - root) / 2, (r - 1 + root) / 2, True
    g = (r - 1 + _approx_sqrt(disc)) / 2
    # alpha * gamma = beta^2 * rho * (rho - 2) / 3; dividing avoids the
    # cancellation in rho - 1 - sqrt(...) as rho -> 2.
    a = r * (r - 2) / (3 * g)
    return a, g, False


def construct_sides(beta: Number, rho: RhoLike | ShapeRatio) -> tuple[Sides, bool]:
    beta = as_fraction(beta)
    if beta <= 0:
        raise NonPositiveSide(f"beta={beta} must be positive")
    ua, ug, exact = unit_sides(rho)
    return validate_sides(beta * ua, beta, beta * ug), exact


def construct_from_rho(beta: Number, rho: RhoLike | ShapeRatio) -> Triangle:
    """Triangle with middle side ``beta``, angle B = 60 degrees and shape ratio ``rho``.

    >>> construct_from_rho(13, Fraction(36, 13)).sides
    Sides(a=Fraction(8, 1), b=Fraction(13, 1), c=Fraction(15, 1))
    """
    sides, _ = construct_sides(beta, rho)
    return make_triangle(*sides)


def sines_from_rho(rho: RhoLike | ShapeRatio) -> tuple[float, float]:
    """(sin A, sin Gamma) of the B = 60 degree triangle with shape ratio ``rho``.

    By the law of sines, sin A = (sqrt(3)/2) * alpha/beta.
    """
    ua, ug, _ = unit_sides(rho)
    return SQRT3 / 2 * float(ua), min(SQRT3 / 2 * float(ug), 1.0)


def rho_of(s: Sides) -> Fraction:
    """Perimeter over middle side, exact."""
    return (s.a + s.b + s.c) / s.b
