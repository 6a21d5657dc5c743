"""Integer-sided triangles with angles in arithmetic progression.

Every such triangle alpha <= beta <= gamma has the form

    alpha = d*k*l,  beta = d*(3k^2 + l^2)/4,  gamma = d*(2kl + |3k^2 - l^2|)/4

with gcd(k, l) = 1 and l/k in (0, 1] or [3, inf). When k and l are both odd
any d works; with mixed parity d must be a multiple of 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence, Union

from .errors import (
    InvariantError,
    NonPositive,
    NotCoprime,
    ParityViolation,
    RatioConditionViolation,
)

SQRT3 = math.sqrt(3.0)


def ratio_condition(kappa: int, lam: int) -> bool:
    """lambda <= kappa or lambda >= 3*kappa, i.e. the generated sides come out sorted."""
    return lam <= kappa or lam >= 3 * kappa


def min_scale(kappa: int, lam: int) -> int:
    """Smallest admissible d: 1 when both are odd, else 4."""
    return 1 if (kappa % 2 and lam % 2) else 4


@dataclass(frozen=True, order=True)
class TriangleParams:
    d: int
    kappa: int
    lam: int

    def __post_init__(self):
        if min(self.d, self.kappa, self.lam) <= 0:
            raise NonPositive(f"parameters must be positive integers, got {self}")
        if gcd(self.kappa, self.lam) != 1:
            raise NotCoprime(f"gcd(kappa={self.kappa}, lambda={self.lam}) != 1")
        if not ratio_condition(self.kappa, self.lam):
            raise RatioConditionViolation(
                f"lambda/kappa = {self.lam}/{self.kappa} lies strictly between 1 and 3"
            )
        if self.d % min_scale(self.kappa, self.lam):
            raise ParityViolation(
                f"kappa + lambda is odd, so d must be a multiple of 4 (got d={self.d})"
            )


def validate_params(d: int, kappa: int, lam: int) -> TriangleParams:
    for v in (d, kappa, lam):
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"parameters must be ints, got {v!r}")
    return TriangleParams(d, kappa, lam)


@dataclass(frozen=True)
class IntegerTriangle:
    """Integer triangle with B = 60 degrees and the parameters that generated it.

    ``sin_a_coef`` is the exact rational q with sin A = q * sqrt(3).
    """

    alpha: int
    beta: int
    gamma: int
    params: TriangleParams
    rho: Fraction
    sin_a_coef: Fraction
    A_deg: float
    phi_deg: float
    Gamma_deg: float

    @property
    def sides(self) -> tuple[int, int, int]:
        return self.alpha, self.beta, self.gamma

    @property
    def sin_a(self) -> float:
        return float(self.sin_a_coef) * SQRT3


def _angle_a(alpha: int, beta: int, gamma: int, sin_coef: Fraction) -> float:
    if alpha == gamma:
        return 60.0
    cos_a = Fraction(beta * beta + gamma * gamma - alpha * alpha, 2 * beta * gamma)
    return math.degrees(math.atan2(float(sin_coef) * SQRT3, float(cos_a)))


def describe_sides(alpha: int, beta: int, gamma: int, params: TriangleParams) -> IntegerTriangle:
    """Wrap a known B = 60 degree integer triple with its derived quantities."""
    if beta * beta != alpha * alpha + gamma * gamma - alpha * gamma:
        raise InvariantError(f"({alpha}, {beta}, {gamma}) does not have B = 60 degrees")
    if not (0 < alpha <= beta <= gamma and alpha + beta > gamma):
        raise InvariantError(f"({alpha}, {beta}, {gamma}) is not a sorted proper triangle")
    # law of sines: sin A = alpha * sin 60 / beta
    coef = Fraction(alpha, 2 * beta)
    a_deg = _angle_a(alpha, beta, gamma, coef)
    return IntegerTriangle(
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        params=params,
        rho=Fraction(alpha + beta + gamma, beta),
        sin_a_coef=coef,
        A_deg=a_deg,
        phi_deg=60.0 - a_deg,
        Gamma_deg=120.0 - a_deg,
    )


def param_sides(d: int, kappa: int, lam: int) -> tuple[int, int, int]:
    q = 3 * kappa * kappa + lam * lam
    alpha = d * kappa * lam
    beta, rb = divmod(d * q, 4)
    gamma, rg = divmod(d * (2 * kappa * lam + abs(3 * kappa * kappa - lam * lam)), 4)
    if rb or rg:
        raise ParityViolation(f"d={d}, kappa={kappa}, lambda={lam} gives non-integer sides")
    return alpha, beta, gamma


def triangle_from_params(p: TriangleParams) -> IntegerTriangle:
    """
    >>> t = triangle_from_params(TriangleParams(4, 2, 1))
    >>> t.sides, t.rho, t.sin_a_coef
    ((8, 13, 15), Fraction(36, 13), Fraction(4, 13))
    """
    t = describe_sides(*param_sides(p.d, p.kappa, p.lam), p)
    # sin A from the parameters directly: 2kl / (3k^2 + l^2)
    if t.sin_a_coef != Fraction(2 * p.kappa * p.lam, 3 * p.kappa**2 + p.lam**2):
        raise InvariantError(f"sin A mismatch for {p}")
    return t


def brute_force_triangles(max_gamma: int) -> list[tuple[int, int, int]]:
    """All integer (alpha, beta, gamma), sorted, gamma <= max_gamma, with B = 60 degrees.

    Scans (alpha, beta); gamma = (alpha + delta)/2 where delta^2 = 4 beta^2 - 3 alpha^2
    must be a perfect square of the same parity as alpha.
    """
    out = []
    for alpha in range(1, max_gamma + 1):
        for beta in range(alpha, max_gamma + 1):
            r = 4 * beta * beta - 3 * alpha * alpha
            delta = isqrt(r)
            if alpha + delta > 2 * max_gamma:
                break
            if delta * delta != r or (alpha + delta) % 2:
                continue
            gamma = (alpha + delta) // 2
            if beta <= gamma:
                out.append((alpha, beta, gamma))
    out.sort()
    return out


def enumerate_triangles(max_gamma: int) -> list[IntegerTriangle]:
    """Each distinct triangle with gamma <= max_gamma once, sorted by sides.

    The attached params are the lexicographically smallest (d, kappa, lambda)
    producing that side triple. beta <= gamma bounds 3k^2 + l^2 by 4*max_gamma.
    """
    best: dict[tuple[int, int, int], TriangleParams] = {}
    bound = 4 * max_gamma
    kappa = 1
    while 3 * kappa * kappa + 1 <= bound:
        lam = 1
        while 3 * kappa * kappa + lam * lam <= bound:
            if gcd(kappa, lam) == 1 and ratio_condition(kappa, lam):
                step = min_scale(kappa, lam)
                d = step
                while True:
                    sides = param_sides(d, kappa, lam)
                    if sides[2] > max_gamma:
                        break
                    p = TriangleParams(d, kappa, lam)
                    if sides not in best or p < best[sides]:
                        best[sides] = p
                    d += step
            lam += 1
        kappa += 1
    return [describe_sides(*sides, best[sides]) for sides in sorted(best)]


def primitive_reduce(t: Union[IntegerTriangle, Sequence[int]]) -> tuple[int, int, int]:
    """Divide the sides by their common gcd.

    >>> primitive_reduce((48, 57, 63))
    (16, 19, 21)
    """
    a, b, c = t.sides if isinstance(t, IntegerTriangle) else t
    g = gcd(a, b, c)
    return a // g, b // g, c // g


def gcd_class_check(kappa: int, lam: int) -> int:
    """Common pairwise gcd of the minimally scaled sides for (kappa, lambda).

    With i = min_scale(kappa, lambda), the sides are i*kl, i(3k^2+l^2)/4 and
    i(2kl + |3k^2-l^2|)/4. Raises InvariantError if the three pairwise gcds
    are not all equal.
    """
    if gcd(kappa, lam) != 1:
        raise NotCoprime(f"gcd({kappa}, {lam}) != 1")
    if not ratio_condition(kappa, lam):
        raise RatioConditionViolation(f"lambda/kappa = {lam}/{kappa} lies strictly between 1 and 3")
    a, b, c = param_sides(min_scale(kappa, lam), kappa, lam)
    pair = {gcd(a, b), gcd(b, c), gcd(a, c)}
    if len(pair) != 1:
        raise InvariantError(f"pairwise gcds differ for kappa={kappa}, lambda={lam}: {sorted(pair)}")
    return pair.pop()
