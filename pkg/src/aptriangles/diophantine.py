"""Positive-integer solutions of x^2 + 3y^2 = z^2.

Parametric family (coprime kappa, lambda and a scale d):

    x = d * |3k^2 - l^2| / 2,   y = d * k * l,   z = d * (3k^2 + l^2) / 2

together with an exhaustive scan used as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple

from .errors import NonPositive, NotCoprime, ParityViolation


class DiophantineSolution(NamedTuple):
    x: int
    y: int
    z: int


def is_solution(x: int, y: int, z: int) -> bool:
    return x > 0 and y > 0 and z > 0 and x * x + 3 * y * y == z * z


@dataclass(frozen=True)
class DioParams:
    d: int
    kappa: int
    lam: int

    def __post_init__(self):
        if min(self.d, self.kappa, self.lam) <= 0:
            raise NonPositive(f"parameters must be positive, got {self}")
        if gcd(self.kappa, self.lam) != 1:
            raise NotCoprime(f"gcd({self.kappa}, {self.lam}) != 1")
        # d*|3k^2-l^2| and d*(3k^2+l^2) share parity; checking one suffices
        if (self.d * (3 * self.kappa**2 + self.lam**2)) % 2:
            raise ParityViolation(
                f"d={self.d} gives non-integer x, z for kappa={self.kappa}, lambda={self.lam}"
            )


def solution_from_params(p: DioParams) -> DiophantineSolution:
    """
    >>> solution_from_params(DioParams(4, 2, 1))
    DiophantineSolution(x=22, y=8, z=26)
    """
    k2, l2 = 3 * p.kappa**2, p.lam**2
    sol = DiophantineSolution(p.d * abs(k2 - l2) // 2, p.d * p.kappa * p.lam, p.d * (k2 + l2) // 2)
    assert is_solution(*sol), sol
    return sol


def brute_force_solutions(z_max: int) -> set[DiophantineSolution]:
    """Every solution with z <= z_max, by scanning (y, z) and testing z^2 - 3y^2 for squareness."""
    out = set()
    for z in range(2, z_max + 1):
        zz = z * z
        y = 1
        while 3 * y * y < zz:
            r = zz - 3 * y * y
            x = isqrt(r)
            if x * x == r:
                out.add(DiophantineSolution(x, y, z))
            y += 1
    return out


def enumerate_via_params(z_max: int) -> set[DiophantineSolution]:
    """Every parametric solution with z <= z_max.

    Since d >= 1, z <= z_max forces 3k^2 + l^2 <= 2*z_max, which bounds
    kappa by sqrt(2*z_max/3) and lambda by sqrt(2*z_max).
    """
    out = set()
    bound = 2 * z_max
    kappa = 1
    while 3 * kappa * kappa + 1 <= bound:
        lam = 1
        while 3 * kappa * kappa + lam * lam <= bound:
            if gcd(kappa, lam) == 1:
                q = 3 * kappa * kappa + lam * lam
                step = 1 if q % 2 == 0 else 2
                for d in range(step, bound // q + 1, step):
                    out.add(solution_from_params(DioParams(d, kappa, lam)))
            lam += 1
        kappa += 1
    return out
