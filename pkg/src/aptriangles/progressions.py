"""Three-term progression predicates and the seven side/angle equivalences.

Each equivalence is evaluated on both sides independently: the side
condition uses the exact rational side lengths, the angle condition uses
floating trig on the angles from :func:`angles_from_sides`. Nothing here
assumes the theorem it reports on.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroOperand
from .geometry import Sides, angles_from_sides

DEFAULT_TOL = 1e-9

EQUIVALENCE_IDS = ("i", "ii", "iii", "iv", "v", "vi", "vii")


class ProgressionKind(enum.Enum):
    ARITHMETIC = "arithmetic"
    GEOMETRIC = "geometric"
    HARMONIC = "harmonic"


def _relative(residual, *operands) -> float:
    scale = max(abs(x) for x in operands)
    if scale == 0:
        return 0.0
    return float(residual / scale)


def progression_residual(kind: ProgressionKind, x1, x2, x3) -> float:
    """Signed residual of the progression condition, scaled by its largest operand.

    Arithmetic: (2*x2 - x1 - x3) / max(|2*x2|, |x1|, |x3|).
    Geometric: (x2^2 - x1*x3) / max(x2^2, |x1*x3|).
    Harmonic: the arithmetic residual of the reciprocals.

    Exact inputs (int, Fraction) give exact residuals up to the final float
    conversion.
    """
    kind = ProgressionKind(kind)
    if kind is ProgressionKind.ARITHMETIC:
        return _relative(2 * x2 - x1 - x3, 2 * x2, x1, x3)
    if 0 in (x1, x2, x3):
        raise ZeroOperand(f"{kind.value} progression undefined with a zero term")
    if kind is ProgressionKind.GEOMETRIC:
        return _relative(x2 * x2 - x1 * x3, x2 * x2, x1 * x3)
    r1, r2, r3 = (_reciprocal(x) for x in (x1, x2, x3))
    return _relative(2 * r2 - r1 - r3, 2 * r2, r1, r3)


def _reciprocal(x):
    if isinstance(x, (int, Fraction)):
        return 1 / Fraction(x)
    return 1.0 / x


def is_progression(kind: ProgressionKind, x1, x2, x3, tol: float = DEFAULT_TOL) -> bool:
    """
    >>> is_progression(ProgressionKind.HARMONIC, 6, 4, 3)
    True
    """
    return abs(progression_residual(kind, x1, x2, x3)) <= tol


@dataclass(frozen=True)
class EquivalenceReport:
    equivalence_id: str
    lhs_holds: bool
    rhs_holds: bool
    lhs_residual: float
    rhs_residual: float
    tolerance: float

    @property
    def agrees(self) -> bool:
        return self.lhs_holds == self.rhs_holds


def _report(eid, lhs_residual, rhs_residual, tol):
    return EquivalenceReport(
        equivalence_id=eid,
        lhs_holds=abs(lhs_residual) <= tol,
        rhs_holds=abs(rhs_residual) <= tol,
        lhs_residual=lhs_residual,
        rhs_residual=rhs_residual,
        tolerance=tol,
    )


def _worst(*residuals):
    return max(residuals, key=abs)


def _equilateral_residual(s: Sides) -> float:
    return float((s.c - s.a) / s.c)


def check_equivalence(eid: str, s: Sides, tol: float = DEFAULT_TOL) -> EquivalenceReport:
    """Evaluate both sides of equivalence ``eid`` (``"i"`` .. ``"vii"``) on ``s``.

    i    sides AP            <=> cot(A/2), cot(B/2), cot(G/2) AP
    ii   sides AP            <=> tan(A/2) tan(G/2) = 1/3
    iii  squared sides AP    <=> cot A, cot B, cot G AP
    iv   angles AP and sides AP  <=> equilateral
    v    angles AP and sides GP  <=> equilateral
    vi   right angle and sides AP  <=> similar to 3-4-5 (exact)
    vii  sides HP            <=> sin^2(A/2), sin^2(B/2), sin^2(G/2) HP
    """
    A, B, G = (math.radians(x) for x in angles_from_sides(s))
    a, b, c = s
    AP, GP, HP = ProgressionKind.ARITHMETIC, ProgressionKind.GEOMETRIC, ProgressionKind.HARMONIC
    sides_ap = progression_residual(AP, a, b, c)

    if eid == "i":
        cots = [1.0 / math.tan(x / 2) for x in (A, B, G)]
        return _report(eid, sides_ap, progression_residual(AP, *cots), tol)
    if eid == "ii":
        prod = math.tan(A / 2) * math.tan(G / 2)
        return _report(eid, sides_ap, _relative(prod - 1 / 3, prod, 1 / 3), tol)
    if eid == "iii":
        cots = [math.cos(x) / math.sin(x) for x in (A, B, G)]
        lhs = progression_residual(AP, a * a, b * b, c * c)
        return _report(eid, lhs, progression_residual(AP, *cots), tol)
    if eid == "iv":
        angles_ap = progression_residual(AP, A, B, G)
        return _report(eid, _worst(angles_ap, sides_ap), _equilateral_residual(s), tol)
    if eid == "v":
        angles_ap = progression_residual(AP, A, B, G)
        sides_gp = progression_residual(GP, a, b, c)
        return _report(eid, _worst(angles_ap, sides_gp), _equilateral_residual(s), tol)
    if eid == "vi":
        right = _relative(c * c - a * a - b * b, c * c, a * a + b * b)
        # similarity to 3:4:5 by exact cross-multiplication
        similar = _worst(_relative(4 * a - 3 * b, 4 * a, 3 * b), _relative(5 * a - 3 * c, 5 * a, 3 * c))
        return _report(eid, _worst(right, sides_ap), similar, tol)
    if eid == "vii":
        sq = [math.sin(x / 2) ** 2 for x in (A, B, G)]
        return _report(eid, progression_residual(HP, a, b, c), progression_residual(HP, *sq), tol)
    raise ValueError(f"unknown equivalence id {eid!r}; expected one of {EQUIVALENCE_IDS}")
