"""Triangles whose angles form an arithmetic progression (B = 60 degrees).

Exact generation of the integer-sided family through x^2 + 3y^2 = z^2,
construction from the shape ratio rho = perimeter / middle side, and
progression predicates on sides and angles.
"""

from .errors import (
    InvariantError,
    NonPositive,
    NonPositiveSide,
    NotCoprime,
    ParityViolation,
    RatioConditionViolation,
    RhoOutOfRange,
    TriangleError,
    TriangleInequalityViolation,
    ZeroOperand,
)
from .geometry import (
    Sides,
    Triangle,
    angles_from_sides,
    half_angle_tan,
    inradius,
    make_triangle,
    semiperimeter,
    validate_sides,
)
from .progressions import (
    EquivalenceReport,
    ProgressionKind,
    check_equivalence,
    is_progression,
    progression_residual,
)
from .construction import ShapeRatio, construct_from_rho, rho_of, sines_from_rho
from .diophantine import (
    DioParams,
    DiophantineSolution,
    brute_force_solutions,
    enumerate_via_params,
    is_solution,
    solution_from_params,
)
from .integer_triangles import (
    IntegerTriangle,
    TriangleParams,
    brute_force_triangles,
    enumerate_triangles,
    gcd_class_check,
    primitive_reduce,
    triangle_from_params,
    validate_params,
)

__version__ = "0.1.0"
