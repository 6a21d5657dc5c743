"""Command-line front end.

Usage:
    aptri table                                  # the twelve published rows
    aptri generate --kappa-max 5 --lambda-max 5  # all valid params in bounds
    aptri enumerate --max-gamma 50               # every triangle with gamma <= 50
    aptri verify 8 13 15                         # exact B = 60 test
    aptri classify 3 4 5                         # progressions + equivalences i..vii
    aptri construct --beta 13 --rho 36/13

Every subcommand takes ``--format {csv,json,text}`` and ``--output FILE``.
Exit codes: 0 success, 2 invalid input, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .construction import construct_sides, rho_of
from .errors import InvariantError, TriangleError
from .geometry import angles_from_sides, as_fraction, validate_sides
from .integer_triangles import (
    TriangleParams,
    enumerate_triangles,
    min_scale,
    ratio_condition,
    triangle_from_params,
)
from .progressions import EQUIVALENCE_IDS, DEFAULT_TOL, ProgressionKind, check_equivalence, progression_residual
from .records import FORMATS, OutputRecord, emit, emit_records, fmt_angle, sqrt3_str

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3

# (kappa, lambda) in the order the published table lists them
TABLE_PARAMS = (
    (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (3, 2),
    (5, 2), (1, 3), (4, 3), (5, 3), (1, 4), (1, 5),
)


class UsageError(Exception):
    pass


def table_records() -> list[OutputRecord]:
    return [
        OutputRecord.from_triangle(triangle_from_params(TriangleParams(min_scale(k, l), k, l)))
        for k, l in TABLE_PARAMS
    ]


def generate_records(kappa_max: int, lambda_max: int, d_values: Sequence[int] | None = None) -> list[OutputRecord]:
    """All valid (d, kappa, lambda) within bounds, ordered by kappa, lambda, d.

    Without ``d_values`` each pair uses its minimal admissible d (1 or 4).
    With ``d_values``, values that break the parity rule for a pair are skipped.
    """
    if kappa_max < 1 or lambda_max < 1:
        raise UsageError("bounds must be >= 1")
    if d_values is not None and (not d_values or min(d_values) < 1):
        raise UsageError("d values must be >= 1")
    out = []
    for k in range(1, kappa_max + 1):
        for l in range(1, lambda_max + 1):
            if gcd(k, l) != 1 or not ratio_condition(k, l):
                continue
            ds = [min_scale(k, l)] if d_values is None else sorted(set(d_values))
            for d in ds:
                if d % min_scale(k, l):
                    continue
                out.append(OutputRecord.from_triangle(triangle_from_params(TriangleParams(d, k, l))))
    return out


def enumerate_records(max_gamma: int) -> list[OutputRecord]:
    if max_gamma < 1:
        raise UsageError("--max-gamma must be >= 1")
    return [OutputRecord.from_triangle(t) for t in enumerate_triangles(max_gamma)]


VERIFY_FIELDS = (
    "alpha", "beta", "gamma", "valid_triangle", "angles_in_ap",
    "rho_num", "rho_den", "sinA_num", "sinA_den", "A_deg", "B_deg", "Gamma_deg",
)


def verify_row(a: int, b: int, c: int) -> dict:
    """Exact B = 60 degree test on an integer triple (sorted first)."""
    s = validate_sides(a, b, c)
    x, y, z = (int(v) for v in s)
    row = dict.fromkeys(VERIFY_FIELDS)
    row.update(alpha=x, beta=y, gamma=z, valid_triangle=True)
    row["angles_in_ap"] = y * y == x * x + z * z - x * z
    A, B, G = angles_from_sides(s)
    row.update(A_deg=A, B_deg=B, Gamma_deg=G)
    if row["angles_in_ap"]:
        rho = rho_of(s)
        sin_coef = Fraction(x, 2 * y)
        row.update(rho_num=rho.numerator, rho_den=rho.denominator,
                   sinA_num=sin_coef.numerator, sinA_den=sin_coef.denominator)
    return row


def verify_text(row: dict) -> str:
    head = f"sides=({row['alpha']}, {row['beta']}, {row['gamma']}) valid triangle"
    angles = f"A={fmt_angle(row['A_deg'])} B={fmt_angle(row['B_deg'])} Gamma={fmt_angle(row['Gamma_deg'])}"
    if not row["angles_in_ap"]:
        r = row["alpha"] ** 2 + row["gamma"] ** 2 - row["alpha"] * row["gamma"] - row["beta"] ** 2
        return f"{head}; angles NOT in arithmetic progression (alpha^2+gamma^2-alpha*gamma-beta^2 = {r}); {angles}"
    rho = Fraction(row["rho_num"], row["rho_den"])
    sin_a = sqrt3_str(Fraction(row["sinA_num"], row["sinA_den"]))
    return f"{head}; angles in arithmetic progression, B=60; rho={rho} sinA={sin_a} {angles}"


CLASSIFY_FIELDS = ("check", "holds", "residual", "tolerance")


def classify_rows(a, b, c, tol: float = DEFAULT_TOL) -> list[dict]:
    s = validate_sides(a, b, c)
    angles = angles_from_sides(s)
    subjects = {
        "sides": tuple(s),
        "angles": angles,
        "squared_sides": tuple(x * x for x in s),
    }
    rows = []
    for name, triple in subjects.items():
        for kind in ProgressionKind:
            res = progression_residual(kind, *triple)
            rows.append(dict(check=f"{name}.{kind.value}", holds=abs(res) <= tol, residual=res, tolerance=tol))
    for eid in EQUIVALENCE_IDS:
        rep = check_equivalence(eid, s, tol)
        rows.append(dict(check=f"eq_{eid}.lhs", holds=rep.lhs_holds, residual=rep.lhs_residual, tolerance=tol))
        rows.append(dict(check=f"eq_{eid}.rhs", holds=rep.rhs_holds, residual=rep.rhs_residual, tolerance=tol))
    return rows


CONSTRUCT_FIELDS = ("alpha", "beta", "gamma", "exact", "A_deg", "B_deg", "Gamma_deg")


def construct_row(beta, rho) -> dict:
    s, exact = construct_sides(as_fraction(beta), as_fraction(rho))
    A, B, G = angles_from_sides(s)

    def side(v):
        return str(v) if exact else repr(float(v))

    return dict(alpha=side(s.a), beta=side(s.b), gamma=side(s.c), exact=exact, A_deg=A, B_deg=B, Gamma_deg=G)


def _int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    return v


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational or decimal number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="csv")
    common.add_argument("--output", "-o", metavar="FILE", default=None, help="write here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="aptri",
        description="Triangles whose angles are in arithmetic progression (B = 60 degrees).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("table", parents=[common], help="the twelve rows with 1 <= kappa, lambda <= 5")

    g = sub.add_parser("generate", parents=[common], help="triangles for all valid params within bounds")
    g.add_argument("--kappa-max", type=_int, required=True)
    g.add_argument("--lambda-max", type=_int, required=True)
    g.add_argument("--d-list", type=_int, nargs="+", default=None,
                   help="scale factors; default is the minimal admissible d per pair")

    e = sub.add_parser("enumerate", parents=[common], help="every distinct triangle with gamma <= N")
    e.add_argument("--max-gamma", type=_int, required=True)

    v = sub.add_parser("verify", parents=[common], help="test whether an integer triangle has B = 60")
    v.add_argument("sides", type=_int, nargs=3, metavar="N")

    c = sub.add_parser("classify", parents=[common], help="progressions and equivalences i..vii")
    c.add_argument("sides", type=_rational, nargs=3, metavar="X")
    c.add_argument("--tol", type=float, default=DEFAULT_TOL)

    k = sub.add_parser("construct", parents=[common], help="build the B = 60 triangle from beta and rho")
    k.add_argument("--beta", type=_rational, required=True)
    k.add_argument("--rho", type=_rational, required=True)
    return parser


def _run(args, out) -> None:
    fmt = args.format
    if args.command == "table":
        emit_records(table_records(), fmt, out)
    elif args.command == "generate":
        emit_records(generate_records(args.kappa_max, args.lambda_max, args.d_list), fmt, out)
    elif args.command == "enumerate":
        emit_records(enumerate_records(args.max_gamma), fmt, out)
    elif args.command == "verify":
        row = verify_row(*args.sides)
        emit([row], VERIFY_FIELDS, fmt, out, [verify_text(row)])
    elif args.command == "classify":
        emit(classify_rows(*args.sides, tol=args.tol), CLASSIFY_FIELDS, fmt, out)
    elif args.command == "construct":
        emit([construct_row(args.beta, args.rho)], CONSTRUCT_FIELDS, fmt, out)


@contextlib.contextmanager
def _open_output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    try:
        # render fully before touching the output file so errors leave no partial file
        buf = io.StringIO()
        _run(args, buf)
        with _open_output(args.output) as out:
            out.write(buf.getvalue())
    except (TriangleError, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvariantError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
