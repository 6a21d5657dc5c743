"""Flat output records and CSV / JSON / text emitters for the CLI."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .integer_triangles import IntegerTriangle

FORMATS = ("csv", "json", "text")


def fmt_angle(x: float) -> str:
    """Nine significant digits, as in the published table (``32.2042275``)."""
    return format(x, ".9g")


def angle_value(x: float) -> float:
    return float(fmt_angle(x))


def sqrt3_str(coef: Fraction) -> str:
    """Pretty form of ``coef * sqrt(3)``: ``4√3/13``, ``√3/2``."""
    num = "√3" if coef.numerator == 1 else f"{coef.numerator}√3"
    return num if coef.denominator == 1 else f"{num}/{coef.denominator}"


@dataclass(frozen=True)
class OutputRecord:
    kappa: int
    lam: int
    d: int
    alpha: int
    beta: int
    gamma: int
    rho_num: int
    rho_den: int
    sinA_num: int
    sinA_den: int
    A_deg: float
    phi_deg: float
    Gamma_deg: float

    # column names; "lambda" is a keyword so the field is ``lam``
    FIELDS = (
        "kappa", "lambda", "d", "alpha", "beta", "gamma", "rho_num", "rho_den",
        "sinA_num", "sinA_den", "A_deg", "phi_deg", "Gamma_deg",
    )

    @classmethod
    def from_triangle(cls, t: IntegerTriangle) -> "OutputRecord":
        return cls(
            kappa=t.params.kappa,
            lam=t.params.lam,
            d=t.params.d,
            alpha=t.alpha,
            beta=t.beta,
            gamma=t.gamma,
            rho_num=t.rho.numerator,
            rho_den=t.rho.denominator,
            sinA_num=t.sin_a_coef.numerator,
            sinA_den=t.sin_a_coef.denominator,
            A_deg=angle_value(t.A_deg),
            phi_deg=angle_value(t.phi_deg),
            Gamma_deg=angle_value(t.Gamma_deg),
        )

    def as_dict(self) -> dict[str, Any]:
        values = dataclasses.astuple(self)
        return dict(zip(self.FIELDS, values))

    def text(self) -> str:
        rho = Fraction(self.rho_num, self.rho_den)
        sin_a = sqrt3_str(Fraction(self.sinA_num, self.sinA_den))
        return (
            f"kappa={self.kappa} lambda={self.lam} d={self.d}: "
            f"sides=({self.alpha}, {self.beta}, {self.gamma}) rho={rho} sinA={sin_a} "
            f"A={fmt_angle(self.A_deg)} phi={fmt_angle(self.phi_deg)} B=60 "
            f"Gamma={fmt_angle(self.Gamma_deg)}"
        )


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_angle(v) if v == v else "nan"
    if v is None:
        return ""
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return str(v)
    return v


def emit(rows: Iterable[dict[str, Any]], fields: Sequence[str], fmt: str, out, text_lines=None) -> None:
    """Write dict rows as CSV (header + rows), a JSON array, or plain text lines."""
    rows = list(rows)
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(fields)
        for r in rows:
            w.writerow([_cell(r[f]) for f in fields])
    elif fmt == "json":
        json.dump([{f: _jsonable(r[f]) for f in fields} for r in rows], out, indent=2, ensure_ascii=False)
        out.write("\n")
    elif fmt == "text":
        lines = text_lines if text_lines is not None else [
            " ".join(f"{f}={_cell(r[f])}" for f in fields) for r in rows
        ]
        for line in lines:
            out.write(line + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def emit_records(records: Sequence[OutputRecord], fmt: str, out) -> None:
    emit((r.as_dict() for r in records), OutputRecord.FIELDS, fmt, out, [r.text() for r in records])


def render(records: Sequence[OutputRecord], fmt: str) -> str:
    buf = io.StringIO()
    emit_records(records, fmt, buf)
    return buf.getvalue()
