"""JSON-ready report sections.

Exact values are strings: polynomials in their printed form and rationals as
``"a/b"``.  Algebraic scalars print as polynomials in ``z`` next to the
modulus of their field.  Approximate roots are tagged ``"numeric": true``
with the number of significant digits used.  Key order is fixed by
construction and the JSON writer sorts nothing, so output is byte-stable.
"""

from __future__ import annotations

import json

import mpmath

from .. import __version__
from ..algebra.scalars import format_scalar
from ..maps import (
    InverseCertificate,
    JacobianReport,
    NormalizationCertificate,
    NotInvertible,
    PolyMap2,
    ResultantData,
)
from ..puiseux import BoundedBranch, CriticalClassification, PuiseuxBranch

SCHEMA_ID = "report-v1"


def scalar(c) -> str:
    return format_scalar(c)


def poly(P) -> str:
    return str(P)


def header(command: str, F: PolyMap2 | None) -> dict:
    out = {"schema": SCHEMA_ID, "version": __version__, "command": command}
    if F is not None:
        out["input"] = {"p": poly(F.p), "q": poly(F.q)}
    return out


def jacobian_section(J: JacobianReport) -> dict:
    return {"jac": poly(J.jac), "is_keller": J.is_keller}


def normalization_section(cert: NormalizationCertificate, W: PolyMap2) -> dict:
    return {
        "shear": cert.shear,
        "target_scale": [scalar(s) for s in cert.target_scale],
        "p": poly(W.p),
        "q": poly(W.q),
    }


def resultant_section(D: ResultantData, sakkalis: bool) -> dict:
    return {
        "R": poly(D.R),
        "n": D.n,
        "r_top": poly(D.r_top),
        "r_zero": poly(D.r_zero),
        "irreducible": D.irreducible,
        "sakkalis": sakkalis,
    }


def inverse_section(result: InverseCertificate | NotInvertible) -> dict:
    if isinstance(result, InverseCertificate):
        return {
            "invertible": True,
            "g1": poly(result.g1),
            "g2": poly(result.g2),
            "lambda1": scalar(result.lambda1),
            "lambda2": scalar(result.lambda2),
        }
    return {
        "invertible": False,
        "n": result.n,
        "n_y": result.n_y,
        "failing": list(result.failing),
        "r_top": poly(result.r_top),
        "reason": result.reason,
    }


def branch_section(b: PuiseuxBranch) -> dict:
    return {
        "m": b.m,
        "ramification": b.ramification,
        "field": b.field.to_json(),
        "exact": b.exact,
        "order": b.order,
        "coeffs": [[e, scalar(c)] for e, c in b.coeffs],
    }


def bounded_section(bb: BoundedBranch, scale) -> dict:
    """``scale`` converts values of the normalized ``q`` back to the original ``q``."""
    return {
        "branch": branch_section(bb.branch),
        "b0": scalar(bb.b0 * scale),
        "b1": scalar(bb.b1 * scale),
        "gap_open": bb.gap_open,
        "degenerate_resultant": bb.degenerate_resultant,
        "note": bb.note,
    }


def numeric_roots(roots, precision: int) -> dict:
    def fmt(x):
        s = mpmath.nstr(x, precision, min_fixed=-3, max_fixed=3)
        return "0" if s in ("0.0", "-0.0") else s

    return {
        "numeric": True,
        "precision": precision,
        "roots": [{"re": fmt(r.real), "im": fmt(r.imag)} for r in roots],
    }


def classification_section(C: CriticalClassification) -> dict:
    return {
        "first_kind_poly": poly(C.first_kind_poly),
        "second_kind_poly": poly(C.second_kind_poly),
        "degenerate_flag": C.degenerate_flag,
    }


def dumps(report: dict, pretty: bool = True) -> str:
    return json.dumps(report, indent=2 if pretty else None, ensure_ascii=False) + "\n"


def render_text(report: dict, indent: int = 0) -> str:
    """Plain ``key: value`` rendering of a report for terminals."""
    pad = "  " * indent
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for k, item in enumerate(value):
                lines.append(f"{pad}  [{k}]")
                lines.append(render_text(item, indent + 2))
        else:
            shown = "null" if value is None else value
            lines.append(f"{pad}{key}: {shown}")
    return "\n".join(line for line in lines if line)
