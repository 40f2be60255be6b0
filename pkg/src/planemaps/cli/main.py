"""Command line: ``planemaps {analyze,invert,puiseux,probe,classify,corpus}``.

Maps whose ``p`` is already monic in ``y`` are analyzed as given; other maps
are first brought to monic form and the normalization is reported.  Fiber
values ``--c`` refer to the original ``p``; branch series are written in the
coordinates of the normalized map, while ``b0``, ``b1`` and critical value
polynomials are converted back to the original ``q``.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Mapping, Sequence

from ..algebra import MultiPoly
from ..algebra.gcd import normalize
from ..algebra.scalars import ONE
from ..errors import DegenerateInput, ToolkitError
from ..maps import (
    NormalizationCertificate,
    PolyMap2,
    invert,
    is_monic_in_y,
    jacobian,
    monicize,
    parametric_resultant,
    sakkalis_check,
)
from ..puiseux import (
    classify_critical_values,
    complex_roots,
    expand_at_infinity,
    kraus_probe,
)
from . import report as rep
from .config import RunConfig, resolve
from .corpus import CorpusConfig, format_corpus, generate_corpus
from .parser import parse_polynomial, parse_scalar

COMMANDS = ("analyze", "invert", "puiseux", "probe", "classify", "corpus")
_FIBER_COMMANDS = ("puiseux", "probe", "classify")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planemaps", description="Resultant analysis of polynomial maps of the plane.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--p", help="first component, e.g. 'y^2 - x'")
    ap.add_argument("--q", help="second component")
    ap.add_argument("--c", action="append", default=[], help="fiber value p = c (repeatable)")
    ap.add_argument("--order", type=int, help="truncation order of branch series (env ORDER, default 16)")
    ap.add_argument(
        "--kronecker-bound", type=int, help="degree bound for Kronecker irreducibility tests (env KRONECKER_BOUND, default 8)"
    )
    ap.add_argument("--seed", type=int, help="corpus seed (env SEED, default 0)")
    ap.add_argument("--out", help="output file (corpus command) ")
    ap.add_argument("--json", action="store_true", help="print a JSON report")
    ap.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    ap.add_argument("--n", type=int, default=100, help="corpus size")
    ap.add_argument("--depth", type=int, default=5, help="corpus composition depth")
    ap.add_argument("--height", type=int, default=3, help="corpus coefficient height")
    ap.add_argument("--max-degree", type=int, default=16, help="corpus degree cap")
    return ap


def working_form(F: PolyMap2) -> tuple[PolyMap2, NormalizationCertificate]:
    """``F`` itself when ``p`` is monic in ``y``, else its monic form."""
    if is_monic_in_y(F.p):
        return F, NormalizationCertificate(0, (ONE, ONE))
    return monicize(F)


def _read_map(args) -> PolyMap2:
    if args.p is None or args.q is None:
        raise DegenerateInput("both --p and --q are required")
    return PolyMap2(parse_polynomial(args.p), parse_polynomial(args.q))


def _v_to_original(P: MultiPoly, s2) -> MultiPoly:
    """``P(s2 * v)``: a polynomial in normalized ``v`` rewritten in the original ``q``."""
    return P.subs({"v": MultiPoly.var("v").scalar_mul(s2)})


def _roots(P: MultiPoly, precision: int) -> dict | None:
    if not P or P.is_constant():
        return None
    return rep.numeric_roots(complex_roots(P, precision), precision)


def _fiber_header(c, s1) -> dict:
    return {"c": rep.scalar(c), "c_normalized": rep.scalar(c * s1)}


def _classification(W: PolyMap2, c, cert, cfg: RunConfig) -> dict:
    s1, s2 = cert.target_scale
    C = classify_critical_values(W, c * s1)
    first = _v_to_original(C.first_kind_poly, s2)
    if first and not first.is_constant():
        first = normalize(first)
    second = _v_to_original(C.second_kind_poly, s2)
    return {
        "classification": {
            "first_kind_poly": rep.poly(first),
            "second_kind_poly": rep.poly(second),
            "degenerate_flag": C.degenerate_flag,
        },
        "first_kind_roots": _roots(first, cfg.precision),
        "second_kind_roots": _roots(second, cfg.precision),
    }


def _probe(W: PolyMap2, c, cert, cfg: RunConfig) -> dict:
    s1, s2 = cert.target_scale
    found = kraus_probe(W, c * s1, cfg.order)
    return {
        "proper": not found,
        "bounded_branches": [rep.bounded_section(bb, ONE / s2) for bb in found],
    }


def _puiseux(W: PolyMap2, c, cert, cfg: RunConfig) -> dict:
    s1, _ = cert.target_scale
    branches = expand_at_infinity(W.p, c * s1, cfg.order)
    return {"branches": [rep.branch_section(b) for b in branches]}


def _analysis(F: PolyMap2, W: PolyMap2, cert, cfg: RunConfig) -> dict:
    J = jacobian(F)
    D = parametric_resultant(W, cfg.kronecker_bound)
    return {
        "jacobian": rep.jacobian_section(J),
        "normalization": rep.normalization_section(cert, W),
        "resultant": rep.resultant_section(D, sakkalis_check(D)),
        "geometric_degree": D.n if J.jac else None,
        "nonproper_set": rep.poly(D.r_top),
    }


def run_command(command: str, args, cfg: RunConfig) -> tuple[dict, str | None]:
    """The report for ``command`` and, for ``corpus``, the corpus text."""
    if command == "corpus":
        ccfg = CorpusConfig(
            n=args.n, seed=cfg.seed, depth=args.depth, height=args.height, max_degree=args.max_degree
        )
        text = format_corpus(generate_corpus(ccfg))
        out = rep.header("corpus", None)
        out["corpus"] = {
            "n": ccfg.n,
            "seed": ccfg.seed,
            "depth": ccfg.depth,
            "height": ccfg.height,
            "max_degree": ccfg.max_degree,
            "out": args.out,
        }
        return out, text
    F = _read_map(args)
    if command in _FIBER_COMMANDS and not cfg.fibers:
        raise DegenerateInput(f"{command} needs at least one fiber value --c")
    out = rep.header(command, F)
    out["config"] = {"order": cfg.order, "kronecker_bound": cfg.kronecker_bound}
    W, cert = working_form(F)
    if command in ("analyze", "invert"):
        out.update(_analysis(F, W, cert, cfg))
        if command == "invert":
            out["inverse"] = rep.inverse_section(invert(F))
    else:
        out["normalization"] = rep.normalization_section(cert, W)
    sections = {
        "analyze": (_classification, _probe),
        "invert": (_classification, _probe),
        "puiseux": (_puiseux,),
        "probe": (_probe,),
        "classify": (_classification,),
    }[command]
    if cfg.fibers:
        fibers = []
        for c in cfg.fibers:
            entry = _fiber_header(c, cert.target_scale[0])
            for section in sections:
                entry.update(section(W, c, cert, cfg))
            fibers.append(entry)
        out["fibers"] = fibers
    return out, None


def main(argv: Sequence[str] | None = None, env: Mapping[str, str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        fibers = tuple(parse_scalar(text) for text in args.c)
        cfg = resolve(args.order, args.kronecker_bound, args.seed, fibers, args.timing, env)
        report, corpus_text = run_command(args.command, args, cfg)
    except ToolkitError as exc:
        if args.json:
            sys.stdout.write(rep.dumps({"error": exc.to_json()}))
        else:
            sys.stderr.write(f"error [{exc.code}]: {exc}\n")
        return 2
    if cfg.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    if corpus_text is not None:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(corpus_text)
        else:
            report["corpus"]["maps"] = corpus_text.splitlines()
        if not args.json:
            sys.stdout.write(f"wrote {args.n} maps to {args.out}\n" if args.out else corpus_text)
            return 0
    if args.json:
        sys.stdout.write(rep.dumps(report))
    else:
        sys.stdout.write(rep.render_text(report) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
