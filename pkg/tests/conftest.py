"""Shared hypothesis strategies, a residual oracle for branches, CLI helpers."""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from planemaps.algebra import MultiPoly

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


@st.composite
def rationals(draw, height: int = 6, allow_zero: bool = True):
    num = draw(st.integers(-height, height))
    den = draw(st.integers(1, height))
    if not allow_zero and num == 0:
        num = 1
    return mpq(num, den)


@st.composite
def polys(draw, variables=("x", "y"), max_degree: int = 3, max_terms: int = 5, height: int = 5):
    """Sparse random polynomial with small rational coefficients."""
    n = draw(st.integers(0, max_terms))
    out = MultiPoly.const(0)
    for _ in range(n):
        exps = {}
        budget = draw(st.integers(0, max_degree))
        for w in variables:
            e = draw(st.integers(0, budget))
            budget -= e
            exps[w] = e
        out = out + MultiPoly.monomial(draw(rationals(height)), **exps)
    return out


def nonzero(strategy):
    return strategy.filter(bool)


# branch residuals: the truncated branch is substituted into p(t**m, y) - c with
# plain Laurent-polynomial arithmetic on dicts, independent of the series code


def laurent_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return out


def laurent_pow(a: dict, k: int) -> dict:
    out = {0: mpq(1)}
    for _ in range(k):
        out = laurent_mul(out, a)
    return out


def residual(p: MultiPoly, c, branch) -> dict:
    """Nonzero coefficients of ``p(t**m, y_trunc) - c``."""
    Y = dict(branch.coeffs)
    X = {branch.m: mpq(1)}
    total: dict = {0: -mpq(c)}
    for (i, j, *_), coef in p.terms():
        term = laurent_mul(laurent_pow(X, i), laurent_pow(Y, j))
        for e, val in term.items():
            total[e] = total.get(e, 0) + coef * val
    return {e: val for e, val in total.items() if val}


def assert_residual_vanishes(p: MultiPoly, c, branch) -> None:
    res = residual(p, c, branch)
    if branch.exact:
        assert not res
        return
    # an error of order t**(m - K) in y moves p by at most t**(m*deg p - K)
    bound = branch.m * p.total_degree() - branch.known_terms
    assert all(e <= bound for e in res), (str(p), c, sorted(res)[-3:])


def binomial_half(k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= (Fraction(1, 2) - i) / (i + 1)
    return out


# command line helpers

import contextlib
import io
import json
from pathlib import Path

from planemaps.cli.main import main

GOLDEN = Path(__file__).resolve().parent / "golden"
SCHEMA_PATH = Path(__file__).resolve().parent.parent / "src" / "planemaps" / "cli" / "schema" / "report-v1.json"


def run_cli(argv, env=None) -> tuple[int, str]:
    """Exit code and stdout of one CLI call, isolated from the real environment."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv), env={} if env is None else env)
    return code, buf.getvalue()


def golden_cases() -> dict:
    return json.loads((GOLDEN / "cases.json").read_text())


# acceptance summary: one PASS/FAIL line per criterion at the end of the run

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
