"""Numeric listing of the roots of an exact univariate polynomial."""

from __future__ import annotations

import mpmath

from ..algebra import MultiPoly, dense
from ..algebra.scalars import as_rational
from ..errors import DegenerateInput, InternalError, NotUnivariate, ZeroPolynomial


def _to_mpf(q):
    return mpmath.mpf(int(q.numerator)) / int(q.denominator)


def complex_roots(P: MultiPoly, precision: int = 30) -> list:
    """All complex roots of ``P`` with multiplicity, as ``mpmath.mpc`` values.

    Each squarefree factor is solved by Durand-Kerner iteration
    (``mpmath.polyroots``).  Every returned root satisfies
    ``|P(root)| < 10**(-precision / 2)``.  Roots are sorted by real part, then
    imaginary part.
    """
    if not P:
        raise ZeroPolynomial("roots of the zero polynomial")
    names = P.variables()
    if len(names) > 1:
        raise NotUnivariate(f"{P} involves {len(names)} variables")
    if not names:
        return []
    coeffs = [as_rational(c) for c in P.to_dense(names[0])]
    if any(c is None for c in coeffs):
        raise DegenerateInput("complex_roots needs rational coefficients")
    tol = mpmath.mpf(10) ** (-mpmath.mpf(precision) / 2)
    with mpmath.workdps(precision + 20):
        full = [_to_mpf(c) for c in reversed(coeffs)]
        roots = []
        for part, mult in dense.squarefree_decomposition(coeffs):
            if len(part) == 2:
                found = [_to_mpf(-part[0] / part[1])]
            else:
                found = mpmath.polyroots(
                    [_to_mpf(c) for c in reversed(part)], maxsteps=200, extraprec=4 * precision + 50
                )
            roots.extend(mpmath.mpc(r) for r in found for _ in range(mult))
        for r in roots:
            if abs(mpmath.polyval(full, r)) >= tol:
                raise InternalError(f"root {r} misses the residual bound")
        roots.sort(key=lambda r: (r.real, r.imag))
    return roots
