"""Bounded branches of ``q`` along a fiber ``p = c`` (the gap probe).

A branch at infinity of ``p = c`` along which ``q`` stays bounded is a
sequence escaping to infinity whose image converges to ``(c, b0)``.  Such
points make up the set where ``F`` fails to be proper, so ``b0`` is a root of
``r_top(c, v)``.  Writing ``w = b0 + b1/t + ...``, a nonzero ``b1`` would
give a regular reparametrization of the branch by ``w - b0``.  When
``b1 = 0`` nothing is concluded, and the report says so.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import MultiPoly, dense
from ..errors import InsufficientOrder, InternalError
from ..maps import PolyMap2, parametric_resultant, require_monic
from .expansion import PuiseuxBranch, expand_at_infinity
from .image import BranchImage, branch_image

_MAX_REFINEMENTS = 8

NOTE_OPEN = (
    "gap open: b1 = 0, so no regular reparametrization by w - b0 follows "
    "and nothing is claimed about a branch point"
)
NOTE_REGULAR = "b1 != 0: 1/x is a power series in (w - b0) near this branch"
NOTE_DEGENERATE = "r_top(c, v) vanishes identically (degenerate resultant)"


def _note(gap: bool, degenerate: bool) -> str:
    text = NOTE_OPEN if gap else NOTE_REGULAR
    return f"{text}; {NOTE_DEGENERATE}" if degenerate else text


@dataclass(frozen=True)
class BoundedBranch:
    branch: PuiseuxBranch
    image: BranchImage
    b0: object
    b1: object
    gap_open: bool
    degenerate_resultant: bool
    note: str


def _image(q: MultiPoly, branch: PuiseuxBranch) -> tuple[PuiseuxBranch, BranchImage]:
    for _ in range(_MAX_REFINEMENTS):
        try:
            return branch, branch_image(q, branch)
        except InsufficientOrder as exc:
            branch = branch.refine(exc.needed)
    raise InternalError("branch image did not stabilize under refinement")


def top_coefficient_at(F: PolyMap2, c) -> MultiPoly:
    """``r_top(c, v)``."""
    return parametric_resultant(F).r_top.subs({"u": c})


def kraus_probe(F: PolyMap2, c, order: int = 16) -> list[BoundedBranch]:
    """Bounded branches of ``q`` on ``p = c``.

    Branches are refined automatically until ``w`` is known down to ``t**-1``.
    """
    require_monic(F)
    branches = expand_at_infinity(F.p, c, order)
    top_c: MultiPoly | None = None
    out: list[BoundedBranch] = []
    for br in branches:
        br, img = _image(F.q, br)
        if not img.bounded:
            continue
        if top_c is None:
            top_c = top_coefficient_at(F, c)
        degenerate = not top_c
        if not degenerate and dense.evaluate(top_c.to_dense("v"), img.b0):
            raise InternalError(f"bounded branch with b0 = {img.b0} but r_top(c, b0) != 0")
        gap = not img.b1
        out.append(
            BoundedBranch(br, img, img.b0, img.b1, gap, degenerate, _note(gap, degenerate))
        )
    return out


def proper_on_fiber(F: PolyMap2, c, order: int = 16) -> bool:
    """True when ``q`` is unbounded on every branch at infinity of ``p = c``."""
    return not kraus_probe(F, c, order)
