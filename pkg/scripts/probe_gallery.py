"""Bounded branches over a few fibers of some classic maps of the plane.

Prints, per map and fiber, each branch of p = c along which q stays bounded,
with b0, b1 and the report note.  The probe looks at the fiber itself:
(y, x^2*y + x) is not proper over u = 0, but the escaping curves approach
y = 0 from nearby fibers, so the probe over c = 0 finds nothing.
"""

from __future__ import annotations

from gmpy2 import mpq

from planemaps.algebra.scalars import format_scalar
from planemaps.cli.parser import parse_polynomial
from planemaps.cli.main import working_form
from planemaps.maps import PolyMap2, nonproper_set
from planemaps.puiseux import kraus_probe

GALLERY = [
    ("y", "x + y^2", [0, 1]),
    ("y", "x*y + x", [-1, 0, 1]),
    ("y^2 + x*y", "x*y", [1, 2]),
    ("y", "x^2*y + x", [0, 1]),
    ("y^2 - x^3", "x", [0, mpq(1, 2)]),
]


def main() -> None:
    for p_text, q_text, fibers in GALLERY:
        F = PolyMap2(parse_polynomial(p_text), parse_polynomial(q_text))
        W, cert = working_form(F)
        s1 = cert.target_scale[0]
        where = "" if cert.shear == 0 else "  (normalized coordinates)"
        print(f"({F.p}, {F.q})   nonproper set: {nonproper_set(W)}{where}")
        for c in fibers:
            found = kraus_probe(W, c * s1)
            if not found:
                print(f"  c = {format_scalar(c)}: proper, no bounded branch")
            for bb in found:
                print(f"  c = {format_scalar(c)}: b0 = {format_scalar(bb.b0)}, b1 = {format_scalar(bb.b1)}")
                print(f"      {bb.note}")


if __name__ == "__main__":
    main()
