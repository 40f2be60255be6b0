"""Exponent l in Res_t(f - u, g - v) = alpha * base**l for random f, g in Q[t].

Tabulates l against gcd(deg f, deg g); l always divides the gcd and equals
the degree of the field extension Q(f, g) inside Q(t).
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from math import gcd

from planemaps.algebra import MultiPoly
from planemaps.resultants import power_structure, resultant

u, v = MultiPoly.var("u"), MultiPoly.var("v")


def random_poly(rng: random.Random, degree: int) -> MultiPoly:
    coeffs = [rng.randint(-3, 3) for _ in range(degree)] + [rng.choice([-2, -1, 1, 2])]
    return MultiPoly.from_dense(coeffs, "t")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    table: Counter = Counter()
    for k in range(args.n):
        df, dg = rng.randint(1, args.max_degree), rng.randint(1, args.max_degree)
        f = random_poly(rng, df)
        if k % 3 == 0:  # force a shared inner polynomial now and then
            h = random_poly(rng, 2)
            f, g = f.subs({"t": h}), random_poly(rng, dg).subs({"t": h})
        else:
            g = random_poly(rng, dg)
        l = power_structure(resultant(f - u, g - v, "t")).exponent
        d = gcd(f.degree("t"), g.degree("t"))
        assert d % l == 0
        table[(d, l)] += 1
    print("gcd(deg f, deg g)   l   count")
    for (d, l), count in sorted(table.items()):
        print(f"{d:17d} {l:3d} {count:7d}")


if __name__ == "__main__":
    main()
