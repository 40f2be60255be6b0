"""Invert a seeded corpus of tame automorphisms and check both compositions.

    python3 scripts/corpus_inversion.py --n 100 --seed 0
"""

from __future__ import annotations

import argparse
import time

from planemaps.cli.corpus import CorpusConfig, generate_corpus
from planemaps.maps import InverseCertificate, PolyMap2, compose, invert


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--depth", type=int, default=5)
    args = ap.parse_args()

    maps = generate_corpus(CorpusConfig(n=args.n, seed=args.seed, depth=args.depth))
    identity = PolyMap2.identity()
    failures = 0
    start = time.perf_counter()
    for k, F in enumerate(maps):
        t0 = time.perf_counter()
        G = invert(F)
        ok = isinstance(G, InverseCertificate)
        if ok:
            H = G.as_map()
            ok = compose(F, H) == identity and compose(H, F) == identity
        failures += not ok
        print(f"{k:3d}  deg {F.degree:2d}  inverse deg {H.degree if ok else '-':>2}  "
              f"{'ok' if ok else 'FAILED'}  {time.perf_counter() - t0:.2f}s")
    print(f"{len(maps) - failures}/{len(maps)} inverted exactly in {time.perf_counter() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
