"""Seeded random tame automorphisms of the plane.

Each map composes at most ``depth`` elementary maps ``(x, y + f(x))``, each
followed by the swap ``(y, x)`` or a unimodular integer linear map.
Coefficients are integers of absolute value at most ``height``; compositions
whose degree exceeds ``max_degree`` are discarded and redrawn.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from ..algebra import MultiPoly
from ..maps import PolyMap2, compose

X = MultiPoly.var("x")
Y = MultiPoly.var("y")


@dataclass(frozen=True)
class CorpusConfig:
    n: int = 100
    seed: int = 0
    depth: int = 5
    height: int = 3
    max_degree: int = 16
    max_elementary_degree: int = 3


def _nonzero(rng: random.Random, height: int) -> int:
    return rng.choice([k for k in range(-height, height + 1) if k])


def elementary(rng: random.Random, cfg: CorpusConfig) -> PolyMap2:
    d = rng.randint(1, cfg.max_elementary_degree)
    f = MultiPoly.const(0)
    for k in range(d):
        f = f + X ** k * rng.randint(-cfg.height, cfg.height)
    f = f + X ** d * _nonzero(rng, cfg.height)
    return PolyMap2(X, Y + f)


def unimodular(rng: random.Random, cfg: CorpusConfig) -> PolyMap2:
    while True:
        a, b, c, d = (rng.randint(-cfg.height, cfg.height) for _ in range(4))
        if a * d - b * c in (1, -1):
            return PolyMap2(X * a + Y * b, X * c + Y * d)


SWAP = PolyMap2(Y, X)


def _linear(rng: random.Random, cfg: CorpusConfig) -> PolyMap2:
    return SWAP if rng.random() < 0.5 else unimodular(rng, cfg)


def random_automorphism(rng: random.Random, cfg: CorpusConfig) -> PolyMap2:
    """``L_k o E_k o ... o L_1 o E_1 o L_0`` with ``k <= depth`` elementary factors.

    Every elementary factor is followed by a swap or a unimodular map, so
    degrees multiply instead of collapsing into one triangular map.
    """
    while True:
        F = _linear(rng, cfg)
        for _ in range(rng.randint(1, cfg.depth)):
            F = compose(_linear(rng, cfg), compose(elementary(rng, cfg), F))
            if F.degree > cfg.max_degree:
                break
        else:
            return F


def generate_corpus(cfg: CorpusConfig) -> list[PolyMap2]:
    rng = random.Random(cfg.seed)
    return [random_automorphism(rng, cfg) for _ in range(cfg.n)]


def format_corpus(maps: list[PolyMap2]) -> str:
    return "".join(f"{F.p} ; {F.q}\n" for F in maps)


def write_corpus(path: str | Path, maps: list[PolyMap2]) -> None:
    Path(path).write_text(format_corpus(maps), encoding="utf-8")


def read_corpus(path: str | Path) -> list[PolyMap2]:
    from .parser import parse_polynomial

    maps = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        p_text, q_text = line.split(";")
        maps.append(PolyMap2(parse_polynomial(p_text), parse_polynomial(q_text)))
    return maps
