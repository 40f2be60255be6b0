"""Run configuration: command-line flags, then environment, then defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Mapping, Optional

from ..errors import DegenerateInput

DEFAULT_ORDER = 16
DEFAULT_KRONECKER_BOUND = 8
DEFAULT_SEED = 0

ENV_ORDER = "ORDER"
ENV_KRONECKER_BOUND = "KRONECKER_BOUND"
ENV_SEED = "SEED"


@dataclass(frozen=True)
class RunConfig:
    order: int = DEFAULT_ORDER
    kronecker_bound: int = DEFAULT_KRONECKER_BOUND
    seed: int = DEFAULT_SEED
    fibers: tuple = ()
    precision: int = 20
    timing: bool = False


def _env_int(env: Mapping[str, str], name: str) -> Optional[int]:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise DegenerateInput(f"environment variable {name}={raw!r} is not an integer") from None


def resolve(
    order: Optional[int] = None,
    kronecker_bound: Optional[int] = None,
    seed: Optional[int] = None,
    fibers: tuple = (),
    timing: bool = False,
    env: Mapping[str, str] | None = None,
) -> RunConfig:
    """Pick each setting from the flag if given, else the environment, else the default."""
    env = os.environ if env is None else env

    def pick(flag, name, default):
        if flag is not None:
            return flag
        value = _env_int(env, name)
        return default if value is None else value

    cfg = RunConfig(
        order=pick(order, ENV_ORDER, DEFAULT_ORDER),
        kronecker_bound=pick(kronecker_bound, ENV_KRONECKER_BOUND, DEFAULT_KRONECKER_BOUND),
        seed=pick(seed, ENV_SEED, DEFAULT_SEED),
        fibers=tuple(fibers),
        timing=timing,
    )
    if cfg.order < 1:
        raise DegenerateInput("order must be at least 1")
    if cfg.kronecker_bound < 1:
        raise DegenerateInput("the Kronecker degree bound must be at least 1")
    return cfg
