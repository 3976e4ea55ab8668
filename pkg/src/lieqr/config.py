"""Run configuration shared by the CLI and the experiment scripts."""
from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields

SEED_ENV = "LIEQR_SEED"
SCHEMA = 1


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 1
    try:
        return check_seed(int(raw, 0))
    except ValueError as exc:
        raise ValueError(f"{SEED_ENV}={raw!r} is not a valid seed") from exc


def check_seed(seed: int) -> int:
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed {seed} outside [0, 2^64)")
    return seed


@dataclass
class RunConfig:
    command: str
    series: str | None = None
    rank: int | None = None
    product: str | None = None  # e.g. "A1,A1,D4"
    fixture: str | None = None  # circle | duplicate
    measure: str = "quadratic"  # or "linear"
    mode: str = "modular"
    seed: int = 1
    multiplier: int = 2
    max_batches: int = 4
    prime_retries: int = 5
    threads: int = 1
    depth_limit: int | None = None
    n: int = 3
    word: str | None = None
    target: str = "H1"
    json_path: str | None = None
    text_path: str | None = None
    trace_path: str | None = None
    allow_long: bool = False
    omit_timing: bool = False
    verbosity: int = 0

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)

    def replay_key(self) -> dict:
        """The fields that determine a report's content (paths, verbosity and threads excluded)."""
        d = self.to_dict()
        for k in ("json_path", "text_path", "trace_path", "verbosity", "threads", "omit_timing"):
            d.pop(k)
        return d
