"""Rank certificates for the linear and quadratic span of a function family.

Rows are value vectors (or their pairwise products) at seeded sample points.
Exact rows certify independence outright; in modular mode the rows are the
reductions mod p of the exact rows, so full rank mod p is equally conclusive.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass


from ..exactlin import (
    GF,
    QQ,
    BadPrime,
    PrimeRetriesExceeded,
    RankCertificate,
    nullspace_exact,
    nullspace_modular,
    prime_sequence,
    primitive_integer_vector,
    rank_exact,
    rank_mod_array,
    rational_reconstruction,
)
from ..exactlin.linalg import as_modular_array
from .families import FunctionFamily


class SamplerExhausted(RuntimeError):
    pass


@dataclass
class SamplerConfig:
    seed: int = 1
    multiplier: int = 2
    max_batches: int = 4
    mode: str = "modular"  # or "exact"
    prime_retries: int = 5
    threads: int = 1
    samples: int | None = None  # rows in the first batch; default multiplier * target
    verify_batches: int = 3
    backend: str = "auto"


def pair_index(m: int) -> list[tuple[int, int]]:
    """Unordered pairs (i <= j) in colexicographic order."""
    return [(i, j) for j in range(m) for i in range(j + 1)]


def rng_for(seed: int, stream: str, index: int) -> random.Random:
    return random.Random(f"lieqr:{seed}:{stream}:{index}")


def _quadratic(v, dom):
    m = len(v)
    if dom.modulus is None:
        return [v[i] * v[j] for j in range(m) for i in range(j + 1)]
    p = dom.modulus
    return [v[i] * v[j] % p for j in range(m) for i in range(j + 1)]


def _rows_chunk(family, seed, stream, indices, dom, quadratic):
    out = []
    for r in indices:
        point = family.sample(rng_for(seed, stream, r))
        v = family.values(point, dom)
        if len(v) != family.dim:
            raise ValueError(f"family {family.tag} returned {len(v)} values, expected {family.dim}")
        out.append(_quadratic(v, dom) if quadratic else list(v))
    return out


def evaluate_rows(family: FunctionFamily, seed: int, stream: str, indices, dom,
                  quadratic: bool, threads: int = 1) -> list[list]:
    """Rows for sample indices; row r depends only on (seed, stream, r)."""
    indices = list(indices)
    if threads <= 1 or len(indices) < 64:
        return _rows_chunk(family, seed, stream, indices, dom, quadratic)
    size = -(-len(indices) // threads)
    chunks = [indices[k:k + size] for k in range(0, len(indices), size)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(_rows_chunk, [family] * len(chunks), [seed] * len(chunks),
                         [stream] * len(chunks), chunks, [dom] * len(chunks),
                         [quadratic] * len(chunks))
        return [row for part in parts for row in part]


def default_threads() -> int:
    return os.cpu_count() or 1


def _rank(rows, dom, backend):
    if dom.modulus is None:
        return rank_exact(rows)
    return rank_mod_array(as_modular_array(rows, dom.modulus), dom.modulus, backend)


def _candidate(rows, dom, ncols) -> list[int] | None:
    if dom.modulus is None:
        basis = nullspace_exact(rows, ncols)
        return primitive_integer_vector(basis[0]) if basis else None
    basis = nullspace_modular(as_modular_array(rows, dom.modulus), dom.modulus)
    if not basis:
        return None
    rec = [rational_reconstruction(x, dom.modulus) for x in basis[0]]
    if any(x is None for x in rec):
        return None
    return primitive_integer_vector(rec)


def _certify(family: FunctionFamily, config: SamplerConfig, quadratic: bool) -> RankCertificate:
    m = family.dim
    if m < 1:
        raise ValueError("family dimension must be positive")
    target = m * (m + 1) // 2 if quadratic else m
    base = config.samples or config.multiplier * target
    if base < 1:
        raise SamplerExhausted("no samples requested")

    if config.mode == "exact":
        domains = [QQ()]
    elif config.mode == "modular":
        domains = [GF(p) for p in prime_sequence(config.seed, 1 + config.prime_retries)]
    else:
        raise ValueError(f"unknown mode {config.mode!r}")

    tried = []
    for dom in domains:
        tried.append(dom.modulus)
        try:
            rows = []
            total = 0
            batches = 0
            rank = 0
            while batches < config.max_batches:
                new_total = base * 2 ** batches
                rows += evaluate_rows(family, config.seed, "main", range(total, new_total), dom,
                                      quadratic, config.threads)
                total = new_total
                batches += 1
                rank = _rank(rows, dom, config.backend)
                if rank == target:
                    break
            break
        except BadPrime:
            continue
    else:
        raise PrimeRetriesExceeded(f"all {len(domains)} primes divide a denominator")

    cert = RankCertificate(
        mode=config.mode, seed=config.seed, samples=len(rows), shape=(len(rows), target),
        rank=rank, target=target, prime=dom.modulus, batches=batches,
        primes_tried=[p for p in tried if p is not None],
    )
    if rank < target:
        cert.candidate_null = _candidate(rows, dom, target)
        cert.confirmed_batches = _confirm(family, config, quadratic, cert.candidate_null, target)
        cert.label = ("likely-dependent" if cert.confirmed_batches == config.verify_batches
                      else "unconfirmed")
    return cert


def _confirm(family, config, quadratic, null, target) -> int:
    """Number of fresh exact batches (``target`` rows each) annihilated by ``null``."""
    if null is None:
        return 0
    ok = 0
    for k in range(config.verify_batches):
        rows = evaluate_rows(family, config.seed, f"verify{k}", range(target), QQ(), quadratic)
        if all(sum(c * x for c, x in zip(null, row)) == 0 for row in rows):
            ok += 1
    return ok


def linear_dimension(family: FunctionFamily, config: SamplerConfig | None = None) -> RankCertificate:
    return _certify(family, config or SamplerConfig(), quadratic=False)


def quadratic_dimension(family: FunctionFamily, config: SamplerConfig | None = None) -> RankCertificate:
    return _certify(family, config or SamplerConfig(), quadratic=True)


def pair_labels(labels, quadratic: bool = True) -> list[str]:
    if not quadratic:
        return list(labels)
    return [f"({labels[i]},{labels[j]})" for i, j in pair_index(len(labels))]


def describe_null(null: list[int], labels) -> str:
    """'1*(1,1) - 1*(2,2) - 1*(3,3)'-style rendering of a dependence."""
    terms = []
    for c, lab in zip(null, labels):
        if c:
            terms.append(f"{'-' if c < 0 else '+'} {abs(c)}*{lab}")
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else s
