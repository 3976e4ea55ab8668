"""Command-line front end.

Exit status: 0 when the run's verdict is the certified/expected one, 2 when
the verdict fails (rank deficiency, open nullspace, counterexample), 1 on
usage or internal errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
import time

from .algebra import build_algebra, structure_constant_lines, validate
from .cartan import InvalidCartanType
from .config import SCHEMA, RunConfig, check_seed, default_seed
from .cqgrel import derive_commutativity
from .flows import SymbolicCapExceeded, expand, parse_word
from .quadind import (
    FIXTURES,
    SamplerConfig,
    adjoint_family,
    coefficient_prover,
    describe_null,
    linear_dimension,
    pair_labels,
    product_family,
    quadratic_dimension,
)

log = logging.getLogger("lieqr")

EXIT_OK, EXIT_USAGE, EXIT_VERDICT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _seed(text: str) -> int:
    try:
        return check_seed(int(text, 0))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=None, help="64-bit seed (default: $LIEQR_SEED or 1)")
    common.add_argument("--json", dest="json_path", help="also write the JSON report here")
    common.add_argument("--text", dest="text_path", help="write the human-readable lines here")
    common.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0)

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--series", choices=["A", "D", "E"], type=str.upper)
    algebra.add_argument("--rank", type=_positive)

    sampler = argparse.ArgumentParser(add_help=False)
    sampler.add_argument("--mode", choices=["modular", "exact"], default="modular")
    sampler.add_argument("--multiplier", type=_positive, default=2)
    sampler.add_argument("--max-batches", type=_positive, default=4)
    sampler.add_argument("--prime-retries", type=int, default=5)
    sampler.add_argument("--threads", type=_positive, default=None,
                         help="row-evaluation workers (default: available cores)")
    sampler.add_argument("--measure", choices=["quadratic", "linear"], default="quadratic")
    sampler.add_argument("--allow-long", action="store_true", help="permit E-series runs")
    sampler.add_argument("--omit-timing", action="store_true", help="drop elapsed_ms from the report")

    p = _Parser(prog="lieqr", description="Quadratic independence certificates for adjoint orbits.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common, algebra], help="construct and validate an algebra")
    b.add_argument("--emit-structure-constants", metavar="PATH")

    q = sub.add_parser("quadind", parents=[common, algebra, sampler], help="certify a family")
    q.add_argument("--fixture", choices=sorted(FIXTURES))

    pr = sub.add_parser("product", parents=[common, sampler], help="certify a product family")
    pr.add_argument("--spec", required=True, help="comma-separated factors, e.g. A1,A1,D4")

    pv = sub.add_parser("prove", parents=[common, algebra], help="run the coefficient prover")
    pv.add_argument("--depth-limit", type=int)
    pv.add_argument("--trace", dest="trace_path")
    pv.add_argument("--omit-timing", action="store_true", help="drop elapsed_ms from the report")

    c = sub.add_parser("cqg", parents=[common], help="derive commutativity of the Q_ij")
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--trace", dest="trace_path")

    e = sub.add_parser("expand", parents=[common, algebra], help="expand Ad_g(target) symbolically")
    e.add_argument("--word", required=True, help='e.g. "E1:s,F1:t"')
    e.add_argument("--target", default="H1")

    r = sub.add_parser("replay", parents=[common], help="re-run a JSON report's embedded config")
    r.add_argument("report")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    d = {k: v for k, v in vars(ns).items() if k not in ("emit_structure_constants", "spec", "report")}
    if d.get("seed") is None:
        d["seed"] = default_seed()
    if "threads" in d and d["threads"] is None:
        from .quadind.certify import default_threads
        d["threads"] = default_threads()
    if getattr(ns, "spec", None):
        d["product"] = ns.spec
    return RunConfig.from_dict(d)


# --- commands -------------------------------------------------------------------

def _require_algebra(cfg: RunConfig):
    if not cfg.series or not cfg.rank:
        raise UsageError("--series and --rank are required")
    try:
        return build_algebra(cfg.series, cfg.rank)
    except InvalidCartanType as exc:
        raise UsageError(str(exc)) from None


def _guard_long(cfg: RunConfig, series):
    if "E" in series and not cfg.allow_long:
        raise UsageError("E-series certification is long-running; pass --allow-long")


def parse_product_spec(spec: str) -> list[tuple[str, int]]:
    out = []
    for tok in spec.split(","):
        m = re.fullmatch(r"\s*([ADEade])(\d+)\s*", tok)
        if not m:
            raise UsageError(f"bad product factor {tok!r} in --spec")
        out.append((m.group(1).upper(), int(m.group(2))))
    return out


def _sampler(cfg: RunConfig) -> SamplerConfig:
    return SamplerConfig(seed=cfg.seed, multiplier=cfg.multiplier, max_batches=cfg.max_batches,
                         mode=cfg.mode, prime_retries=cfg.prime_retries, threads=cfg.threads)


def certify_report(cfg: RunConfig) -> dict:
    """Build and certify the configured family; returns the JSON report."""
    if cfg.command == "product":
        factors = parse_product_spec(cfg.product or "")
        _guard_long(cfg, [s for s, _ in factors])
        try:
            fams = [adjoint_family(build_algebra(s, n)) for s, n in factors]
        except InvalidCartanType as exc:
            raise UsageError(str(exc)) from None
        family, series, rank = product_family(fams), "product", None
        labels = [f"{s}{n}:{lab}" for (s, n), f in zip(factors, fams) for lab in f.L.labels]
    elif cfg.fixture:
        family, series, rank = FIXTURES[cfg.fixture](), "custom", None
        labels = [str(k + 1) for k in range(family.dim)]
    else:
        L = _require_algebra(cfg)
        _guard_long(cfg, cfg.series)
        family, series, rank = adjoint_family(L), cfg.series, cfg.rank
        labels = list(L.labels)
    quadratic = cfg.measure == "quadratic"
    t0 = time.perf_counter()
    cert = (quadratic_dimension if quadratic else linear_dimension)(family, _sampler(cfg))
    elapsed = round((time.perf_counter() - t0) * 1000)
    report = {
        "schema": SCHEMA,
        "series": series,
        "rank": rank,
        "family": family.tag,
        "dim": family.dim,
        "measure": cfg.measure,
        "expected_quad_dim": family.dim * (family.dim + 1) // 2,
        "expected_dim": cert.target,
        "mode": cert.mode,
        "prime": cert.prime,
        "primes_tried": cert.primes_tried,
        "seed": cert.seed,
        "samples": cert.samples,
        "batches": cert.batches,
        "rank_found": cert.rank,
        "verdict": cert.verdict,
    }
    if not cfg.omit_timing:
        report["elapsed_ms"] = elapsed
    if not cert.certified:
        report["candidate_null"] = cert.candidate_null
        report["confirmed_batches"] = cert.confirmed_batches
        report["label"] = cert.label
        if cert.candidate_null is not None:
            report["dependence"] = describe_null(cert.candidate_null, pair_labels(labels, quadratic))
    report["config"] = cfg.to_dict()
    return report


def _emit(cfg: RunConfig, report: dict, out):
    text = json.dumps(report, indent=2, sort_keys=True)
    out.write(text + "\n")
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            fh.write(text + "\n")


def _write_text(cfg: RunConfig, lines):
    if cfg.text_path:
        with open(cfg.text_path, "w") as fh:
            fh.write("\n".join(lines) + "\n")


def cmd_build(cfg: RunConfig, ns, out) -> int:
    L = _require_algebra(cfg)
    rep = validate(L, seed=cfg.seed)
    lines = [f"{L.datum.name}: dim {L.dim}, {L.npos} positive roots"] + rep.lines()
    lines.append(f"verdict: {'valid' if rep.ok else 'INVALID'}")
    out.write("\n".join(lines) + "\n")
    _write_text(cfg, lines)
    if ns.emit_structure_constants:
        with open(ns.emit_structure_constants, "w") as fh:
            fh.write("\n".join(structure_constant_lines(L)) + "\n")
    return EXIT_OK if rep.ok else EXIT_VERDICT


def cmd_certify(cfg: RunConfig, ns, out) -> int:
    report = certify_report(cfg)
    _emit(cfg, report, out)
    return EXIT_OK if report["verdict"] == "certified-full-rank" else EXIT_VERDICT


def cmd_prove(cfg: RunConfig, ns, out) -> int:
    L = _require_algebra(cfg)
    t0 = time.perf_counter()
    try:
        rep = coefficient_prover(L, depth_limit=cfg.depth_limit, seed=cfg.seed)
    except SymbolicCapExceeded as exc:
        raise UsageError(str(exc)) from None
    report = {"schema": SCHEMA, "series": cfg.series, "rank": cfg.rank, "dim": L.dim,
              "verdict": "closed" if rep.closed else "open", **rep.summary(),
              "trace_path": cfg.trace_path}
    if not cfg.omit_timing:
        report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000)
    if rep.nullspace:
        report["nullspace"] = rep.nullspace
    report["config"] = cfg.to_dict()
    if cfg.trace_path:
        with open(cfg.trace_path, "w") as fh:
            rep.write_trace(fh)
    _emit(cfg, report, out)
    return EXIT_OK if rep.closed else EXIT_VERDICT


def cmd_cqg(cfg: RunConfig, ns, out) -> int:
    try:
        proof = derive_commutativity(cfg.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = proof.lines()
    out.write("\n".join(lines) + "\n")
    _write_text(cfg, lines)
    if cfg.trace_path:
        with open(cfg.trace_path, "w") as fh:
            fh.write("\n".join(proof.trace_lines()) + "\n")
    return EXIT_OK if proof.verified else EXIT_VERDICT


def cmd_expand(cfg: RunConfig, ns, out) -> int:
    L = _require_algebra(cfg)
    try:
        w = parse_word(L, cfg.word)
        target = L.basis(L.index_of(cfg.target))
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    try:
        v = expand(L, w, target)
    except SymbolicCapExceeded as exc:
        raise UsageError(str(exc)) from None
    lines = [f"Ad({w.format(L)})({cfg.target}) ="]
    lines += [f"  {L.labels[k]}: {v[k]}" for k in range(L.dim) if v[k]]
    out.write("\n".join(lines) + "\n")
    _write_text(cfg, lines)
    return EXIT_OK


def cmd_replay(cfg: RunConfig, ns, out) -> int:
    with open(ns.report) as fh:
        old = json.load(fh)
    if old.get("schema") != SCHEMA or "config" not in old:
        raise UsageError(f"{ns.report} is not a schema-{SCHEMA} report")
    run = RunConfig.from_dict(old["config"])
    run.json_path = None
    run.trace_path = None
    if run.command not in ("quadind", "product"):
        raise UsageError("replay supports quadind and product reports")
    new = certify_report(run)
    same = all(new.get(k) == old.get(k) for k in ("rank_found", "verdict", "prime", "samples"))
    out.write(f"replayed {ns.report}: rank_found {new['rank_found']} verdict {new['verdict']} "
              f"-> {'identical' if same else 'MISMATCH'}\n")
    return EXIT_OK if same else EXIT_VERDICT


COMMANDS = {"build": cmd_build, "quadind": cmd_certify, "product": cmd_certify,
            "prove": cmd_prove, "cqg": cmd_cqg, "expand": cmd_expand, "replay": cmd_replay}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except ValueError as exc:
        sys.stderr.write(f"lieqr: error: {exc}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2),
                        format="%(name)s: %(message)s")
    try:
        return COMMANDS[cfg.command](cfg, ns, out)
    except UsageError as exc:
        sys.stderr.write(f"lieqr {cfg.command}: error: {exc}\n")
        return EXIT_USAGE
    except Exception as exc:  # internal error
        log.debug("internal error", exc_info=True)
        sys.stderr.write(f"lieqr {cfg.command}: internal error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
