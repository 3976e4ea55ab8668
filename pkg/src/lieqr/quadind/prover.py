"""Coefficient extraction: the symbolic route to quadratic independence.

Unknowns are c_(X,Y) = c_(Y,X) over basis pairs.  For a flow word g with
symbolic parameters, v = Ad_g(H_1) has polynomial coordinates, and

    sum_{X,Y} c_(X,Y) v_X v_Y = 0

must hold identically, so every monomial's coefficient is a linear constraint
on the unknowns.  The schedule of words follows the induction over Dynkin
paths: single flows, (E_i, F_i) pairs, mixed pairs, Weyl-conjugated variants,
Gamma_2 triples and the ladder words along paths from vertex 1.  The nullspace
of all constraints is computed exactly.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction


from ..algebra import LieAlgebra
from ..cartan import gamma, path
from ..exactlin import primitive_integer_vector, rank_exact
from ..exactlin.linalg import _echelon_mod, as_modular_array
from ..exactlin import nullspace_exact
from ..flows import (
    SYMBOLIC_CAP,
    FlowWord,
    SymbolicCapExceeded,
    apply_word,
    cartan_element,
    coroot_conjugator,
    word,
)
from .certify import pair_index

PROVER_PRIME = 2147483629  # < 2^31 so the int64 kernel applies
MAX_RANK = 4


@dataclass
class Constraint:
    word: str
    steps: str
    monomial: str
    terms: tuple[tuple[int, int], ...]  # (pair index, integer coefficient)
    identity: str


@dataclass
class ProverReport:
    algebra: str
    unknowns: int
    constraint_count: int
    unique_constraints: int
    words: int
    rank: int
    nullspace_dim: int
    schedule_nullspace_dim: int
    extension_words: int
    named: dict[str, dict] = field(default_factory=dict)
    trace: list[Constraint] = field(default_factory=list)
    nullspace: list[list[int]] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        return self.nullspace_dim == 0

    def summary(self) -> dict:
        return {
            "algebra": self.algebra,
            "unknowns": self.unknowns,
            "constraint_count": self.constraint_count,
            "unique_constraints": self.unique_constraints,
            "words": self.words,
            "rank": self.rank,
            "nullspace_dim": self.nullspace_dim,
            "schedule_nullspace_dim": self.schedule_nullspace_dim,
            "extension_words": self.extension_words,
            "named": self.named,
        }

    def write_trace(self, fh):
        for c in self.trace:
            fh.write(json.dumps({"word": c.word, "steps": c.steps, "monomial": c.monomial,
                                 "identity": c.identity}) + "\n")


def pair_label(L: LieAlgebra, i: int, j: int) -> str:
    return f"c({L.labels[i]},{L.labels[j]})"


def format_identity(L: LieAlgebra, pairs, terms) -> str:
    """Render sum coef*c(pair) = 0 as an identity; two-term constraints are solved
    for the earlier pair: ``c(H2,H2) = 2*c(E[0,1],F[0,1])``."""
    if len(terms) == 1:
        (k, _), = terms
        return f"{pair_label(L, *pairs[k])} = 0"
    if len(terms) == 2:
        (k1, a), (k2, b) = sorted(terms)
        coef = Fraction(-b, a)
        return f"{pair_label(L, *pairs[k1])} = {coef}*{pair_label(L, *pairs[k2])}"
    parts = [f"{c}*{pair_label(L, *pairs[k])}" for k, c in sorted(terms)]
    return " + ".join(parts).replace("+ -", "- ") + " = 0"


def _coroot(L: LieAlgebra, target) -> tuple[int, ...]:
    """A vertex i names H_i; a tuple names the coroot sum_k c_k H_k."""
    if isinstance(target, int):
        return L.roots.simple(target)
    return tuple(target)


def constraints_for(L: LieAlgebra, w: FlowWord, target=1):
    """{monomial exponent tuple: {pair index: coefficient}} and the ring."""
    v = apply_word(L, w, cartan_element(L, _coroot(L, target)))
    N = L.dim
    ring = None
    for x in v:
        if hasattr(x, "ring"):
            ring = x.ring
            break
    rows: dict[tuple, dict[int, Fraction]] = {}
    nz = [k for k in range(N) if v[k]]
    pidx = {p: k for k, p in enumerate(pair_index(N))}
    for jj, j in enumerate(nz):
        for i in nz[: jj + 1]:
            weight = 1 if i == j else 2
            prod = v[i] * v[j]
            terms = prod.terms if hasattr(prod, "terms") else {(): Fraction(prod)}
            k = pidx[(i, j)]
            for e, c in terms.items():
                row = rows.setdefault(e, {})
                row[k] = row.get(k, 0) + weight * c
    return rows, ring


def _normalise(row: dict[int, Fraction]) -> tuple[tuple[int, int], ...]:
    keys = sorted(k for k, c in row.items() if c)
    if not keys:
        return ()
    ints = primitive_integer_vector([row[k] for k in keys])
    return tuple(zip(keys, ints))


# --- schedule ------------------------------------------------------------------

def _ladder(L, verts, s_name, t_name):
    """beta_{s_K}(E_{j_K}) beta_{t_K}(F_{j_K}) ... beta_{s_2}(E_{j_2}) beta_{t_2}(F_{j_2})
    for a path 1 = j_1, j_2, ..., j_K (the j_2 pair acts first)."""
    pairs = []
    for q in range(len(verts) - 1, 0, -1):
        j = verts[q]
        pairs += [(L.e(j), f"{s_name}{q + 1}"), (L.f(j), f"{t_name}{q + 1}")]
    return word(L, *pairs)


def build_schedule(L: LieAlgebra, depth_limit: int | None = None):
    """List of (label, word, target vertex) following the induction over Dynkin paths."""
    d = L.datum
    n = d.rank
    depth = n - 1 if depth_limit is None else depth_limit
    g1 = sorted(gamma(d, 1, 1))
    sched = []

    def add(label, w, target=1):
        sched.append((label, w, target))

    base = []
    for i in g1:
        base.append((f"e({i})", word(L, (L.e(i), "t"))))
        base.append((f"f({i})", word(L, (L.f(i), "t"))))
        base.append((f"h({i})", word(L, (L.e(i), "s"), (L.f(i), "t"))))
    for r in L.roots.positive:
        if sum(r) > 1:
            lab = L.labels[L.e(r)][1:]
            base.append((f"ee{lab}", word(L, (L.e(r), "t"))))
            base.append((f"ff{lab}", word(L, (L.f(r), "t"))))
    for lab, w in base:
        add(lab, w)
    # the same words acting on H_i = Ad_{g_i}(H_1)
    for i in d.vertices:
        if i != 1:
            for lab, w in base:
                add(f"{lab}@H{i}", w, i)

    for i in g1:
        for j in g1:
            if i != j:
                add(f"ef({i},{j})", word(L, (L.e(i), "s"), (L.f(j), "t")))
                add(f"ee({i},{j})", word(L, (L.e(i), "s"), (L.e(j), "t")))
                add(f"ff({i},{j})", word(L, (L.f(i), "s"), (L.f(j), "t")))
                add(f"fe({i},{j})", word(L, (L.f(i), "s"), (L.e(j), "t")))

    # iterated-bracket pairs: products of simple flows spelling X and Y
    bw = L.roots.bracket_words
    for r1 in L.roots.positive:
        for r2 in L.roots.positive:
            if sum(r1) + sum(r2) <= 2 or len(bw[r1]) + len(bw[r2]) > SYMBOLIC_CAP:
                continue
            e_part = [(L.e(i), f"s{k + 1}") for k, i in enumerate(bw[r1])]
            f_part = [(L.f(j), f"t{k + 1}") for k, j in enumerate(bw[r2])]
            tag = f"{L.labels[L.e(r1)][1:]},{L.labels[L.e(r2)][1:]}"
            add(f"bracket-ef({tag})", word(L, *(e_part + f_part)))
            add(f"bracket-fe({tag})", word(L, *([(L.f(i), p) for (_, p), i in zip(e_part, bw[r1])] +
                                                 [(L.e(j), p) for (_, p), j in zip(f_part, bw[r2])])))

    # pairs of arbitrary root vectors on every H_i
    vecs = [L.e(r) for r in L.roots.positive] + [L.f(r) for r in L.roots.positive]
    for i in d.vertices:
        for x in vecs:
            for y in vecs:
                if x != y:
                    add(f"pair({L.labels[x]},{L.labels[y]})@H{i}", word(L, (x, "w2"), (y, "w")), i)

    # Gamma_2 triples
    for i in d.vertices:
        if d.a(1, i) != 0:
            continue
        for j in g1:
            if j != 1 and d.a(j, i) != 0:
                add(f"triple({i},{j})", word(L, (L.e(i), "w"), (L.e(j), "s"), (L.f(j), "t")))
                add(f"triple-f({i},{j})", word(L, (L.f(i), "w"), (L.f(j), "s"), (L.e(j), "t")))

    # ladder words along Dynkin paths
    far = [j for j in d.vertices if 2 <= d.distance(1, j) <= depth]
    for j in far:
        pj = path(d, 1, j)
        lad = _ladder(L, pj[:-1], "s", "t")
        add(f"ladder-e({j})", word(L, (L.e(j), "w")) + lad)
        add(f"ladder-f({j})", word(L, (L.f(j), "w")) + lad)
        add(f"ladder-ef({j})", word(L, (L.e(j), "w"), (L.f(j), "w2")) + lad)
        for i in d.vertices:
            if d.distance(1, i) >= d.distance(1, j):
                continue
            pi = path(d, 1, i)
            lad_i = _ladder(L, pi[:-1], "sp", "tp")
            for xk, X in (("e", L.e), ("f", L.f)):
                for yk, Y in (("e", L.e), ("f", L.f)):
                    w = word(L, (X(i), "w2")) + lad_i + word(L, (Y(j), "w")) + lad
                    if len(w.symbols()) <= SYMBOLIC_CAP:
                        add(f"double-ladder-{xk}{yk}({i},{j})", w)
    return sched


def _support_pairs(L: LieAlgebra, pairs, nullspace) -> list[tuple[int, int]]:
    out = []
    for v in nullspace:
        for k, c in enumerate(v):
            i, j = pairs[k]
            if c and i != j and L.kind(i) != "H" and L.kind(j) != "H" and (i, j) not in out:
                out.append((i, j))
    return out


def _targeted_words(L: LieAlgebra, support):
    """Pair words for surviving unknowns, acting on every coroot H_gamma."""
    out = []
    for i, j in support:
        for r in L.roots.positive:
            tag = L.labels[L.e(r)][1:]
            out.append((f"pair({L.labels[i]},{L.labels[j]})@H{tag}", word(L, (i, "w2"), (j, "w")), r))
            out.append((f"pair({L.labels[j]},{L.labels[i]})@H{tag}", word(L, (j, "w2"), (i, "w")), r))
    return out


def _random_words(L: LieAlgebra, rng: random.Random, count: int):
    """Two symbolic root-vector flows behind three numeric ones, on a random coroot."""
    out = []
    vecs = [L.e(r) for r in L.roots.positive] + [L.f(r) for r in L.roots.positive]
    for k in range(count):
        pairs = [(rng.choice(vecs), p) for p in ("x", "y")]
        pairs += [(rng.choice(vecs), Fraction(rng.randint(1, 5), rng.randint(1, 3))) for _ in range(3)]
        out.append((f"random({k})", word(L, *pairs), rng.choice(L.roots.positive)))
    return out


# --- driver --------------------------------------------------------------------

class _Collector:
    def __init__(self, L: LieAlgebra):
        self.L = L
        self.pairs = pair_index(L.dim)
        self.unique: dict[tuple, Constraint] = {}
        self.total = 0
        self.words = 0
        self.per_word: dict[str, dict[str, tuple]] = {}
        self.conj: dict[tuple, FlowWord] = {}

    def add(self, label, w, target):
        L = self.L
        h = _coroot(L, target)
        if h not in self.conj:
            self.conj[h] = coroot_conjugator(L, h)
        full = w + self.conj[h]
        # the conjugator only has numeric parameters, so Ad_{w g_i}(H_1) = Ad_w(H_i)
        rows, ring = constraints_for(L, w, target)
        self.words += 1
        mine = {}
        for e, row in rows.items():
            terms = _normalise(row)
            if not terms:
                continue
            self.total += 1
            mono = ring.format_monomial(e) if ring is not None else "1"
            mine[mono] = terms
            if terms not in self.unique:
                self.unique[terms] = Constraint(label, full.format(L), mono, terms,
                                                format_identity(L, self.pairs, terms))
        self.per_word[label] = mine

    def rank(self) -> tuple[int, list[tuple]]:
        keys = list(self.unique)
        ncols = len(self.pairs)
        if not keys:
            return 0, keys
        p = PROVER_PRIME
        M = [[0] * ncols for _ in keys]
        for r, terms in enumerate(keys):
            for k, c in terms:
                M[r][k] = c % p
        A = as_modular_array(M, p)
        r, _, order = _echelon_mod(A, p)
        chosen = sorted(order[:r])
        # exact confirmation on the selected rows (rank_Q >= rank_p always)
        exact = rank_exact([_dense(keys[k], ncols) for k in chosen])
        if exact < ncols:
            exact = rank_exact([_dense(t, ncols) for t in keys])
        return exact, keys


def _dense(terms, ncols):
    row = [0] * ncols
    for k, c in terms:
        row[k] = c
    return row


def coefficient_prover(L: LieAlgebra, depth_limit: int | None = None, extra_rounds: int = 4,
                       seed: int = 1, max_rank: int = MAX_RANK) -> ProverReport:
    if L.rank > max_rank:
        raise SymbolicCapExceeded(f"coefficient prover is limited to rank <= {max_rank}")
    col = _Collector(L)
    for label, w, target in build_schedule(L, depth_limit):
        col.add(label, w, target)
    rank, keys = col.rank()
    ncols = len(col.pairs)
    schedule_null = ncols - rank
    ext = 0
    if rank < ncols and extra_rounds > 0:
        null = nullspace_exact([_dense(t, ncols) for t in keys], ncols)
        for label, w, target in _targeted_words(L, _support_pairs(L, col.pairs, null)):
            col.add(label, w, target)
            ext += 1
        rank, keys = col.rank()
    rng = random.Random(f"lieqr-prover:{seed}")
    rounds = 1
    while rank < ncols and rounds < extra_rounds:
        for label, w, target in _random_words(L, rng, 8):
            col.add(label, w, target)
            ext += 1
        rank, keys = col.rank()
        rounds += 1

    report = ProverReport(
        algebra=L.datum.name, unknowns=ncols, constraint_count=col.total,
        unique_constraints=len(col.unique), words=col.words, rank=rank,
        nullspace_dim=ncols - rank, schedule_nullspace_dim=schedule_null,
        extension_words=ext, trace=list(col.unique.values()),
    )
    if report.nullspace_dim:
        report.nullspace = [primitive_integer_vector(v)
                            for v in nullspace_exact([_dense(t, ncols) for t in keys], ncols)]
    report.named = _named_identities(L, col)
    return report


def _named_identities(L: LieAlgebra, col: _Collector) -> dict[str, dict]:
    """Locate the (E_i, F_i)-pair identities among the extracted constraints."""
    named = {}
    for i in sorted(gamma(L.datum, 1, 1)):
        mine = col.per_word.get(f"h({i})", {})
        for mono, name in (("s^2*t^2", "hh-vs-ef"), ("s*t", "h1h-vs-ef")):
            if mono in mine:
                named[f"{name}({i})"] = {
                    "word": f"h({i})", "monomial": mono,
                    "identity": format_identity(L, col.pairs, mine[mono]),
                }
    return named
