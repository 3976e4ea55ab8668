"""Formal relations among matrix coefficients Q_ij in the free algebra.

Words are tuples of index pairs; the empty word is the unit.  Nothing here
assumes commutativity: products concatenate.  The deduction is

    r2(i,j,k,l) - r6(i,j,k,l) = 2 [Q_ik, Q_jl]

where r6 is the antipode image of r2 with the index interchange i<->k, j<->l.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

Gen = tuple[int, int]
Word = tuple[Gen, ...]


class NCPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                out[tuple(w)] = out.get(tuple(w), 0) + c
        self.terms = {w: c for w, c in out.items() if c}

    @classmethod
    def gen(cls, i: int, j: int) -> "NCPoly":
        return cls({((i, j),): 1})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({(): 1})

    def _combine(self, other, sign):
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + sign * c
        return NCPoly(t)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return NCPoly({w: c * Fraction(other) for w, c in self.terms.items()})
        t: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                t[w] = t.get(w, 0) + c1 * c2
        return NCPoly(t)

    def __rmul__(self, k):
        return self * k

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def words(self) -> list[Word]:
        return sorted(self.terms, key=lambda w: (len(w), w))

    def monic(self) -> "NCPoly":
        """Scaled so the leading word has coefficient 1."""
        if not self:
            return self
        return self * (1 / self.terms[self.words()[0]])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in self.words():
            c = self.terms[w]
            mono = "*".join(f"Q{i}{j}" if i < 10 and j < 10 else f"Q[{i},{j}]" for i, j in w) or "1"
            coef = "" if abs(c) == 1 and w else f"{abs(c)}*" if w else f"{abs(c)}"
            parts.append(("- " if c < 0 else "+ ") + coef + (mono if w else ""))
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def Q(i: int, j: int) -> NCPoly:
    return NCPoly.gen(i, j)


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b - b * a


def antipode(p: NCPoly) -> NCPoly:
    """kappa(Q_ij) = Q_ji extended anti-multiplicatively."""
    return NCPoly({tuple((j, i) for i, j in reversed(w)): c for w, c in p.terms.items()})


def transpose(p: NCPoly) -> NCPoly:
    """Q_ij -> Q_ji without reversing words."""
    return NCPoly({tuple((j, i) for i, j in w): c for w, c in p.terms.items()})


def r1(i, j, k) -> NCPoly:
    return Q(i, j) * Q(k, j) - Q(k, j) * Q(i, j)


def r2(i, j, k, l) -> NCPoly:
    return Q(i, k) * Q(j, l) + Q(i, l) * Q(j, k) - Q(j, k) * Q(i, l) - Q(j, l) * Q(i, k)


def r6(i, j, k, l) -> NCPoly:
    """Antipode of r2 followed by i<->k, j<->l, i.e. kappa(r2(k,l,i,j))."""
    return antipode(r2(k, l, i, j))


def _check_n(n: int):
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")


def dedup(polys) -> list[NCPoly]:
    """First occurrence of each relation up to a nonzero scalar; zeros dropped."""
    seen = set()
    out = []
    for p in polys:
        if not p:
            continue
        key = p.monic()
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def relation_set(n: int) -> list[NCPoly]:
    """All r1 and r2 instances over 1..n, deduplicated (r1 family first)."""
    _check_n(n)
    idx = range(1, n + 1)
    rels = [r1(i, j, k) for i, j, k in itertools.product(idx, repeat=3)]
    rels += [r2(i, j, k, l) for i, j, k, l in itertools.product(idx, repeat=4)]
    return dedup(rels)


PREAMBLE = (
    "assumption: the fundamental representation is realized by a finite family of self-adjoint "
    "coefficients on which an invariant state is faithful, so Q may be taken orthogonal",
    "assumption: Q_ij* = Q_ij and Q is unitary, hence kappa(Q_ij) = Q_ji",
    "assumption: kappa is linear and anti-multiplicative",
    "assumption: the r1 family Q_ij Q_kj = Q_kj Q_ij and the r2 family hold for all indices",
)


@dataclass
class TupleResult:
    tup: tuple[int, int, int, int]
    ok: bool
    combination: str
    conclusion: str
    residual: NCPoly


@dataclass
class CommutativityProof:
    n: int
    preamble: tuple[str, ...]
    tuples: list[TupleResult] = field(default_factory=list)
    kappa_r1: list[tuple[tuple[int, int, int], NCPoly, bool]] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return all(t.ok for t in self.tuples) and all(ok for *_, ok in self.kappa_r1)

    @property
    def counterexamples(self) -> list[TupleResult]:
        return [t for t in self.tuples if not t.ok]

    @property
    def verdict(self) -> str:
        return "commutative" if self.verified else "counterexample"

    def trace_lines(self) -> list[str]:
        out = []
        for t in self.tuples:
            i, j, k, l = t.tup
            status = "" if t.ok else "  # FAILED"
            out.append(f"rel({i},{j},{k},{l}): r2 - r6 = 2*[Q_{i}{k},Q_{j}{l}]{status}")
        return out

    def lines(self) -> list[str]:
        out = list(self.preamble)
        for t in self.tuples:
            out.append(f"{'ok  ' if t.ok else 'FAIL'} {t.tup}: {t.combination} => {t.conclusion}")
        for tup, img, ok in self.kappa_r1:
            out.append(f"{'ok  ' if ok else 'FAIL'} kappa(r1{tup}) = {img}")
        out.append(f"verdict: {self.verdict} ({len(self.tuples)} tuples)")
        return out


def derive_commutativity(n: int) -> CommutativityProof:
    _check_n(n)
    proof = CommutativityProof(n=n, preamble=PREAMBLE)
    idx = range(1, n + 1)
    for i, j, k, l in itertools.product(idx, repeat=4):
        lhs = r2(i, j, k, l) - r6(i, j, k, l)
        comm = commutator(Q(i, k), Q(j, l))
        residual = lhs - 2 * comm
        proof.tuples.append(TupleResult(
            tup=(i, j, k, l), ok=not residual,
            combination=f"r2{(i, j, k, l)} - r6{(i, j, k, l)} = 2*[Q{i}{k},Q{j}{l}]",
            conclusion=f"[Q{i}{k},Q{j}{l}] = 0", residual=residual,
        ))
    # the antipode image of r1 is row commutation; its transpose is -r1 again
    for i, j, k in itertools.product(idx, repeat=3):
        img = antipode(r1(i, j, k))
        ok = img == commutator(Q(j, k), Q(j, i)) and transpose(img) == -r1(i, j, k)
        proof.kappa_r1.append(((i, j, k), img, ok))
    return proof
