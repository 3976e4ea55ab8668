"""One-parameter adjoint flows and words of flows.

A nilpotent step acts by exp(t ad_X) (a finite sum).  A toral step along H_i
uses a multiplicative parameter u and scales E_alpha by u^<alpha,H_i> and
F_alpha by u^-<alpha,H_i>.  Words act right to left: the last step is applied
to the target first.
"""
from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import Element, LieAlgebra, bracket
from .exactlin import QQ, PolyDomain, PolyRing

SYMBOLIC_CAP = 12


class NotNilpotent(ValueError):
    pass


class SymbolicCapExceeded(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


Param = Fraction | str


@dataclass(frozen=True)
class FlowStep:
    generator: int
    kind: str  # "nilpotent" | "toral"
    param: Param

    @property
    def symbolic(self) -> bool:
        return isinstance(self.param, str)


@dataclass(frozen=True)
class FlowWord:
    steps: tuple[FlowStep, ...] = ()

    def __add__(self, other: "FlowWord") -> "FlowWord":
        return FlowWord(self.steps + other.steps)

    def __len__(self):
        return len(self.steps)

    def symbols(self) -> list[str]:
        seen = []
        for s in self.steps:
            if s.symbolic and s.param not in seen:
                seen.append(s.param)
        return seen

    def toral_symbols(self) -> set[str]:
        return {s.param for s in self.steps if s.symbolic and s.kind == "toral"}

    def inverse(self) -> "FlowWord":
        """Inverse for numeric parameters: reversed, t -> -t, u -> 1/u."""
        out = []
        for s in reversed(self.steps):
            if s.symbolic:
                raise ValueError("inverse() needs numeric parameters")
            p = -s.param if s.kind == "nilpotent" else 1 / s.param
            out.append(FlowStep(s.generator, s.kind, p))
        return FlowWord(tuple(out))

    def format(self, L: LieAlgebra) -> str:
        return ",".join(f"{L.labels[s.generator]}:{s.param}" for s in self.steps)


def step(L: LieAlgebra, generator: int | str, param) -> FlowStep:
    if isinstance(generator, str):
        generator = L.index_of(generator)
    kind = "toral" if L.kind(generator) == "H" else "nilpotent"
    if not isinstance(param, str):
        param = Fraction(param)
        if kind == "toral" and param == 0:
            raise ValueError("toral parameter must be nonzero")
    return FlowStep(generator, kind, param)


def word(L: LieAlgebra, *pairs) -> FlowWord:
    """word(L, ("E1", "s"), ("F1", "t")) -> FlowWord."""
    return FlowWord(tuple(step(L, g, p) for g, p in pairs))


_TOKEN = re.compile(r"^\s*([HEF](?:\d+|\[[\d,\s]+\]))\s*:\s*(\S+)\s*$")


def parse_word(L: LieAlgebra, text: str) -> FlowWord:
    """Parse ``"E1:s,F[1,1]:1/2,H2:u"``."""
    text = text.strip()
    if not text:
        return FlowWord()
    items = re.split(r",(?![^\[]*\])", text)
    pairs = []
    for item in items:
        m = _TOKEN.match(item)
        if not m:
            raise ValueError(f"cannot parse flow step {item!r}")
        label = m.group(1).replace(" ", "")
        raw = m.group(2)
        try:
            param = Fraction(raw)
        except ValueError:
            if not raw.isidentifier():
                raise ValueError(f"bad parameter {raw!r}") from None
            param = raw
        pairs.append((L.index_of(label), param))
    return word(L, *pairs)


# --- step maps ---------------------------------------------------------------

def _reduce(v, dom):
    if dom.modulus is None:
        return v
    p = dom.modulus
    return [x % p if x else 0 for x in v]


def _exp_ad(ad, v, t, dom):
    out = list(v)
    term = v
    k = 0
    while True:
        k += 1
        term = _reduce(ad(term), dom)
        if not any(term):
            break
        coef = dom.scale(dom.power(t, k), factorial(k))
        out = [o + coef * x if x else o for o, x in zip(out, term)]
    return _reduce(out, dom)


def _check_nilpotent(L: LieAlgebra, x: Element):
    kinds = {L.kind(k) for k, c in enumerate(x) if c}
    if "H" in kinds or len(kinds) > 1:
        raise NotNilpotent("flow generator must lie in the span of E's or of F's; "
                           "use toral_flow for Cartan directions")


def nilpotent_flow(L: LieAlgebra, x: Element | int, t, dom=None):
    """exp(t ad_x) as a function on elements."""
    dom = dom or QQ()
    if isinstance(x, int):
        if L.kind(x) == "H":
            raise NotNilpotent(f"{L.labels[x]} is a Cartan element; use toral_flow")
        ad = lambda v: L.ad_basis(x, v)
    else:
        _check_nilpotent(L, x)
        ad = lambda v: bracket(L, x, v)
    t = dom.convert(t)
    if not t:
        return lambda v: list(v)
    return lambda v: _exp_ad(ad, v, t, dom)


def toral_exponents(L: LieAlgebra, i: int) -> list[int]:
    return [L.roots.pairing(L.weight(k), i) for k in range(L.dim)]


def toral_flow(L: LieAlgebra, i: int, u, dom=None):
    """Adjoint action of the torus element u^{H_i}."""
    dom = dom or QQ()
    if not isinstance(u, str) and Fraction(u) == 0:
        raise ValueError("toral parameter must be nonzero")
    u = dom.convert(u)
    expo = toral_exponents(L, i)
    powers = {e: dom.power(u, e) for e in set(expo)}

    def apply(v):
        return _reduce([x * powers[e] if x and e else x for x, e in zip(v, expo)], dom)
    return apply


def word_domain(w: FlowWord):
    syms = w.symbols()
    if not syms:
        return QQ()
    if len(syms) > SYMBOLIC_CAP:
        raise SymbolicCapExceeded(f"{len(syms)} symbols exceed the cap of {SYMBOLIC_CAP}; "
                                  "use rational-sample mode")
    return PolyDomain(PolyRing(tuple(syms), frozenset(w.toral_symbols())))


def apply_word(L: LieAlgebra, w: FlowWord, target: Element, dom=None) -> Element:
    """(beta_1 ... beta_k)(target), the last step acting first."""
    if dom is None:
        dom = word_domain(w)
    elif isinstance(dom, PolyDomain) and len(dom.ring.names) > SYMBOLIC_CAP:
        raise SymbolicCapExceeded(f"{len(dom.ring.names)} symbols exceed the cap of {SYMBOLIC_CAP}")
    v = [dom.convert(x) if x else 0 for x in target]
    for s in reversed(w.steps):
        if s.kind == "toral":
            v = toral_flow(L, s.generator + 1, s.param, dom)(v)
        else:
            v = nilpotent_flow(L, s.generator, s.param, dom)(v)
    return v


def expand(L: LieAlgebra, w: FlowWord, target: Element | None = None) -> Element:
    if target is None:
        target = L.basis(L.h(1))
    return apply_word(L, w, target)


# --- Weyl conjugators --------------------------------------------------------

def reflection_word(L: LieAlgebra, j: int) -> FlowWord:
    """exp(E_j) exp(-F_j) exp(E_j)."""
    return word(L, (L.e(j), 1), (L.f(j), -1), (L.e(j), 1))


def _reflect(L: LieAlgebra, h: tuple[int, ...], j: int) -> tuple[int, ...]:
    # s_j(H) = H - alpha_j(H) H_j
    a = L.datum.matrix
    val = sum(c * a[k][j - 1] for k, c in enumerate(h))
    out = list(h)
    out[j - 1] -= val
    return tuple(out)


def weyl_conjugator(L: LieAlgebra, i: int, max_length: int | None = None) -> FlowWord:
    """A verified word g with Ad_g(H_1) = H_i, built from simple reflections."""
    if i not in L.datum.vertices:
        raise KeyError(f"vertex {i} not in {L.datum.name}")
    return coroot_conjugator(L, L.roots.simple(i), max_length)


def coroot_conjugator(L: LieAlgebra, root, max_length: int | None = None) -> FlowWord:
    """A verified word g with Ad_g(H_1) = H_root (the coroot sum_k c_k H_k)."""
    n = L.rank
    start = tuple(1 if k == 0 else 0 for k in range(n))
    goal = tuple(root)
    max_length = max_length or L.npos
    parent = {start: None}
    queue = deque([(start, 0)])
    while queue:
        h, d = queue.popleft()
        if h == goal:
            break
        if d >= max_length:
            continue
        for j in range(1, n + 1):
            nxt = _reflect(L, h, j)
            if nxt not in parent:
                parent[nxt] = (h, j)
                queue.append((nxt, d + 1))
    if goal not in parent:
        raise SearchExhausted(f"no reflection word of length <= {max_length} sends H1 to {goal}")
    applied = []  # reflections in the order they act
    h = goal
    while parent[h] is not None:
        h, j = parent[h]
        applied.append(j)
    applied.reverse()
    w = FlowWord()
    for j in applied:
        w = reflection_word(L, j) + w  # later reflections sit further left
    if apply_word(L, w, L.basis(L.h(1))) != cartan_element(L, goal):
        raise SearchExhausted(f"conjugator for {goal} failed verification")
    return w


def cartan_element(L: LieAlgebra, coeffs) -> Element:
    v = L.zero()
    for k, c in enumerate(coeffs):
        v[k] = c
    return v


# --- random words --------------------------------------------------------------

def random_param(rng: random.Random) -> Fraction:
    num = rng.choice([k for k in range(-9, 10) if k])
    return Fraction(num, rng.randint(1, 4))


def sample_word(L: LieAlgebra, rng: random.Random, length: int | None = None) -> FlowWord:
    """Seeded random word: kinds uniform over {E, F, toral}, small rational parameters."""
    length = 2 * L.dim if length is None else length
    steps = []
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 2:
            g = L.h(rng.randint(1, L.rank))
        else:
            root = L.roots.positive[rng.randrange(L.npos)]
            g = L.e(root) if kind == 0 else L.f(root)
        steps.append(step(L, g, random_param(rng)))
    return FlowWord(tuple(steps))
