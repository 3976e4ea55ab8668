"""Positive roots by closure, and a deterministic sign convention.

Roots are integer coefficient tuples over the simple roots.  They are ordered
by height, then lexicographically with larger leading coefficients first, so
the simple roots come out as alpha_1, ..., alpha_n.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cartan import CartanDatum

Root = tuple[int, ...]


class SignTableError(RuntimeError):
    """The computed structure-constant signs are internally inconsistent."""


def height(root: Root) -> int:
    return sum(root)


def root_key(root: Root):
    return (height(root), tuple(-c for c in root))


def neg(root: Root) -> Root:
    return tuple(-c for c in root)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class RootSystem:
    datum: CartanDatum
    positive: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return self.datum.rank

    @cached_property
    def index(self) -> dict[Root, int]:
        return {r: k for k, r in enumerate(self.positive)}

    @cached_property
    def all_roots(self) -> frozenset[Root]:
        return frozenset(self.positive) | frozenset(neg(r) for r in self.positive)

    def simple(self, i: int) -> Root:
        e = [0] * self.rank
        e[i - 1] = 1
        return tuple(e)

    def pairing(self, root: Root, i: int) -> int:
        """<root, H_i> = sum_j c_j a_ji."""
        a = self.datum.matrix
        return sum(c * a[j][i - 1] for j, c in enumerate(root))

    def inner(self, r: Root, s: Root) -> int:
        a = self.datum.matrix
        return sum(x * a[i][j] * y for i, x in enumerate(r) for j, y in enumerate(s))

    def is_root(self, r: Root) -> bool:
        return r in self.all_roots

    def dimension(self) -> int:
        return 2 * len(self.positive) + self.rank

    @cached_property
    def bracket_words(self) -> dict[Root, tuple[int, ...]]:
        """For each positive root, simple indices (i_1, ..., i_k) such that
        ad_{E_i1} ... ad_{E_i(k-1)} (E_ik) is a nonzero multiple of E_root."""
        words = {}
        for r in self.positive:
            if height(r) == 1:
                words[r] = (r.index(1) + 1,)
                continue
            for i in range(1, self.rank + 1):
                rest = add(r, neg(self.simple(i)))
                if rest in self.index:
                    words[r] = (i,) + words[rest]
                    break
        return words


def close_roots(datum: CartanDatum) -> RootSystem:
    n = datum.rank
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for r in frontier:
            for i in range(n):
                cand = add(r, simple[i])
                if cand in roots:
                    continue
                down = add(r, neg(simple[i]))
                pair = sum(c * datum.matrix[j][i] for j, c in enumerate(r))
                if pair == -1 and down not in roots:
                    roots.add(cand)
                    new.append(cand)
        frontier = new
    return RootSystem(datum, tuple(sorted(roots, key=root_key)))


def _cocycle(rs: RootSystem, a: Root, b: Root) -> int:
    """Bimultiplicative sign with eps(alpha, alpha) = -1 on roots."""
    n = rs.rank
    m = rs.datum.matrix
    exponent = 0
    for i in range(n):
        if not a[i]:
            continue
        for j in range(n):
            if not b[j]:
                continue
            if i == j or (i < j and m[i][j]):
                exponent += a[i] * b[j]
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class SignTable:
    """Structure-constant signs N(alpha, beta) for roots alpha, beta (positive or
    negative) with alpha + beta a root, in the basis E_alpha (alpha > 0) and
    F_alpha (alpha > 0) where F_alpha plays the role of the -alpha root vector."""

    roots: RootSystem
    signs: dict[tuple[Root, Root], int]
    extraspecial: dict[Root, tuple[Root, Root]]

    def __call__(self, a: Root, b: Root) -> int:
        return self.signs[(a, b)]

    def positive_pairs(self) -> dict[tuple[Root, Root], int]:
        idx = self.roots.index
        return {k: v for k, v in self.signs.items() if k[0] in idx and k[1] in idx}


def extraspecial_signs(rs: RootSystem) -> SignTable:
    """Signs fixed by making every extraspecial pair carry +1.

    Start from a bimultiplicative cocycle (which satisfies Jacobi by
    construction) and rescale each E_gamma, in height order, so that its
    extraspecial pair has sign +1.  All other signs follow.
    """
    pos = rs.positive
    scale: dict[Root, int] = {}
    extraspecial: dict[Root, tuple[Root, Root]] = {}
    for g in pos:
        if height(g) == 1:
            scale[g] = 1
            continue
        a = next(r for r in pos if add(g, neg(r)) in rs.index)
        b = add(g, neg(a))
        extraspecial[g] = (a, b)
        scale[g] = _cocycle(rs, a, b) * scale[a] * scale[b]

    def sigma(r: Root) -> int:
        # x_r = s_r e_r for r > 0, x_{-r} = -s_r e_{-r}; then [x_r, x_{-r}] = H_r
        return scale[r] if r in rs.index else -scale[neg(r)]

    signs = {}
    for a in rs.all_roots:
        for b in rs.all_roots:
            c = add(a, b)
            if c in rs.all_roots:
                signs[(a, b)] = _cocycle(rs, a, b) * sigma(a) * sigma(b) * sigma(c)

    for (a, b), s in signs.items():
        if signs.get((b, a)) != -s:
            raise SignTableError(f"antisymmetry fails for {a}, {b}")
    for g, (a, b) in extraspecial.items():
        if signs[(a, b)] != 1:
            raise SignTableError(f"extraspecial pair of {g} has sign {signs[(a, b)]}")
    return SignTable(rs, signs, extraspecial)
