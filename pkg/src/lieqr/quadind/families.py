"""Function families: deterministic evaluators of value vectors at sample points."""
from __future__ import annotations

import random
from fractions import Fraction

from ..algebra import LieAlgebra
from ..flows import FlowWord, apply_word, sample_word


class FunctionFamily:
    dim: int
    tag: str

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def values(self, point, dom) -> list:
        raise NotImplementedError


class AdjointFamily(FunctionFamily):
    """g -> coefficients of Ad_g(H_1) in the Chevalley basis."""

    def __init__(self, L: LieAlgebra, word_length: int | None = None):
        self.L = L
        self.dim = L.dim
        self.word_length = word_length
        self.tag = f"adjoint:{L.datum.name}"

    def sample(self, rng):
        return sample_word(self.L, rng, self.word_length)

    def values(self, point: FlowWord, dom):
        return apply_word(self.L, point, self.L.basis(self.L.h(1)), dom)


def _rational(rng, top=50):
    return Fraction(rng.randint(-top, top), rng.randint(1, top))


class CircleFamily(FunctionFamily):
    """(1, cos, sin) at rational points of the unit circle; 1 = cos^2 + sin^2."""

    dim = 3
    tag = "custom:circle"

    def sample(self, rng):
        return _rational(rng)

    def values(self, r, dom):
        r = Fraction(r)
        d = 1 + r * r
        return [dom.convert(1), dom.convert((1 - r * r) / d), dom.convert(2 * r / d)]


class DuplicateFamily(FunctionFamily):
    """(x, x): the two coordinates coincide."""

    dim = 2
    tag = "custom:duplicate"

    def sample(self, rng):
        return _rational(rng)

    def values(self, x, dom):
        x = dom.convert(x)
        return [x, x]


class MonomialFamily(FunctionFamily):
    """(x_1, ..., x_k) on affine space; its products are the degree-2 monomials."""

    def __init__(self, k: int):
        self.dim = k
        self.tag = f"custom:monomials{k}"

    def sample(self, rng):
        return tuple(_rational(rng) for _ in range(self.dim))

    def values(self, point, dom):
        return [dom.convert(x) for x in point]


class LinearImage(FunctionFamily):
    """Value vectors multiplied by a fixed rational matrix (a change of basis when invertible)."""

    def __init__(self, base: FunctionFamily, matrix):
        self.base = base
        self.matrix = [[Fraction(x) for x in row] for row in matrix]
        self.dim = len(self.matrix)
        self.tag = f"linear-image:{base.tag}"

    def sample(self, rng):
        return self.base.sample(rng)

    def values(self, point, dom):
        v = self.base.values(point, dom)
        M = [[dom.convert(x) for x in row] for row in self.matrix]
        return [dom.reduce(sum(a * b for a, b in zip(row, v))) for row in M]


class ProductFamily(FunctionFamily):
    """Concatenated value vectors, each factor evaluated at its own sample point."""

    def __init__(self, families):
        self.families = list(families)
        self.dim = sum(f.dim for f in self.families)
        self.tag = "product:" + "x".join(f.tag for f in self.families)

    def sample(self, rng):
        return tuple(f.sample(rng) for f in self.families)

    def values(self, point, dom):
        out = []
        for f, p in zip(self.families, point):
            out.extend(f.values(p, dom))
        return out


def adjoint_family(L: LieAlgebra) -> AdjointFamily:
    return AdjointFamily(L)


def product_family(families) -> FunctionFamily:
    families = list(families)
    if not families:
        raise ValueError("need at least one family")
    if len(families) == 1:
        return families[0]
    return ProductFamily(families)


FIXTURES = {
    "circle": CircleFamily,
    "duplicate": DuplicateFamily,
}
