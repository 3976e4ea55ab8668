"""Sparse multivariate (Laurent) polynomials with rational coefficients.

Terms are stored as ``{exponent tuple: Fraction}`` over a fixed, named
variable list.  Negative exponents are only allowed for variables the ring
declares as Laurent (the multiplicative torus parameters).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational


class RingMismatch(TypeError):
    pass


class UnknownVariable(KeyError):
    pass


@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]
    laurent: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"repeated variable in {self.names}")
        extra = set(self.laurent) - set(self.names)
        if extra:
            raise UnknownVariable(f"Laurent variables not in ring: {sorted(extra)}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "MultiPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MultiPoly(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["MultiPoly"]:
        return [self.var(n) for n in self.names]

    def monomial(self, exps: dict[str, int] | tuple[int, ...]) -> tuple[int, ...]:
        """Normalise a monomial given by name->exponent or by a full tuple."""
        if isinstance(exps, dict):
            e = [0] * self.nvars
            for name, k in exps.items():
                e[self.index(name)] = k
            return tuple(e)
        if len(exps) != self.nvars:
            raise UnknownVariable(f"monomial {exps} does not match ring {self.names}")
        return tuple(exps)

    def format_monomial(self, e: tuple[int, ...]) -> str:
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts) or "1"


def _grlex_key(e: tuple[int, ...]):
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}
        for e in self.terms:
            for name, k in zip(ring.names, e):
                if k < 0 and name not in ring.laurent:
                    raise ValueError(f"negative power of non-Laurent variable {name}")

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already free of zeros and valid
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return MultiPoly._raw(self.ring, {})
            c0 = Fraction(other)
            return MultiPoly._raw(self.ring, {e: c * c0 for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return MultiPoly._raw(self.ring, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            return MultiPoly(self.ring, {tuple(-a * -k for a in e): Fraction(1) / c ** -k})
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial) -> Fraction:
        return self.terms.get(self.ring.monomial(monomial), Fraction(0))

    def monomials(self) -> list[tuple[int, ...]]:
        """Exponent vectors in graded-lexicographic order (descending)."""
        return sorted(self.terms, key=_grlex_key, reverse=True)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, values: dict[str, object]):
        total = 0
        for e, c in self.terms.items():
            term = c
            for name, k in zip(self.ring.names, e):
                if k:
                    term = term * Fraction(values[name]) ** k
            total += term
        return total

    def truncate(self, max_exps: dict[str, int]) -> "MultiPoly":
        """Drop terms whose degree in a named variable exceeds the given cap."""
        idx = {self.ring.index(n): k for n, k in max_exps.items()}
        return MultiPoly._raw(self.ring, {
            e: c for e, c in self.terms.items() if all(e[i] <= k for i, k in idx.items())
        })

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for e in self.monomials():
            c = self.terms[e]
            mono = self.ring.format_monomial(e)
            if mono == "1":
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")


class PolyDomain:
    """Scalar domain adapter so flow code can run over a polynomial ring."""

    name = "symbolic"
    modulus = None

    def __init__(self, ring: PolyRing):
        self.ring = ring

    def convert(self, x):
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, str):
            return self.ring.var(x)
        return self.ring.const(x) if x else 0

    def reduce(self, x):
        return x

    def scale(self, x, k: int):
        return x * Fraction(1, k)

    def power(self, x, e: int):
        return x ** e

    def __eq__(self, other):
        return isinstance(other, PolyDomain) and other.ring == self.ring

    def __hash__(self):
        return hash(self.ring)
