"""Chevalley-basis realisation of a simply-laced Lie algebra.

Basis order: H_1..H_n, then E_alpha and F_alpha for positive alpha in root
order.  Elements are plain lists of scalars (ints, Fractions, MultiPolys or
residues mod p) indexed by that order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .cartan import CartanDatum, cartan_matrix
from .rootsystem import Root, RootSystem, SignTable, add, close_roots, extraspecial_signs, neg

Element = list


@dataclass(frozen=True)
class LieAlgebra:
    roots: RootSystem
    signs: SignTable
    labels: tuple[str, ...]
    table: tuple[tuple[tuple[tuple[int, int], ...], ...], ...]

    @property
    def datum(self) -> CartanDatum:
        return self.roots.datum

    @property
    def rank(self) -> int:
        return self.roots.rank

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def npos(self) -> int:
        return len(self.roots.positive)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {lab: k for k, lab in enumerate(self.labels)}

    # basis indices
    def h(self, i: int) -> int:
        return i - 1

    def e(self, root: Root | int) -> int:
        if isinstance(root, int):
            root = self.roots.simple(root)
        return self.rank + self.roots.index[tuple(root)]

    def f(self, root: Root | int) -> int:
        if isinstance(root, int):
            root = self.roots.simple(root)
        return self.rank + self.npos + self.roots.index[tuple(root)]

    def root_vector(self, root: Root) -> int:
        """Index of the root vector for a signed root (F for negative roots)."""
        return self.e(root) if root in self.roots.index else self.f(neg(root))

    def kind(self, k: int) -> str:
        if k < self.rank:
            return "H"
        return "E" if k < self.rank + self.npos else "F"

    def weight(self, k: int) -> Root:
        """Root of a basis element (zero for the Cartan part)."""
        if k < self.rank:
            return (0,) * self.rank
        r = self.roots.positive[(k - self.rank) % self.npos]
        return r if k < self.rank + self.npos else neg(r)

    def index_of(self, label: str) -> int:
        """Basis index from a label: H<i>, E[..], F[..], or simple shorthand E<i>/F<i>."""
        if label in self.label_index:
            return self.label_index[label]
        kind, rest = label[0], label[1:]
        if kind in "EF" and rest.isdigit():
            i = int(rest)
            if 1 <= i <= self.rank:
                return self.e(i) if kind == "E" else self.f(i)
        raise KeyError(f"unknown basis label {label!r}")

    # elements
    def zero(self) -> Element:
        return [0] * self.dim

    def basis(self, k: int, one=1) -> Element:
        v = self.zero()
        v[k] = one
        return v

    def element(self, coeffs: dict[str, object]) -> Element:
        v = self.zero()
        for lab, c in coeffs.items():
            v[self.index_of(lab)] += c
        return v

    def ad_basis(self, g: int, v: Element) -> Element:
        """[b_g, v]."""
        out = [0] * self.dim
        row = self.table[g]
        for b, vb in enumerate(v):
            if vb:
                for k, c in row[b]:
                    out[k] = out[k] + c * vb
        return out


def _basis_bracket(rs: RootSystem, signs: SignTable, a: int, b: int, weight):
    n = rs.rank
    if a < n and b < n:
        return ()
    wa, wb = weight(a), weight(b)
    if a < n:
        return ((b, rs.pairing(wb, a + 1)),) if rs.pairing(wb, a + 1) else ()
    if b < n:
        return ((a, -rs.pairing(wa, b + 1)),) if rs.pairing(wa, b + 1) else ()
    s = add(wa, wb)
    if not any(s):
        return tuple((i, c) for i, c in enumerate(wa) if c)
    if s in rs.all_roots:
        k = n + rs.index[s] if s in rs.index else n + len(rs.positive) + rs.index[neg(s)]
        return ((k, signs(wa, wb)),)
    return ()


def label_of(kind: str, root: Root) -> str:
    return f"{kind}[{','.join(str(abs(c)) for c in root)}]"


def chevalley_algebra(rs: RootSystem, signs: SignTable | None = None) -> LieAlgebra:
    if signs is None:
        signs = extraspecial_signs(rs)
    n = rs.rank
    labels = [f"H{i}" for i in range(1, n + 1)]
    labels += [label_of("E", r) for r in rs.positive]
    labels += [label_of("F", r) for r in rs.positive]
    npos = len(rs.positive)

    def weight(k):
        if k < n:
            return (0,) * n
        r = rs.positive[(k - n) % npos]
        return r if k < n + npos else neg(r)

    N = len(labels)
    table = tuple(
        tuple(_basis_bracket(rs, signs, a, b, weight) for b in range(N)) for a in range(N)
    )
    return LieAlgebra(rs, signs, tuple(labels), table)


def build_algebra(series: str, rank: int) -> LieAlgebra:
    return chevalley_algebra(close_roots(cartan_matrix(series, rank)))


def bracket(L: LieAlgebra, x: Element, y: Element) -> Element:
    if len(x) != L.dim or len(y) != L.dim:
        raise ValueError("element length does not match the algebra dimension")
    out = [0] * L.dim
    for a, xa in enumerate(x):
        if not xa:
            continue
        row = L.table[a]
        for b, yb in enumerate(y):
            if yb:
                for k, c in row[b]:
                    out[k] = out[k] + c * xa * yb
    return out


def ad_matrix(L: LieAlgebra, x: Element) -> list[list]:
    """Matrix of ad_x: column j is [x, b_j]."""
    cols = [bracket(L, x, L.basis(j)) for j in range(L.dim)]
    return [[cols[j][i] for j in range(L.dim)] for i in range(L.dim)]


def matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum(A[i][k] * B[k][j] for k in range(m) if A[i][k] and B[k][j]) for j in range(p)]
            for i in range(n)]


def is_zero(v) -> bool:
    return not any(v)


# --- validation --------------------------------------------------------------

@dataclass
class Check:
    family: str
    passed: bool
    count: int
    witness: str | None = None


@dataclass
class ValidationReport:
    algebra: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.family} ({c.count} checked)"
            if c.witness:
                line += f" witness: {c.witness}"
            out.append(line)
        return out


def _family(report, name, cases):
    count = 0
    for ok, witness in cases:
        count += 1
        if not ok:
            report.checks.append(Check(name, False, count, witness))
            return
    report.checks.append(Check(name, True, count))


def validate(L: LieAlgebra, jacobi_sample: int | None = None, seed: int = 1) -> ValidationReport:
    """Antisymmetry, Jacobi, Serre presentation and trace checks.

    Jacobi runs on every ordered basis triple unless ``jacobi_sample`` is set
    (default: exhaustive up to dimension 28, 20000 seeded triples above).
    """
    N = L.dim
    a = L.datum.a
    B = [L.basis(k) for k in range(N)]
    report = ValidationReport(L.datum.name)
    lab = L.labels

    def br(x, y):
        return bracket(L, x, y)

    def sub(x, y):
        return [p - q for p, q in zip(x, y)]

    def add3(x, y, z):
        return [p + q + r for p, q, r in zip(x, y, z)]

    _family(report, "antisymmetry", (
        (is_zero([p + q for p, q in zip(br(B[i], B[j]), br(B[j], B[i]))]), f"[{lab[i]},{lab[j]}]")
        for i in range(N) for j in range(N)))

    if jacobi_sample is None and N > 28:
        jacobi_sample = 20000
    if jacobi_sample is None:
        triples = product(range(N), repeat=3)
    else:
        rng = random.Random(f"jacobi:{seed}")
        triples = ((rng.randrange(N), rng.randrange(N), rng.randrange(N)) for _ in range(jacobi_sample))
    _family(report, "jacobi", (
        (is_zero(add3(br(B[i], br(B[j], B[k])), br(B[j], br(B[k], B[i])), br(B[k], br(B[i], B[j])))),
         f"({lab[i]},{lab[j]},{lab[k]})")
        for i, j, k in triples))

    H = lambda i: B[L.h(i)]
    E = lambda i: B[L.e(i)]
    F = lambda i: B[L.f(i)]
    V = L.datum.vertices
    scal = lambda c, x: [c * p for p in x]
    _family(report, "[H_i,H_j]=0", ((is_zero(br(H(i), H(j))), f"i={i},j={j}") for i in V for j in V))
    _family(report, "[E_i,F_i]=H_i", ((br(E(i), F(i)) == H(i), f"i={i}") for i in V))
    _family(report, "[E_j,H_i]=-a_ij E_j",
            ((br(E(j), H(i)) == scal(-a(i, j), E(j)), f"i={i},j={j}") for i in V for j in V))
    _family(report, "[F_j,H_i]=a_ij F_j",
            ((br(F(j), H(i)) == scal(a(i, j), F(j)), f"i={i},j={j}") for i in V for j in V))
    _family(report, "[E_i,F_j]=0 (i!=j)",
            ((is_zero(br(E(i), F(j))), f"i={i},j={j}") for i in V for j in V if i != j))

    def ad_power(x, y, k):
        for _ in range(k):
            y = br(x, y)
        return y

    _family(report, "serre ad_E_i^(1-a_ij) E_j = 0",
            ((is_zero(ad_power(E(i), E(j), 1 - a(i, j))), f"i={i},j={j}") for i in V for j in V if i != j))
    _family(report, "serre ad_F_i^(1-a_ij) F_j = 0",
            ((is_zero(ad_power(F(i), F(j), 1 - a(i, j))), f"i={i},j={j}") for i in V for j in V if i != j))
    # the Serre exponent is sharp: one fewer application is nonzero
    _family(report, "serre exponent sharp",
            ((not is_zero(ad_power(E(i), E(j), -a(i, j))), f"i={i},j={j}") for i in V for j in V if i != j))
    _family(report, "trace(ad_x)=0", (
        (sum(c for b in range(N) for k, c in L.table[g][b] if k == b) == 0, lab[g]) for g in range(N)))

    def constants_ok(g, b):
        opposite = not any(add(L.weight(g), L.weight(b)))
        for _, c in L.table[g][b]:
            if not isinstance(c, int):
                return False
            if "H" not in (L.kind(g), L.kind(b)) and not opposite and abs(c) != 1:
                return False
        return True

    _family(report, "integral structure constants (root pairs in {-1,0,1})", (
        (constants_ok(g, b), f"[{lab[g]},{lab[b]}]") for g in range(N) for b in range(N)))
    return report


def structure_constant_lines(L: LieAlgebra) -> list[str]:
    """``bracket X Y = +c Z ...`` for X before Y in basis order, zero brackets omitted."""
    out = []
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            terms = L.table[a][b]
            if terms:
                rhs = " ".join(f"{c:+d} {L.labels[k]}" for k, c in terms)
                out.append(f"bracket {L.labels[a]} {L.labels[b]} = {rhs}")
    return out


def parse_structure_constants(lines, L: LieAlgebra) -> dict[tuple[int, int], list[tuple[int, int]]]:
    table = {}
    for line in lines:
        line = line.strip()
        if not line:
            continue
        head, rhs = line.split(" = ")
        _, x, y = head.split()
        toks = rhs.split()
        terms = [(L.index_of(toks[k + 1]), int(toks[k])) for k in range(0, len(toks), 2)]
        table[(L.index_of(x), L.index_of(y))] = terms
    return table
