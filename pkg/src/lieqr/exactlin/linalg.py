"""Exact and modular rank computations.

``rank_exact`` is fraction-free (Bareiss) elimination over the integers after
clearing row denominators.  ``rank_modular`` reduces a rational matrix mod a
prime and eliminates there; it can only under-report the rational rank, so a
full modular rank certifies a full rational rank.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from math import factorial, gcd, isqrt, lcm

import numpy as np
import sympy

try:  # optional accelerated backend for very wide matrices
    import flint
except ImportError:  # pragma: no cover
    flint = None

PRIME_LO = 1 << 60
PRIME_HI = 1 << 62
FLINT_THRESHOLD = 256  # columns; below this the numpy kernel is fast enough
PREFIX_SLACK = 16


class BadPrime(ArithmeticError):
    """A denominator in the matrix vanishes modulo the chosen prime."""


class PrimeRetriesExceeded(RuntimeError):
    pass


# --- scalar domains --------------------------------------------------------

class QQ:
    """Exact rationals (``fractions.Fraction``)."""

    name = "exact"
    modulus = None

    def convert(self, x):
        return Fraction(x)

    def reduce(self, x):
        return x

    def scale(self, x, k: int):
        """x / k for a positive integer k."""
        return Fraction(x) / k

    def power(self, x, e: int):
        return Fraction(x) ** e

    def __eq__(self, other):
        return isinstance(other, QQ)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class GF:
    """Integers modulo a prime, stored as Python ints in [0, p)."""

    name = "modular"

    def __init__(self, p: int):
        self.modulus = p

    def convert(self, x):
        x = Fraction(x)
        p = self.modulus
        if x.denominator % p == 0:
            raise BadPrime(f"denominator {x.denominator} divisible by {p}")
        return x.numerator * pow(x.denominator, -1, p) % p

    def reduce(self, x):
        return x % self.modulus

    def scale(self, x, k: int):
        return x * pow(k, -1, self.modulus) % self.modulus

    def power(self, x, e: int):
        return pow(x, e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return f"GF({self.modulus})"


def inverse_factorial(k: int, dom):
    return dom.scale(dom.convert(1), factorial(k))


# --- primes ----------------------------------------------------------------

def random_prime(rng: random.Random, lo: int = PRIME_LO, hi: int = PRIME_HI) -> int:
    while True:
        n = rng.randrange(lo, hi) | 1
        if sympy.isprime(n):
            return n


def prime_sequence(seed: int, count: int) -> list[int]:
    """The primary prime followed by the retry list, all drawn from ``seed``."""
    rng = random.Random(f"lieqr-primes:{seed}")
    return [random_prime(rng) for _ in range(count)]


# --- exact rank --------------------------------------------------------------

def integer_rows(matrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def rank_exact(matrix) -> int:
    """Rank over Q via Bareiss elimination.

    Pivot: the nonzero entry of smallest absolute value in the current column,
    lowest row index on ties.
    """
    M = integer_rows(matrix)
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            v = M[i][c]
            if v and (best is None or abs(v) < abs(M[best][c])):
                best = i
        if best is None:
            continue
        M[r], M[best] = M[best], M[r]
        piv = M[r][c]
        prow = M[r]
        for i in range(r + 1, nrows):
            row = M[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - f * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def nullspace_exact(matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right nullspace over Q (reduced echelon, one vector per free column)."""
    M = [[Fraction(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row_i, pc in enumerate(pivots):
            v[pc] = -M[row_i][fc]
        basis.append(v)
    return basis


# --- modular rank ------------------------------------------------------------

def reduce_matrix(matrix, p: int) -> np.ndarray:
    dom = GF(p)
    rows = [[dom.convert(x) if not isinstance(x, int) else x % p for x in row] for row in matrix]
    return as_modular_array(rows, p)


def as_modular_array(rows, p: int) -> np.ndarray:
    dtype = np.int64 if p < (1 << 31) else object
    if not len(rows):
        return np.zeros((0, 0), dtype=dtype)
    return np.array(rows, dtype=dtype) % p


def _echelon_mod(A: np.ndarray, p: int, want_nullspace: bool = False):
    """In-place elimination mod p; returns (rank, pivot columns, pivot row order)."""
    nrows, ncols = A.shape
    pivots = []
    order = list(range(nrows))
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
            order[r], order[i] = order[i], order[r]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        lo = 0 if want_nullspace else r + 1
        rows = np.nonzero(A[lo:, c])[0] + lo
        rows = rows[rows != r]
        if len(rows):
            f = A[rows, c].reshape(-1, 1)
            A[np.ix_(rows, np.arange(c, ncols))] = (A[rows, c:] - f * A[r, c:]) % p
        pivots.append(c)
        r += 1
    return r, pivots, order


def rank_modular(matrix, p: int, backend: str = "auto") -> int:
    """Rank of the reduction of a rational matrix modulo p.

    Raises ``BadPrime`` if p divides a denominator.
    """
    A = matrix if isinstance(matrix, np.ndarray) else reduce_matrix(matrix, p)
    return rank_mod_array(A, p, backend)


def rank_mod_array(A: np.ndarray, p: int, backend: str = "auto") -> int:
    """Rank of an array of residues mod p.

    Tries the first ``ncols + PREFIX_SLACK`` rows before the full matrix: a
    full-rank prefix settles the question, otherwise the full matrix is used.
    """
    if A.size == 0:
        return 0
    nrows, ncols = A.shape
    if nrows > ncols + PREFIX_SLACK:
        r = _rank_mod_full(A[: ncols + PREFIX_SLACK], p, backend)
        if r == ncols:
            return r
    return _rank_mod_full(A, p, backend)


def choose_backend(ncols: int, backend: str = "auto") -> str:
    if backend == "auto":
        return "flint" if flint is not None and ncols >= FLINT_THRESHOLD else "numpy"
    if backend == "flint" and flint is None:
        raise RuntimeError("python-flint is not installed")
    return backend


def _rank_mod_full(A: np.ndarray, p: int, backend: str) -> int:
    if choose_backend(A.shape[1], backend) == "flint":
        M = flint.nmod_mat(A.shape[0], A.shape[1], [int(x) for x in A.ravel()], p)
        return int(M.rank())
    return _echelon_mod(A.copy(), p)[0]


def pivot_rows_mod(A: np.ndarray, p: int) -> list[int]:
    """Original indices of a maximal set of independent rows mod p."""
    r, _, order = _echelon_mod(A.copy(), p)
    return sorted(order[:r])


def nullspace_modular(A: np.ndarray, p: int) -> list[list[int]]:
    A = A.copy()
    nrows, ncols = A.shape
    rank, pivots, _ = _echelon_mod(A, p, want_nullspace=True)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = int(-A[i, fc]) % p
        basis.append(v)
    return basis


def rational_reconstruction(a: int, p: int) -> Fraction | None:
    """Smallest-height n/d with n = a*d mod p, |n|, d <= sqrt(p/2)."""
    bound = isqrt(p // 2)
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def primitive_integer_vector(v) -> list[int]:
    """Scale a rational vector to coprime integers with a positive leading entry."""
    v = [Fraction(x) for x in v]
    d = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * d) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


# --- certificates ------------------------------------------------------------

CERTIFIED = "certified-full-rank"
DEFICIENT = "rank-deficient-candidate"


@dataclass
class RankCertificate:
    mode: str
    seed: int
    samples: int
    shape: tuple[int, int]
    rank: int
    target: int
    prime: int | None = None
    candidate_null: list[int] | None = None
    confirmed_batches: int = 0
    label: str | None = None
    batches: int = 1
    primes_tried: list[int] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return CERTIFIED if self.rank == self.target else DEFICIENT

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def as_dict(self) -> dict:
        d = asdict(self)
        d["shape"] = list(self.shape)
        d["verdict"] = self.verdict
        return d
