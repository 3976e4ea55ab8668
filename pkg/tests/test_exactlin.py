import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieqr.exactlin import (
    GF,
    QQ,
    BadPrime,
    MultiPoly,
    PolyRing,
    UnknownVariable,
    nullspace_exact,
    poly_coefficient,
    prime_sequence,
    primitive_integer_vector,
    rank_exact,
    rank_modular,
    rational_reconstruction,
)

P = 10**9 + 7


def naive_rank(M):
    """Textbook Gaussian elimination over Fractions."""
    A = [[Fraction(x) for x in row] for row in M]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def random_matrix(rng, low_rank=False):
    m, n = rng.randint(1, 7), rng.randint(1, 7)
    if low_rank:
        k = rng.randint(1, min(m, n))
        B = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(k)] for _ in range(m)]
        C = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)] for _ in range(k)]
        return [[sum(B[i][t] * C[t][j] for t in range(k)) for j in range(n)] for i in range(m)]
    return [[Fraction(rng.randint(-20, 20), rng.randint(1, 12)) if rng.random() < 0.8 else Fraction(0)
             for _ in range(n)] for _ in range(m)]


def test_rank_examples():
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact([[0, 1], [1, 0]]) == 2
    hilbert = [[Fraction(1, i + j - 1) for j in range(1, 4)] for i in range(1, 4)]
    assert rank_exact(hilbert) == 3
    assert rank_exact([]) == 0
    assert rank_exact([[0, 0], [0, 0]]) == 0


def test_modular_examples():
    assert rank_modular([[1, 2], [2, 4]], P) == 1
    assert rank_modular([[2, 0], [0, 2]], 2) == 0
    assert rank_exact([[2, 0], [0, 2]]) == 2
    for n in (1, 5, 17):
        assert rank_modular([[int(i == j) for j in range(n)] for i in range(n)], P) == n


def test_bad_prime():
    with pytest.raises(BadPrime):
        rank_modular([[Fraction(1, 7)]], 7)


def test_rank_exact_matches_naive_oracle():
    rng = random.Random(2024)
    for k in range(500):
        M = random_matrix(rng, low_rank=k % 2 == 1)
        assert rank_exact(M) == naive_rank(M), M


def test_modular_never_exceeds_exact():
    rng = random.Random(7)
    primes = prime_sequence(3, 4) + [2, 3, 5, 7, 11]
    for _ in range(300):
        M = random_matrix(rng, low_rank=rng.random() < 0.5)
        r = rank_exact(M)
        for p in primes:
            try:
                assert rank_modular(M, p) <= r
            except BadPrime:
                pass


def test_primes_deterministic_and_in_range():
    ps = prime_sequence(1, 6)
    assert ps == prime_sequence(1, 6)
    assert ps != prime_sequence(2, 6)
    assert all(2**60 <= p < 2**62 for p in ps)


def test_nullspace_and_primitive():
    M = [[1, 2, 3], [2, 4, 6]]
    basis = nullspace_exact(M, 3)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in M)
    assert primitive_integer_vector([Fraction(-1, 2), 1, Fraction(3, 4)]) == [2, -4, -3]
    assert primitive_integer_vector([0, 0]) == [0, 0]


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_rational_reconstruction(n, d):
    p = prime_sequence(5, 1)[0]
    x = Fraction(n, d)
    assert rational_reconstruction(GF(p).convert(x), p) == x


def test_poly_coefficient_examples():
    R = PolyRing(("s", "t"))
    s, t = R.gens()
    p = 1 + 3 * s * t**2
    assert poly_coefficient(p, {"s": 1, "t": 2}) == 3
    assert poly_coefficient(R.zero(), {"s": 4}) == 0
    assert poly_coefficient((1 + s) * (1 + t) ** 2, (1, 1)) == 2
    with pytest.raises(UnknownVariable):
        poly_coefficient(p, {"w": 1})


def test_laurent_only_for_torus_variables():
    R = PolyRing(("u", "t"), frozenset({"u"}))
    u, t = R.gens()
    assert (u ** -2) * u**2 == R.one()
    with pytest.raises((ValueError, ZeroDivisionError, TypeError)):
        t ** -1


small = st.integers(-4, 4)
R3 = PolyRing(("x", "y", "z"))


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
                                 small, max_size=5))
    return MultiPoly(R3, terms)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == R3.zero()
    assert a * R3.one() == a


@settings(max_examples=40, deadline=None)
@given(polys(), polys(), st.tuples(small, small, small))
def test_evaluation_is_a_homomorphism(a, b, pt):
    env = dict(zip(("x", "y", "z"), pt))
    assert (a * b).evaluate(env) == a.evaluate(env) * b.evaluate(env)
    assert (a + b).evaluate(env) == a.evaluate(env) + b.evaluate(env)


def test_domains():
    q, g = QQ(), GF(13)
    assert q.scale(1, 4) == Fraction(1, 4)
    assert g.scale(1, 4) * 4 % 13 == 1
    assert g.convert(Fraction(1, 2)) == 7
