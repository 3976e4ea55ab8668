import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieqr.algebra import ad_matrix, matmul
from lieqr.exactlin import QQ, primitive_integer_vector
from lieqr.quadind import (
    CircleFamily,
    DuplicateFamily,
    LinearImage,
    MonomialFamily,
    SamplerConfig,
    adjoint_family,
    evaluate_rows,
    linear_dimension,
    pair_index,
    product_family,
    quadratic_dimension,
)

from conftest import algebra
from test_exactlin import naive_rank


def test_pair_order_is_colex():
    assert pair_index(3) == [(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2)]


def test_adjoint_rows(A1, A2):
    fam = adjoint_family(A1)
    from lieqr.flows import FlowWord, word
    assert fam.values(FlowWord(), QQ()) == [1, 0, 0]
    assert adjoint_family(A2).values(word(A2, ("E2", 1)), QQ()) == A2.element({"H1": 1, "E2": 1})


def test_a2_linear_rank_from_100_words(A2):
    rows = evaluate_rows(adjoint_family(A2), 1, "probe", range(100), QQ(), quadratic=False)
    assert naive_rank(rows) == 8


@pytest.mark.parametrize("series,rank,n", [("A", 1, 3), ("A", 2, 8)])
def test_linear_dimension(series, rank, n):
    cert = linear_dimension(adjoint_family(algebra(series, rank)), SamplerConfig(samples=20))
    assert cert.rank == n and cert.certified


def test_duplicate_is_deficient():
    cert = linear_dimension(DuplicateFamily())
    assert cert.rank == 1 and not cert.certified
    assert cert.candidate_null == [1, -1]
    assert cert.label == "likely-dependent"


def test_a1_quadratic_against_brute_force(A1):
    fam = adjoint_family(A1)
    cert = quadratic_dimension(fam, SamplerConfig(samples=30))
    rows = evaluate_rows(fam, 1, "main", range(30), QQ(), quadratic=True)
    assert cert.rank == naive_rank(rows) == 6 and cert.certified


def test_circle_dependence():
    cert = quadratic_dimension(CircleFamily())
    assert cert.rank == 5
    assert cert.candidate_null == [1, 0, -1, 0, 0, -1]
    assert cert.confirmed_batches == 3 and cert.label == "likely-dependent"
    # the other five product columns are independent
    rows = evaluate_rows(CircleFamily(), 1, "main", range(20), QQ(), quadratic=True)
    assert naive_rank([r[:5] for r in rows]) == 5


def test_a2_quadratic_modular_and_exact(A2):
    fam = adjoint_family(A2)
    mod = quadratic_dimension(fam)
    ex = quadratic_dimension(fam, SamplerConfig(mode="exact"))
    assert mod.rank == ex.rank == 36
    assert mod.verdict == ex.verdict


def killing_null(Ls):
    """Killing-form dependence between the first two factors of a product."""
    def pairs(L):
        N = L.dim
        ads = [ad_matrix(L, L.basis(k)) for k in range(N)]
        K = [[sum(matmul(ads[a], ads[b])[i][i] for i in range(N)) for b in range(N)] for a in range(N)]
        return [Fraction(K[i][j] * (1 if i == j else 2), K[0][0]) for i, j in pair_index(N)]
    m = sum(L.dim for L in Ls)
    idx = {p: k for k, p in enumerate(pair_index(m))}
    out = [Fraction(0)] * len(idx)
    off = 0
    for sign, L in zip((1, -1), Ls):
        for (i, j), v in zip(pair_index(L.dim), pairs(L)):
            out[idx[(i + off, j + off)]] += sign * v
        off += L.dim
    return primitive_integer_vector(out)


@pytest.mark.parametrize("factors", [(("A", 1), ("A", 1)), (("A", 1), ("A", 2))])
def test_products_lose_one_dimension_to_the_killing_form(factors):
    # each factor's Killing form is constant on its orbit, so the constants coincide
    Ls = [algebra(*f) for f in factors]
    fam = product_family([adjoint_family(L) for L in Ls])
    m = fam.dim
    cert = quadratic_dimension(fam)
    assert cert.rank == m * (m + 1) // 2 - 1
    assert cert.candidate_null == killing_null(Ls)
    assert cert.confirmed_batches == 3


def test_three_factor_product():
    fam = product_family([adjoint_family(algebra("A", 1))] * 3)
    assert quadratic_dimension(fam).rank == 45 - 2


def test_product_of_independent_monomials_is_full():
    fam = product_family([MonomialFamily(2), MonomialFamily(3)])
    cert = quadratic_dimension(fam)
    assert cert.rank == 15 and cert.certified


def test_single_factor_product(A1):
    fam = adjoint_family(A1)
    assert product_family([fam]) is fam


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10**6))
def test_basis_invariance(seed):
    rng = random.Random(seed)
    base = adjoint_family(algebra("A", 1))
    while True:
        M = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3)] for _ in range(3)]
        if naive_rank(M) == 3:
            break
    img = LinearImage(base, M)
    assert linear_dimension(img).verdict == linear_dimension(base).verdict
    assert quadratic_dimension(img).verdict == quadratic_dimension(base).verdict
    circle = LinearImage(CircleFamily(), M)
    assert quadratic_dimension(circle).rank == 5


@pytest.mark.parametrize("seed", [1, 2, 99, 2**63])
def test_certified_verdict_stable_across_seeds(seed, A2):
    assert quadratic_dimension(adjoint_family(A2), SamplerConfig(seed=seed)).certified


def test_monotone_in_samples(A2):
    fam = adjoint_family(A2)
    ranks = [quadratic_dimension(fam, SamplerConfig(samples=s, max_batches=1)).rank
             for s in (5, 10, 20, 30, 40)]
    assert ranks == sorted(ranks)


def test_thread_count_does_not_change_rows(A2):
    fam = adjoint_family(A2)
    cfg1 = SamplerConfig(threads=1)
    cfg2 = SamplerConfig(threads=2)
    a, b = quadratic_dimension(fam, cfg1), quadratic_dimension(fam, cfg2)
    assert a.as_dict() == b.as_dict()


def test_confirmation_rows_are_exact():
    cert = quadratic_dimension(CircleFamily())
    rows = evaluate_rows(CircleFamily(), 1, "verify0", range(6), QQ(), quadratic=True)
    assert all(sum(c * x for c, x in zip(cert.candidate_null, r)) == 0 for r in rows)
