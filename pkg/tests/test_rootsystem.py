import itertools

import pytest

from lieqr.algebra import validate
from lieqr.cartan import cartan_matrix
from lieqr.rootsystem import close_roots, extraspecial_signs, height

from conftest import algebra


def brute_force_roots(series, rank, bound=6):
    """Positive roots as the vectors of norm 2 with nonnegative coefficients
    (simply-laced), enumerated over a box."""
    a = cartan_matrix(series, rank).matrix
    out = []
    for c in itertools.product(range(bound + 1), repeat=rank):
        if any(c) and sum(c[i] * a[i][j] * c[j] for i in range(rank) for j in range(rank)) == 2:
            out.append(c)
    return set(out)


def test_small_examples():
    assert set(close_roots(cartan_matrix("A", 2)).positive) == {(1, 0), (0, 1), (1, 1)}
    assert close_roots(cartan_matrix("A", 1)).positive == ((1,),)
    rs = close_roots(cartan_matrix("D", 4))
    assert len(rs.positive) == 12
    assert rs.dimension() == 8 * 7 // 2


@pytest.mark.parametrize("series,rank", [("A", 3), ("A", 4), ("D", 4), ("D", 5), ("E", 6)])
def test_matches_norm_two_enumeration(series, rank):
    rs = close_roots(cartan_matrix(series, rank))
    assert set(rs.positive) == brute_force_roots(series, rank, bound=3)


@pytest.mark.parametrize("series,rank,dim", [
    ("A", 1, 3), ("A", 4, 24), ("A", 7, 63), ("D", 4, 28), ("D", 6, 66), ("D", 8, 120),
    ("E", 6, 78), ("E", 7, 133), ("E", 8, 248),
])
def test_dimensions(series, rank, dim):
    assert close_roots(cartan_matrix(series, rank)).dimension() == dim


@pytest.mark.parametrize("series,rank", [("A", 4), ("D", 5), ("E", 7)])
def test_height_descent_and_order(series, rank):
    rs = close_roots(cartan_matrix(series, rank))
    pos = set(rs.positive)
    hs = [height(r) for r in rs.positive]
    assert hs == sorted(hs)
    for r in rs.positive:
        if height(r) >= 2:
            assert any(tuple(x - (k == i) for k, x in enumerate(r)) in pos for i in range(rank))
        for i in range(1, rank + 1):
            assert rs.pairing(r, i) in (-2, -1, 0, 1, 2)


def test_a2_extraspecial_sign():
    rs = close_roots(cartan_matrix("A", 2))
    signs = extraspecial_signs(rs)
    assert signs((1, 0), (0, 1)) == 1
    assert signs((0, 1), (1, 0)) == -1


@pytest.mark.parametrize("series,rank", [("A", 3), ("D", 4), ("E", 6)])
def test_antisymmetric(series, rank):
    signs = extraspecial_signs(close_roots(cartan_matrix(series, rank)))
    for (a, b), s in signs.positive_pairs().items():
        assert signs(b, a) == -s


def test_a3_table_passes_jacobi():
    rep = validate(algebra("A", 3))
    jac = [c for c in rep.checks if c.family == "jacobi"]
    assert jac and jac[0].passed and jac[0].count == 15 ** 3
    assert rep.ok
