import pytest
import sympy
from hypothesis import given, strategies as st

from lieqr.cartan import InvalidCartanType, UnknownVertex, cartan_matrix, gamma, path

SUPPORTED = [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)] + [("E", n) for n in (6, 7, 8)]


def test_a2_and_a1():
    assert cartan_matrix("A", 2).matrix == ((2, -1), (-1, 2))
    assert cartan_matrix("A", 1).matrix == ((2,),)


def test_d4_star_and_determinant():
    d = cartan_matrix("D", 4)
    assert sorted(d.neighbours(2)) == [1, 3, 4]
    assert sympy.Matrix(d.matrix).det() == 4


@pytest.mark.parametrize("series,rank", [("D", 5), ("D", 6), ("E", 6), ("E", 7), ("E", 8), ("A", 5)])
def test_determinants(series, rank):
    # det: A_n -> n+1, D_n -> 4, E_n -> 9-n
    want = {"A": rank + 1, "D": 4, "E": 9 - rank}[series]
    assert sympy.Matrix(cartan_matrix(series, rank).matrix).det() == want


@pytest.mark.parametrize("series,rank", [("D", 3), ("E", 9), ("E", 5), ("A", 0), ("B", 2)])
def test_rejects(series, rank):
    with pytest.raises(InvalidCartanType):
        cartan_matrix(series, rank)


@pytest.mark.parametrize("series,rank", SUPPORTED)
def test_entries_and_symmetry(series, rank):
    a = cartan_matrix(series, rank).matrix
    for i in range(rank):
        assert a[i][i] == 2
        for j in range(rank):
            if i != j:
                assert a[i][j] in (0, -1)
                assert a[i][j] == a[j][i]


def test_gamma_examples():
    a3 = cartan_matrix("A", 3)
    assert gamma(a3, 1, 1) == {1, 2}
    assert gamma(a3, 1, 0) == {1}
    assert gamma(cartan_matrix("D", 4), 1, 2) == {1, 2, 3, 4}
    with pytest.raises(UnknownVertex):
        gamma(a3, 7, 1)


def test_path_examples():
    assert path(cartan_matrix("A", 3), 1, 3) == [1, 2, 3]
    assert path(cartan_matrix("A", 2), 1, 1) == [1]
    assert path(cartan_matrix("D", 4), 3, 4) == [3, 2, 4]


@given(st.sampled_from(SUPPORTED), st.data())
def test_paths_and_gamma_agree(sr, data):
    d = cartan_matrix(*sr)
    j = data.draw(st.integers(1, d.rank))
    p = path(d, 1, j)
    assert len(p) - 1 <= d.rank - 1
    assert len(set(p)) == len(p)
    assert all(d.a(x, y) == -1 for x, y in zip(p, p[1:]))
    assert j in gamma(d, 1, len(p) - 1)
    m = data.draw(st.integers(0, d.rank))
    assert gamma(d, 1, m) <= gamma(d, 1, m + 1)
    assert gamma(d, 1, d.rank - 1) == set(d.vertices)
