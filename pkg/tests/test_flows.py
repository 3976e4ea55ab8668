import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieqr.algebra import ad_matrix, bracket
from lieqr.flows import (
    FlowWord,
    NotNilpotent,
    SymbolicCapExceeded,
    apply_word,
    coroot_conjugator,
    expand,
    nilpotent_flow,
    parse_word,
    reflection_word,
    sample_word,
    toral_flow,
    weyl_conjugator,
    word,
)

import flow_formulas as ff
from conftest import algebra


def test_e2_on_h1(A2):
    got = nilpotent_flow(A2, A2.e(2), 1)(A2.basis(A2.h(1)))
    assert got == A2.element({"H1": 1, "E2": 1})


def test_zero_flow_is_identity(A2):
    x = A2.element({"H1": 3, "E[1,1]": -2, "F2": Fraction(1, 2)})
    assert nilpotent_flow(A2, A2.e((1, 1)), 0)(x) == x


def test_h_word_a1(A1):
    v = expand(A1, parse_word(A1, "E1:s,F1:t"))
    assert [repr(c) for c in v] == ["2*s*t + 1", "-2*s^2*t - 2*s", "2*t"]


def test_toral(A2):
    u = Fraction(3, 2)
    assert toral_flow(A2, 1, u)(A2.basis(A2.e(1))) == [u**2 if k == A2.e(1) else 0 for k in range(8)]
    x = A2.element({"H2": 1, "E1": 5, "F[1,1]": 2})
    assert toral_flow(A2, 2, 1)(x) == x
    assert toral_flow(A2, 1, u)(A2.basis(A2.h(2))) == A2.basis(A2.h(2))
    with pytest.raises(ValueError):
        toral_flow(A2, 1, 0)


def test_symbolic_toral_is_laurent(A2):
    v = expand(A2, word(A2, ("H1", "u"), ("E1", "t")))
    assert repr(v[A2.e(1)]) == "-2*u^2*t"
    v = expand(A2, word(A2, ("H1", "u"), ("F1", "t")))
    assert repr(v[A2.f(1)]) == "2*u^-2*t"


def test_not_nilpotent(A2):
    with pytest.raises(NotNilpotent):
        nilpotent_flow(A2, A2.h(1), 1)
    with pytest.raises(NotNilpotent):
        nilpotent_flow(A2, A2.element({"E1": 1, "F1": 1}), 1)


def test_empty_word(A2):
    x = A2.element({"E2": 4})
    assert apply_word(A2, FlowWord(), x) == x


def test_eifj_and_eiej_examples(A2):
    v = expand(A2, word(A2, ("E1", "s"), ("F2", "t")))
    assert repr(v[A2.h(1)]) == "1"
    assert repr(v[A2.e(1)]) == "-2*s"
    assert repr(v[A2.f(2)]) == "-t"
    v = expand(A2, word(A2, ("E1", "s"), ("E2", "t")))
    assert repr(v[A2.e((1, 1))]) == "s*t"


def test_symbolic_cap(A3):
    w = word(A3, *[(A3.e(1 + k % 3), f"x{k}") for k in range(13)])
    with pytest.raises(SymbolicCapExceeded):
        expand(A3, w)


@pytest.mark.parametrize("series,rank", [("A", 1), ("A", 2), ("A", 3)])
def test_displayed_formulas(series, rank):
    L = algebra(series, rank)
    for name, w, expected in ff.applicable(L):
        assert ff.compare(L, w, expected) == [], name


def test_displayed_formulas_rank4():
    L = algebra("D", 4)
    for name, w, expected in ff.applicable(L):
        assert ff.compare(L, w, expected) == [], name


def test_gamma2_triple_discrepancy(A3):
    # the engine gives -s^2 t a_1j E_j; the displayed formula has -(1/2) s^2 t a_1j^2 E_j
    (i, j), = ff.gamma2_pairs(A3)
    engine, shown = ff.triple_s2t(A3, i, j)
    aj = A3.datum.a(1, j)
    assert engine[A3.e(j)] == -aj
    assert shown[A3.e(j)] == Fraction(-aj * aj, 2)
    assert engine != shown


def test_triple_s2t_by_sympy_matrix_exponentials(A3):
    # independent of the engine: truncated exp series of ad matrices in sympy
    import sympy

    (i, j), = ff.gamma2_pairs(A3)
    w, s, t = sympy.symbols("w s t")

    def flow(k, x):
        A = sympy.Matrix(ad_matrix(A3, A3.basis(k))) * x
        out, term = sympy.eye(A3.dim), sympy.eye(A3.dim)
        for n in range(1, 4):
            term = term * A / n
            out += term
        return out

    g = flow(A3.e(i), w) * flow(A3.e(j), s) * flow(A3.f(j), t)
    v = (g * sympy.Matrix(A3.basis(A3.h(1)))).applyfunc(sympy.expand)
    coeff = sympy.Poly(v[A3.e(j)], w, s, t).coeff_monomial(s**2 * t)
    assert coeff == -A3.datum.a(1, j)


@pytest.mark.parametrize("series,rank", [("A", 2), ("A", 3), ("D", 4), ("D", 5)])
def test_weyl_conjugators(series, rank):
    L = algebra(series, rank)
    assert len(weyl_conjugator(L, 1)) == 0
    for i in L.datum.vertices:
        w = weyl_conjugator(L, i)
        assert apply_word(L, w, L.basis(L.h(1))) == L.basis(L.h(i))


def test_a2_conjugator_word(A2):
    w = weyl_conjugator(A2, 2)
    assert len(w) == 6
    assert w == reflection_word(A2, 1) + reflection_word(A2, 2)


def test_d4_conjugator_length(D4):
    assert len(weyl_conjugator(D4, 3)) <= 4 * 3


def test_coroot_conjugators(D4):
    for r in D4.roots.positive:
        w = coroot_conjugator(D4, r)
        got = apply_word(D4, w, D4.basis(D4.h(1)))
        assert got[:4] == list(r) and not any(got[4:])


def test_parse_word(A2):
    w = parse_word(A2, "E1:s, F[1,1]:1/2, H2:u")
    assert [s.kind for s in w.steps] == ["nilpotent", "nilpotent", "toral"]
    assert w.steps[1].param == Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_word(A2, "E1")
    with pytest.raises(KeyError):
        parse_word(A2, "E7:1")


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_inverse_word_is_identity(seed):
    L = algebra("A", 2)
    rng = random.Random(seed)
    w = sample_word(L, rng, 6)
    x = [Fraction(rng.randint(-5, 5)) for _ in range(L.dim)]
    assert apply_word(L, w.inverse(), apply_word(L, w, x)) == x


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_flows_are_automorphisms(seed):
    L = algebra("A", 3)
    rng = random.Random(seed)
    w = sample_word(L, rng, 3)
    x = [Fraction(rng.randint(-3, 3)) for _ in range(L.dim)]
    y = [Fraction(rng.randint(-3, 3)) for _ in range(L.dim)]
    g = lambda v: apply_word(L, w, v)
    assert g(bracket(L, x, y)) == bracket(L, g(x), g(y))


def test_sampler_deterministic(A2):
    a = sample_word(A2, random.Random("k"))
    b = sample_word(A2, random.Random("k"))
    assert a == b and len(a) == 2 * A2.dim
    for s in a.steps:
        assert s.param != 0 and abs(s.param.numerator) <= 9 and s.param.denominator <= 4
