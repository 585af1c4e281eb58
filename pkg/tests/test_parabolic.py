import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parared import lattice
from parared.errors import DimensionMismatch, IndexOutOfRange, NotNested
from parared.parabolic import (
    NumericalType,
    build_parabolic,
    decompose_parabolic_character,
    degree_functional,
    levi_induced_root_datum,
    restrict_cocharacter,
)
from parared.root_data import build_root_datum, fundamental_weights

SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4", "GL3", "PGL3", "A4"]


def test_borel_examples():
    sl2 = build_root_datum(preset="SL2")
    pd = build_parabolic(sl2)
    assert pd.dim_G_mod_P == 1
    assert pd.chi_P == tuple(-x for x in sl2.simple_roots[0])
    a2 = build_root_datum(preset="A2")
    pb = build_parabolic(a2)
    assert pb.dim_G_mod_P == 3
    assert pb.chi_P == tuple(-2 * (a + b) for a, b in zip(*a2.simple_roots))


@pytest.mark.parametrize("name", SMALL)
def test_full_parabolic_is_group(name):
    rd = build_root_datum(preset=name)
    pd = build_parabolic(rd, range(rd.rank_ss))
    assert pd.dim_G_mod_P == 0 and not any(pd.chi_P)


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        build_parabolic(build_root_datum(preset="A2"), [2])


def test_degree_functional_examples():
    sl2 = build_root_datum(preset="SL2")
    pd = build_parabolic(sl2)
    for n in range(6):
        assert degree_functional(pd, restrict_cocharacter(pd, (-n,))) == 2 * n
    a2 = build_root_datum(preset="A2")
    pb = build_parabolic(a2)
    assert degree_functional(pb, restrict_cocharacter(pb, tuple(-x for x in a2.simple_coroots[0]))) == 2
    assert degree_functional(pb, NumericalType(pb, (0, 0))) == 0


def test_restrict_cocharacter_examples():
    sl2 = build_root_datum(preset="SL2")
    pd = build_parabolic(sl2)
    assert restrict_cocharacter(pd, (1,)).evaluate(pd.chi_P) == -2
    a2 = build_root_datum(preset="A2")
    p1 = build_parabolic(a2, [0])
    assert restrict_cocharacter(p1, a2.simple_coroots[0]).values == (0,)
    full = build_parabolic(build_root_datum(preset="GL2"), [0])
    assert full.cochar_rank == 1  # only X*(G) survives
    with pytest.raises(DimensionMismatch):
        restrict_cocharacter(pd, (1, 2))


@pytest.mark.parametrize("name", SMALL)
def test_chi_p_invariants_all_subsets(name):
    rd = build_root_datum(preset=name)
    weights = fundamental_weights(rd)
    for k in range(rd.rank_ss + 1):
        for I in itertools.combinations(range(rd.rank_ss), k):
            pd = build_parabolic(rd, I)
            for i in I:
                assert lattice.dot(rd.simple_coroots[i], pd.chi_P) == 0
            coef = pd.chi_P_weight_coefficients
            assert set(coef) == set(pd.outside)
            assert all(c > 0 for c in coef.values())
            rebuilt = [-sum(coef[b] * weights[b].vector[j] for b in pd.outside) for j in range(rd.dim)]
            # equal up to X*(G), which the weights do not see
            diff = [Fraction(x) - y for x, y in zip(pd.chi_P, rebuilt)]
            assert all(lattice.dot(co, diff) == 0 for co in rd.simple_coroots)
            assert (pd.dim_G_mod_P == 0) == (len(I) == rd.rank_ss)
            assert pd.cochar_rank == rd.rank_ss - len(I) + rd.rank_torus


@given(st.integers(-5, 5), st.integers(-5, 5), st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_degree_functional_is_linear(a, b, raw):
    rd = build_root_datum(preset="A3", isogeny="ad")
    pd = build_parabolic(rd, [1])
    s = NumericalType(pd, tuple(raw[:2]))
    t = NumericalType(pd, tuple(raw[2:4]))
    lhs = degree_functional(pd, a * s + b * t)
    assert lhs == a * degree_functional(pd, s) + b * degree_functional(pd, t)


def test_decompose_examples():
    a2 = build_root_datum(preset="A2")
    p = build_parabolic(a2, [0])
    b = build_parabolic(a2)
    w2 = fundamental_weights(a2)[1].vector
    assert decompose_parabolic_character(a2, p, b, w2) == (tuple(w2), (0, 0))
    w1 = fundamental_weights(a2)[0].vector
    pp, lp = decompose_parabolic_character(a2, p, b, w1)
    assert tuple(x + y for x, y in zip(pp, lp)) == tuple(w1)
    assert p.contains_character(pp)
    assert lp == (Fraction(1), Fraction(-1, 2))
    assert decompose_parabolic_character(a2, p, b, (0, 0)) == ((0, 0), (0, 0))
    with pytest.raises(NotNested):
        decompose_parabolic_character(a2, b, p, (0, 1))


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_decompose_round_trip(chi):
    rd = build_root_datum(preset="A3")
    p = build_parabolic(rd, [0, 1])
    p1 = build_parabolic(rd, [0])
    # simply connected: the first coroot is the first coordinate functional
    chi = [0] + list(chi[1:])
    assert p1.contains_character(chi)
    first = decompose_parabolic_character(rd, p, p1, chi)
    assert first == decompose_parabolic_character(rd, p, p1, chi)
    pp, lp = first
    assert tuple(x + y for x, y in zip(pp, lp)) == tuple(chi)
    assert p.contains_character(pp)


def test_levi_root_datum():
    a2 = build_root_datum(preset="A2")
    lev = levi_induced_root_datum(a2, build_parabolic(a2, [0]))
    assert lev.rank_ss == 1 and lev.cartan == ((2,),)
    assert levi_induced_root_datum(a2, build_parabolic(a2)).rank_ss == 0
    b2 = build_root_datum(preset="B2")
    short = build_parabolic(b2, [1])
    lev = levi_induced_root_datum(b2, short)
    assert lev.cartan == ((2,),)
    assert lev.pairing(lev.simple_coroots[0], lev.simple_roots[0]) == 2
