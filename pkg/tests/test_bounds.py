import pytest

from parared import lattice
from parared.bounds import (
    borel_expected_dim,
    expected_dimension,
    generic_stability_check,
    hilbert_bound,
    instability_degree_bound,
    lower_bound_chain,
    star_constants,
)
from parared.errors import CapViolated, NoDominatingMinimalType, NotComparable
from parared.numtype import coroot_chain, enumerate_types, topological_type
from parared.parabolic import NumericalType, build_parabolic, degree_functional, restrict_cocharacter
from parared.root_data import build_root_datum

SL2 = build_root_datum(preset="SL2")
A2 = build_root_datum(preset="A2")
B_SL2 = build_parabolic(SL2)
B_A2 = build_parabolic(A2)


def t(pd, *mu):
    return restrict_cocharacter(pd, mu)


def test_hilbert_bound_sl2():
    rep = hilbert_bound(B_SL2, t(B_SL2, -2), [t(B_SL2, 0)], 0)
    assert rep.upper_bound == 5 and rep.expected_dim == 5
    assert rep.gamma.values == (0,)


def test_hilbert_bound_minimal_itself():
    for g in (0, 1):
        gamma = t(B_SL2, 0)
        rep = hilbert_bound(B_SL2, gamma, [gamma], g)
        assert rep.upper_bound == B_SL2.dim_G_mod_P
    # g=1: bound = dim(G/P) and expected = d(gamma) <= g*dim(G/P)
    rep = hilbert_bound(B_SL2, t(B_SL2, 1), [t(B_SL2, 1)], 1)
    assert rep.upper_bound == 1 and rep.expected_dim == -2 <= 1


def test_hilbert_bound_picks_tightest():
    rep = hilbert_bound(B_SL2, t(B_SL2, -3), [t(B_SL2, 0), t(B_SL2, -1)], 2)
    assert rep.gamma.values == (-1,)
    assert rep.upper_bound == 1 + 6 - 2


def test_hilbert_bound_errors():
    with pytest.raises(CapViolated):
        hilbert_bound(B_SL2, t(B_SL2, -2), [t(B_SL2, -1)], 0)
    with pytest.raises(NoDominatingMinimalType):
        hilbert_bound(B_SL2, t(B_SL2, 0), [t(B_SL2, -1)], 2)
    with pytest.raises(NoDominatingMinimalType):
        hilbert_bound(B_SL2, t(B_SL2, 0), [], 1)


@pytest.mark.parametrize("g", [0, 1, 2])
def test_upper_bound_dominates_expected(g):
    for pd, kw in ((B_SL2, {}), (B_A2, {"w_upper": 2}), (build_parabolic(A2, [0]), {})):
        c = topological_type(pd.rd, (0,) * pd.rd.dim)
        cap = g * pd.dim_G_mod_P
        sigmas = enumerate_types(pd, c, 0, 8, **kw)
        gammas = enumerate_types(pd, c, -4, cap, **kw)
        for s in sigmas:
            for gm in gammas:
                try:
                    rep = hilbert_bound(pd, s, [gm], g)
                except NoDominatingMinimalType:
                    continue
                assert rep.upper_bound >= rep.expected_dim


def test_lower_bound_chain():
    s = t(B_SL2, -3)
    assert lower_bound_chain(B_SL2, s, s) == -1
    for n in range(5):
        assert lower_bound_chain(B_SL2, t(B_SL2, -(n + 1)), t(B_SL2, -n)) == 1
    sigma = t(B_A2, 0, 0)
    tau = t(B_A2, *A2.simple_coroots[0])
    assert lower_bound_chain(B_A2, sigma, tau) == 1
    with pytest.raises(NotComparable):
        lower_bound_chain(B_SL2, t(B_SL2, 0), t(B_SL2, -1))


def test_lower_bound_telescopes_along_chains():
    chain = coroot_chain(A2, (2, 2), (4, 5), 1)
    types = [t(B_A2, *mu) for mu in chain]  # increasing in the order
    incs = [lower_bound_chain(B_A2, a, b) for a, b in zip(types, types[1:])]
    d = [degree_functional(B_A2, x) for x in types]
    assert sum(incs) == d[0] - d[-1] - (len(types) - 1)


def test_generic_stability():
    sl2 = B_SL2
    v = generic_stability_check(sl2, NumericalType(sl2, (0,)), 2, -1)
    assert not v.lower_bound_holds and v.expected_dim == -1 and v.dimension_matches
    # find a type of degree 1 on a rank-one parabolic with dim(G/P) = 1: GL2 has odd degrees
    gl2 = build_root_datum(preset="GL2")
    pd = build_parabolic(gl2)
    s = t(pd, -1, 0)
    assert degree_functional(pd, s) == 1 and pd.dim_G_mod_P == 1
    v = generic_stability_check(pd, s, 2, 0)
    assert v.lower_bound_holds and v.expected_dim == 0 and v.dimension_matches
    w = generic_stability_check(sl2, NumericalType(sl2, (-1,)), 0, 3)
    assert w.warnings and w.expected_dim == 3 and not generic_stability_check(sl2, NumericalType(sl2, (-1,)), 2, 0).warnings


def test_star_constants_a2():
    pd = build_parabolic(A2, [0])
    sc = star_constants(A2, pd, 5, 7)
    assert sc.n_beta == {1: 2}
    assert sc.n_beta_alpha == {1: {0: 1}}
    assert (sc.m_I, sc.n_I) == (1, 2)
    assert sc.N_P == 2 * 5 + 7
    chi = sc.chi_beta[1]
    assert chi == tuple(2 * b + a for a, b in zip(*A2.simple_roots))
    assert lattice.dot(A2.simple_coroots[0], chi) == 0


def test_star_constants_degenerate():
    sc = star_constants(A2, B_A2, 4, 9)
    assert sc.n_beta == {0: 1, 1: 1} and sc.m_I == 0 and sc.N_P == 4
    full = star_constants(SL2, build_parabolic(SL2, [0]), 4, 9)
    assert full.n_beta == {} and full.N_P == 4 and (full.m_I, full.n_I) == (0, 1)
    with pytest.raises(ValueError):
        star_constants(SL2, B_SL2, 0, 1)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4"])
def test_star_characters_are_characters_of_p(name):
    rd = build_root_datum(preset=name)
    for i in range(rd.rank_ss):
        pd = build_parabolic(rd, [j for j in range(rd.rank_ss) if j != i])
        sc = star_constants(rd, pd, 1, 1)
        for b, chi in sc.chi_beta.items():
            assert all(lattice.dot(rd.simple_coroots[a], chi) == 0 for a in pd.I)
            rebuilt = [sc.n_beta[b] * x for x in rd.simple_roots[b]]
            for a, k in sc.n_beta_alpha[b].items():
                rebuilt = [u + k * v for u, v in zip(rebuilt, rd.simple_roots[a])]
            assert tuple(rebuilt) == chi


def test_borel_expected_dim():
    for n in range(5):
        assert borel_expected_dim(SL2, (-n,), 0) == 2 * n + 1
    assert borel_expected_dim(SL2, (0,), 1) == 0
    assert borel_expected_dim(A2, (-1, -1), 0) == 7
    for g in range(4):
        assert borel_expected_dim(A2, (0, 0), g) + g * 3 == 3
        assert expected_dimension(B_A2, t(B_A2, 0, 0), g) == borel_expected_dim(A2, (0, 0), g)


def test_instability_degree_bound():
    p = build_parabolic(A2, [0])
    p1 = build_parabolic(A2)
    minimal = [t(p1, 0, 0), t(p1, -1, -1)]
    # (g-1)*2 + 3 - min d = 2 + 3 - 0
    assert instability_degree_bound(p, p1, minimal, 2) == 5
    with pytest.raises(ValueError):
        instability_degree_bound(p1, p, [t(p, 0, 0)], 2)
