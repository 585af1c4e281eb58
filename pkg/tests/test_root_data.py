from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parared.errors import InvalidPreset, NotARoot, NotFiniteType
from parared.root_data import (
    Root,
    build_root_datum,
    cartan_matrix,
    coroot_of,
    fundamental_coweights,
    fundamental_weights,
    longest_weyl_action,
    positive_roots,
    root_datum_from_json,
)

PRESETS = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "SL3", "PGL3", "GL2", "GL3"]
EXPECTED_POSITIVE = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "G2": 6,
                     "F4": 24, "E6": 36, "E7": 63, "E8": 120, "SL3": 3, "PGL3": 3, "GL2": 1, "GL3": 3}


def test_sl2():
    rd = build_root_datum(preset="SL2")
    assert rd.rank_ss == 1 and rd.cartan == ((2,),)
    assert rd.pairing(rd.simple_coroots[0], rd.simple_roots[0]) == 2


def test_a2_cartan():
    assert build_root_datum(preset="A2").cartan == ((2, -1), (-1, 2))


@pytest.mark.parametrize("n", [2, 3])
def test_gl_pairing_table(n):
    rd = build_root_datum(preset=f"GL{n}")
    assert (rd.rank_ss, rd.rank_torus) == (n - 1, 1)
    e = lambda i: [1 if k == i else 0 for k in range(n)]
    alpha = [tuple(a - b for a, b in zip(e(i), e(i + 1))) for i in range(n - 1)]
    assert rd.simple_roots == tuple(alpha) and rd.simple_coroots == tuple(alpha)
    standard = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n - 1)] for i in range(n - 1)]
    table = [[rd.pairing(c, r) for r in rd.simple_roots] for c in rd.simple_coroots]
    assert table == standard
    assert rd.group_characters == [[1] * n]  # the determinant


@pytest.mark.parametrize("name", sorted(EXPECTED_POSITIVE))
def test_positive_root_counts(name):
    assert len(positive_roots(build_root_datum(preset=name))) == EXPECTED_POSITIVE[name]


def test_positive_roots_a2_order():
    roots = positive_roots(build_root_datum(preset="A2"))
    assert [g.coeffs for g in roots] == [(0, 1), (1, 0), (1, 1)]


def test_invalid_inputs():
    with pytest.raises(NotFiniteType):
        build_root_datum(cartan=[[2, -2], [-2, 2]])  # affine A1
    with pytest.raises(NotFiniteType):
        build_root_datum(cartan=[[2, -1], [0, 2]])
    with pytest.raises(InvalidPreset):
        build_root_datum(preset="Q7")
    with pytest.raises(InvalidPreset):
        build_root_datum(preset="G3")


@pytest.mark.parametrize("name", PRESETS)
def test_coroots_pair_to_two(name):
    rd = build_root_datum(preset=name)
    for g in positive_roots(rd):
        assert rd.pairing(coroot_of(rd, g), rd.root_vector(g)) == 2


def test_coroot_examples():
    a2 = build_root_datum(preset="A2")
    assert coroot_of(a2, Root((1, 1))) == tuple(a + b for a, b in zip(*a2.simple_coroots))
    sl2 = build_root_datum(preset="SL2")
    assert coroot_of(sl2, Root((1,))) == sl2.simple_coroots[0]
    with pytest.raises(NotARoot):
        coroot_of(a2, Root((1, 2)))


def test_b2_coroot_table_is_transposed():
    b2 = build_root_datum(preset="B2")
    roots = positive_roots(b2)
    short = [g for g in roots if g.coeffs == (0, 1)][0]
    # the coroot of the short simple root is the long simple coroot
    assert coroot_of(b2, short) == b2.simple_coroots[1]
    table = [[b2.pairing(coroot_of(b2, g), b2.root_vector(d)) for d in roots] for g in roots]
    dual = [[b2.pairing(coroot_of(b2, d), b2.root_vector(g)) for d in roots] for g in roots]
    # ratios of squared lengths: <g^, d> * |g|^2 = <d^, g> * |d|^2
    length = {g: (1 if g.coeffs in ((0, 1), (1, 1)) else 2) for g in roots}
    for i, g in enumerate(roots):
        for j, d in enumerate(roots):
            assert table[i][j] * length[g] == dual[i][j] * length[d]
    simple = [[b2.pairing(c, r) for r in b2.simple_roots] for c in b2.simple_coroots]
    assert [list(r) for r in zip(*simple)] == [list(r) for r in zip(*b2.cartan)]


def test_fundamental_weights():
    sl2 = build_root_datum(preset="SL2")
    assert fundamental_weights(sl2)[0].vector == (Fraction(1),)  # alpha = 2 in these coordinates
    assert sl2.simple_roots[0] == (2,)
    a2 = build_root_datum(preset="A2", isogeny="ad")
    w1 = fundamental_weights(a2)[0].vector
    assert w1 == (Fraction(2, 3), Fraction(1, 3))
    torus = build_root_datum(cartan=[], rank_torus=1)
    assert fundamental_weights(torus) == []


@pytest.mark.parametrize("name", PRESETS)
def test_weight_duality(name):
    rd = build_root_datum(preset=name)
    for w in fundamental_weights(rd):
        for b, co in enumerate(rd.simple_coroots):
            assert rd.pairing(co, w.vector) == (1 if b == w.alpha_index else 0)
        for z in rd.central_cocharacters:
            assert rd.pairing(z, w.vector) == 0
    for a, cw in enumerate(fundamental_coweights(rd)):
        for b, r in enumerate(rd.simple_roots):
            assert rd.pairing(cw, r) == (1 if a == b else 0)


def test_longest_element_examples():
    sl2 = build_root_datum(preset="SL2")
    assert longest_weyl_action(sl2, (1,)) == (-1,)
    a2 = build_root_datum(preset="A2")
    assert longest_weyl_action(a2, a2.simple_coroots[0]) == tuple(-x for x in a2.simple_coroots[1])
    assert longest_weyl_action(a2, (0, 0)) == (0, 0)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3", "GL3", "PGL3"])
@given(data=st.data())
def test_longest_element_is_involution(name, data):
    rd = build_root_datum(preset=name)
    mu = tuple(data.draw(st.lists(st.integers(-9, 9), min_size=rd.dim, max_size=rd.dim)))
    once = longest_weyl_action(rd, mu)
    assert longest_weyl_action(rd, once) == mu


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "B3", "D4"])
def test_longest_element_sends_dominant_to_antidominant(name):
    rd = build_root_datum(preset=name)
    rho_check = [sum(c) for c in zip(*fundamental_coweights(rd))]
    image = longest_weyl_action(rd, rho_check)
    assert all(p < 0 for p in rd.simple_pairings(image))
    assert len(rd.longest_word) == len(positive_roots(rd))


def test_json_round_trip(tmp_path):
    for name in ("B3", "GL3", "PGL2"):
        rd = build_root_datum(preset=name)
        assert root_datum_from_json(rd.to_json()) == rd
    path = tmp_path / "rd.json"
    path.write_text('{"cartan": [[2,-1],[-1,2]], "torus_rank": 0, "isogeny": "ad"}')
    ad = root_datum_from_json(path)
    assert ad.simple_roots == ((1, 0), (0, 1))
    assert root_datum_from_json('{"preset": "A2"}') == build_root_datum(preset="A2")


def test_cartan_matrix_bourbaki():
    assert cartan_matrix("G", 2) == [[2, -3], [-1, 2]]
    b3 = cartan_matrix("B", 3)
    assert b3[2][1] == -2
    c3 = cartan_matrix("C", 3)
    assert c3[1][2] == -2
