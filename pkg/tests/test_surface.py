import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from origami_veech import surface as sf
from origami_veech.perm import Perm, parse_cycles
from origami_veech.surface import (
    Cr2,
    L,
    NotTransitiveError,
    Ogn,
    Origami,
    canonical_form,
    classify_h2_orbit,
    cylinders,
    enumerate_origamis,
    format_origami,
    genus,
    integer_weierstrass_count,
    is_reduced,
    origami_from_canonical,
    origami_from_json,
    origami_to_json,
    parse_origami,
    period_lattice,
    stratum,
    vertex_data,
    weierstrass_involution,
)


def random_origami(rng, n):
    while True:
        pa = list(range(1, n + 1))
        pb = list(range(1, n + 1))
        rng.shuffle(pa)
        rng.shuffle(pb)
        try:
            return Origami(Perm(pa), Perm(pb))
        except NotTransitiveError:
            continue


def test_validation():
    with pytest.raises(NotTransitiveError):
        Origami(parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4))
    with pytest.raises(ValueError):
        Origami(Perm([2, 1]), Perm([1, 2, 3]))


def test_parse_format_roundtrip():
    o = Ogn(3, 9)
    assert parse_origami(format_origami(o)) == o
    assert format_origami(o) == "(1,4,7,8,9)|(1,2,3)(4,5,6)"
    o2 = parse_origami("(1,2)|(2,3) n=3")
    assert o2.n == 3
    with pytest.raises(ValueError):
        parse_origami("(1,2)(1,3)")  # no separator
    with pytest.raises(NotTransitiveError):
        parse_origami("(1,2)|() n=3")


def test_json_roundtrip():
    o = L(3, 3)
    data = origami_to_json(o)
    assert data == {"n": 5, "r": [2, 3, 1, 4, 5], "u": [4, 2, 3, 5, 1]}
    assert origami_from_json(data) == o
    with pytest.raises(ValueError):
        origami_from_json({"n": 3, "r": [1, 2], "u": [1, 2, 3]})


def test_vertex_data_example():
    vd = vertex_data(Ogn(3, 9))
    assert vd.classes == ((1, 2, 5, 7, 4), (3,), (6,), (8,), (9,))
    assert sorted(vd.cone_angles, reverse=True) == [5, 1, 1, 1, 1]
    assert sorted(vd.zero_orders, reverse=True) == [4, 0, 0, 0, 0]


def test_genus_and_stratum():
    assert genus(Ogn(3, 9)) == 3
    assert stratum(Ogn(3, 9)) == (4,)
    assert genus(L(2, 2)) == 2
    assert stratum(L(2, 2)) == (2,)
    torus = Origami(Perm([1]), Perm([1]))
    assert genus(torus) == 1
    assert stratum(torus) == ()
    assert stratum(Ogn(4, 12)) == (6,)


def test_period_lattice_and_reduced():
    assert period_lattice(Origami(Perm([2, 1]), Perm([1, 2]))).index == 2
    assert period_lattice(Origami(Perm([2, 1]), Perm([2, 1]))).index == 2
    assert is_reduced(L(3, 3))
    assert is_reduced(Ogn(3, 9))
    assert is_reduced(Origami(Perm([1]), Perm([1])))
    # 4-square unreduced: two 2x1 tori stacked
    o = parse_origami("(1,2)(3,4)|(1,3)(2,4)")
    assert not is_reduced(o)


def test_cylinders_L():
    for direction in ("horizontal", "vertical"):
        cyls = cylinders(L(3, 3), direction)
        assert sorted((c.width, c.height) for c in cyls) == [(1, 2), (3, 1)]
    assert sum(c.width * c.height for c in cylinders(L(4, 2), "horizontal")) == 5


def test_cylinders_one_cylinder_torus_cover():
    o = Origami(parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4))
    horiz = cylinders(o, "horizontal")
    assert [(c.width, c.height) for c in horiz] == [(4, 1)]


def test_cylinders_square_torus_stack():
    # 2x2 torus: two rows glued into one 2-wide 2-tall cylinder
    o = parse_origami("(1,2)(3,4)|(1,3)(2,4)")
    horiz = cylinders(o, "horizontal")
    assert [(c.width, c.height) for c in horiz] == [(2, 2)]


def test_canonical_form_conjugation_invariance():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randrange(2, 9)
        o = random_origami(rng, n)
        g = list(range(1, n + 1))
        rng.shuffle(g)
        g = Perm(g)
        conj = Origami(g * o.sigma_a * g.inverse(), g * o.sigma_b * g.inverse())
        assert canonical_form(o) == canonical_form(conj)


def test_canonical_form_separates():
    assert canonical_form(L(2, 4)) != canonical_form(L(3, 3))
    rep = origami_from_canonical(canonical_form(Ogn(3, 9)))
    assert canonical_form(rep) == canonical_form(Ogn(3, 9))


def test_families():
    assert L(3, 3).n == 5
    assert format_origami(Cr2(5)) == "(1,2,3,4,5)|(1,2)"
    assert Ogn(3, 9) == parse_origami("(1,4,7,8,9)|(1,2,3)(4,5,6)")
    assert genus(Ogn(4, 12)) == 4
    with pytest.raises(ValueError):
        L(1, 3)
    with pytest.raises(ValueError):
        Ogn(2, 5)
    with pytest.raises(ValueError):
        Ogn(3, 6)


def test_weierstrass_involution_properties():
    for o in [L(3, 3), L(2, 4), Cr2(6), Cr2(7), L(4, 4)]:
        pi = weierstrass_involution(o)
        assert (pi * pi).is_identity
        assert pi * o.sigma_a == o.sigma_a.inverse() * pi
        assert pi * o.sigma_b == o.sigma_b.inverse() * pi


def test_weierstrass_involution_requires_genus2():
    with pytest.raises(ValueError):
        weierstrass_involution(Ogn(3, 9))


def test_integer_weierstrass_counts():
    assert integer_weierstrass_count(L(3, 3)) == 3
    assert integer_weierstrass_count(L(4, 2)) == 1
    assert integer_weierstrass_count(Cr2(7)) == 1
    assert integer_weierstrass_count(Cr2(6)) == 2


def test_classification():
    assert classify_h2_orbit(L(2, 2)) == sf.ORBIT_SINGLE
    assert classify_h2_orbit(L(2, 5)) == sf.ORBIT_SINGLE  # even n
    assert classify_h2_orbit(L(3, 3)) == sf.ORBIT_B
    assert classify_h2_orbit(L(4, 2)) == sf.ORBIT_A
    assert classify_h2_orbit(L(3, 9)) == sf.ORBIT_B
    assert classify_h2_orbit(L(2, 10)) == sf.ORBIT_A
    with pytest.raises(ValueError):
        classify_h2_orbit(Ogn(3, 9))


def test_enumeration():
    assert len(enumerate_origamis(2)) == 0  # no reduced 2-square origami
    assert len(enumerate_origamis(3)) == 3
    assert len(enumerate_origamis(3, strat=(2,))) == 3
    assert len(enumerate_origamis(4, strat=(2,))) == 9
    assert len(enumerate_origamis(5, strat=(2,))) == 27
    for o in enumerate_origamis(4):
        assert is_reduced(o)
        assert canonical_form(o) == canonical_form(origami_from_canonical(canonical_form(o)))
    with pytest.raises(sf.BudgetError):
        enumerate_origamis(9)


@given(st.integers(2, 5), st.integers(2, 5))
@settings(max_examples=16, deadline=None)
def test_L_geometry_property(a, b):
    o = L(a, b)
    assert o.n == a + b - 1
    assert genus(o) == 2
    assert stratum(o) == (2,)
    assert is_reduced(o)
    widths = sorted((c.width, c.height) for c in cylinders(o, "horizontal"))
    assert widths == sorted({(a, 1), (1, b - 1)})
