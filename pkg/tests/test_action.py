import random

import pytest

from origami_veech import sl2
from origami_veech.action import (
    apply_generator,
    apply_matrix,
    matrix_to_word,
    orbit,
    sigma_for_matrix,
    veech_generators,
)
from origami_veech.perm import parse_cycles
from origami_veech.sl2 import (
    GEN_S,
    GEN_S_INV,
    GEN_T,
    GEN_T_INV,
    GEN_TP,
    GEN_TP_INV,
    MatZ,
    word_to_matrix,
)
from origami_veech.surface import L, NotReducedError, Ogn, Origami, canonical_form, format_origami, parse_origami


def rand_matrix(rng, length=10):
    m = sl2.IDENTITY
    for _ in range(rng.randrange(0, length)):
        m = m * rng.choice(
            [sl2.T, sl2.TP, sl2.S, sl2.T.inverse(), sl2.TP.inverse()]
        )
    return m


def test_generator_tables():
    o = Ogn(3, 9)
    a, b = o.sigma_a, o.sigma_b
    assert apply_generator(GEN_T, o) == Origami(a, b * a.inverse())
    assert apply_generator(GEN_T_INV, o) == Origami(a, b * a)
    assert apply_generator(GEN_TP, o) == Origami(b.inverse() * a, b)
    assert apply_generator(GEN_TP_INV, o) == Origami(b * a, b)
    assert apply_generator(GEN_S, o) == Origami(b.inverse(), a)
    assert apply_generator(GEN_S_INV, o) == Origami(b, a.inverse())
    with pytest.raises(ValueError):
        apply_generator("X", o)


def test_generator_inverses_cancel():
    o = L(3, 3)
    for tok, inv in [
        (GEN_T, GEN_T_INV),
        (GEN_TP, GEN_TP_INV),
        (GEN_S, GEN_S_INV),
    ]:
        assert apply_generator(inv, apply_generator(tok, o)) == o
        assert apply_generator(tok, apply_generator(inv, o)) == o


def test_T_action_on_L22():
    img = apply_generator(GEN_T, L(2, 2))
    assert format_origami(img) == "(1,2)|(1,2,3)"


def test_matrix_to_word_roundtrip():
    rng = random.Random(77)
    mats = [sl2.IDENTITY, sl2.T, sl2.TP, sl2.S, sl2.NEG_IDENTITY,
            MatZ(0, -1, 1, 5), MatZ(-3, -1, 7, 2)]
    mats += [rand_matrix(rng, 14) for _ in range(150)]
    for m in mats:
        assert word_to_matrix(matrix_to_word(m)) == m


def test_left_action_property():
    rng = random.Random(41)
    o = L(2, 3)
    for _ in range(60):
        a, b = rand_matrix(rng, 6), rand_matrix(rng, 6)
        lhs = apply_matrix(a, apply_matrix(b, o))
        rhs = apply_matrix(a * b, o)
        assert canonical_form(lhs) == canonical_form(rhs)


def test_orbit_requires_reduced():
    with pytest.raises(NotReducedError):
        orbit(parse_origami("(1,2)|(1,2)"))


def test_orbit_sizes():
    assert orbit(L(2, 2)).size == 3
    assert orbit(L(3, 3)).size == 9
    assert orbit(L(2, 4)).size == 18
    assert orbit(Origami(parse_cycles("(1)", 1), parse_cycles("(1)", 1))).size == 1


def test_orbit_coset_structure():
    table = orbit(L(3, 3))
    for i in range(table.size):
        img = apply_matrix(table.matrices[i], table.points[0])
        assert canonical_form(img) == table.encodings[i]
        assert word_to_matrix(list(table.words[i])) == table.matrices[i]
    assert sigma_for_matrix(table, sl2.T) == table.sigma_T
    assert sigma_for_matrix(table, sl2.TP) == table.sigma_Tprime
    # sigma is an anti/homomorphism consistent with the left action
    st = sigma_for_matrix(table, sl2.S * sl2.T)
    assert st == sigma_for_matrix(table, sl2.S) * table.sigma_T


def test_veech_generators_stabilise_base():
    for o in [L(2, 2), L(3, 3), Ogn(3, 9)]:
        vg = veech_generators(o)
        base = vg.table.points[0]
        enc = vg.table.encodings[0]
        assert vg.index == vg.table.size
        assert vg.generators
        for g in vg.generators:
            assert canonical_form(apply_matrix(g, base)) == enc
        assert vg.minus_identity  # all these carry -I


def test_one_cylinder_direction_formula():
    # T^-1 * T'^-1 sends (sigma_a, sigma_b) to (sigma_b*sigma_a, sigma_b^2*sigma_a)
    for o in [Ogn(3, 8), Ogn(3, 9), L(3, 3)]:
        img = apply_matrix(sl2.T.inverse() * sl2.TP.inverse(), o)
        expect = Origami(
            o.sigma_b * o.sigma_a, o.sigma_b * o.sigma_b * o.sigma_a
        )
        assert img == expect
