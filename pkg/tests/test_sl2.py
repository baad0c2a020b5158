import math
import random

import pytest

from origami_veech import sl2
from origami_veech.sl2 import (
    GEN_T,
    GEN_T_INV,
    GEN_TP,
    CrtDomain,
    MatMod,
    MatZ,
    factorint,
    mpde,
    parse_matrix,
    perm_rep,
    sl2_order,
    word_to_matrix,
)


def brute_sl2_order(m):
    count = 0
    for a in range(m):
        for b in range(m):
            for c in range(m):
                for d in range(m):
                    if (a * d - b * c) % m == 1 % m:
                        count += 1
    return count


def test_factorint():
    assert factorint(1) == {}
    assert factorint(27720) == {2: 3, 3: 2, 5: 1, 7: 1, 11: 1}
    assert factorint(97) == {97: 1}
    with pytest.raises(ValueError):
        factorint(0)


def test_matz_basics():
    assert sl2.T * sl2.T == MatZ(1, 2, 0, 1)
    assert sl2.S * sl2.S == sl2.NEG_IDENTITY
    assert (sl2.S * sl2.T) ** 6 == sl2.IDENTITY
    assert sl2.T.inverse() * sl2.T == sl2.IDENTITY
    assert sl2.T ** -3 == MatZ(1, -3, 0, 1)
    with pytest.raises(ValueError):
        MatZ(1, 0, 0, 2)


def test_s_as_word_in_t_tprime():
    assert word_to_matrix([GEN_T_INV, GEN_TP, GEN_T_INV]) == sl2.S


def test_parse_matrix():
    assert parse_matrix("[[1,1],[0,1]]") == sl2.T
    with pytest.raises(ValueError):
        parse_matrix("[[1,0],[0,2]]")


def test_matmod():
    t5 = MatMod.reduce(sl2.T, 5)
    assert t5.entries() == (1, 1, 0, 1)
    assert (t5 * t5.inverse()).is_identity
    assert MatMod.reduce(sl2.NEG_IDENTITY, 2).is_identity
    with pytest.raises(ValueError):
        MatMod(5, 1, 5, 0, 1)
    with pytest.raises(ValueError):
        MatMod(5, 2, 0, 0, 1)


def test_sl2_order_brute_force():
    for m in range(1, 13):
        assert sl2_order(m) == brute_sl2_order(m)


def test_sl2_order_multiplicativity():
    assert sl2_order(15) == sl2_order(3) * sl2_order(5)
    assert sl2_order(27720) == 13243436236800


def test_crt_domain():
    dom = CrtDomain(12)
    assert dom.prime_powers == (3, 4)
    assert dom.total_points == 9 + 16
    assert CrtDomain(27720).total_points == 340
    with pytest.raises(ValueError):
        CrtDomain(1)


def test_perm_rep_identity_iff_trivial():
    dom = CrtDomain(6)
    assert perm_rep(sl2.IDENTITY, dom).is_identity
    assert not perm_rep(sl2.T, dom).is_identity
    assert not perm_rep(sl2.NEG_IDENTITY, dom).is_identity  # -I != I mod 3


def test_perm_rep_homomorphism():
    rng = random.Random(9)
    dom = CrtDomain(12)
    words = [sl2.T, sl2.TP, sl2.S, sl2.T.inverse(), sl2.TP.inverse()]

    def rand_mat():
        m = sl2.IDENTITY
        for _ in range(rng.randrange(0, 8)):
            m = m * rng.choice(words)
        return m

    for _ in range(100):
        a, b = rand_mat(), rand_mat()
        assert perm_rep(a * b, dom) == perm_rep(a, dom) * perm_rep(b, dom)


def test_perm_rep_faithful_mod_small():
    # distinct reduced matrices give distinct permutations
    dom = CrtDomain(3)
    seen = {}
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 != 1:
                        continue
                    p = perm_rep(MatMod(3, a, b, c, d), dom)
                    assert p not in seen
                    seen[p] = (a, b, c, d)
    assert len(seen) == sl2_order(3)


def test_mpde():
    assert mpde(5, 630) == 5
    assert mpde(6, 360360) == 72
    assert mpde(1, 100) == 1
    assert mpde(15, 180180) == 45
    t = mpde(21, 180180)
    assert t % 21 == 0 and math.gcd(t, 180180 // t) == 1
    with pytest.raises(ValueError):
        mpde(7, 100)
