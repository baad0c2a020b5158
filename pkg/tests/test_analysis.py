import math

import pytest

from origami_veech.action import orbit
from origami_veech.analysis import cusp_data, curve_profile
from origami_veech.perm import Perm
from origami_veech.surface import L, Ogn, Origami

# (origami, expected: curve genus, cusps s, level l, index d)
GOLDEN_SMALL = [
    (L(2, 2), 0, 2, 2, 3),
    (L(2, 3), 0, 3, 12, 9),
    (L(3, 3), 0, 3, 15, 9),
    (L(2, 4), 0, 5, 60, 18),
    (L(2, 5), 0, 8, 60, 36),
    (L(3, 5), 0, 8, 105, 36),
    (L(2, 6), 0, 10, 420, 54),
    (L(2, 7), 1, 17, 840, 108),
]


@pytest.mark.parametrize("o,g,s,l,d", GOLDEN_SMALL)
def test_golden_rows(o, g, s, l, d):
    table = orbit(o)
    cd = cusp_data(table)
    cp = curve_profile(table)
    assert table.size == d
    assert cp.s == s
    assert cd.level == l
    assert cp.genus == g


def test_cusp_widths_sum_to_index():
    for o in [L(2, 2), L(3, 3), Ogn(3, 9)]:
        cd = cusp_data(o)
        assert sum(c.width for c in cd.cusps) == cd.index
        assert cd.level == math.lcm(*(c.width for c in cd.cusps))


def test_normalised_pair():
    cd = cusp_data(L(3, 3))
    assert (cd.width_infinity, cd.width_zero) == (3, 3)
    cd = cusp_data(L(2, 4))
    assert (cd.width_infinity, cd.width_zero) == (2, 4)


def test_torus():
    torus = Origami(Perm([1]), Perm([1]))
    cd = cusp_data(torus)
    cp = curve_profile(torus)
    assert cd.level == 1
    assert cd.index == 1
    assert cd.minus_identity
    assert (cp.mu, cp.e2, cp.e3, cp.s, cp.genus) == (1, 1, 1, 1, 0)


def test_curve_profile_consistency():
    for o in [L(2, 2), L(2, 3), L(3, 3), L(2, 4)]:
        table = orbit(o)
        cd = cusp_data(table)
        cp = curve_profile(table)
        # mu = d when -I is in the group, d/2 otherwise
        assert cp.mu == (table.size if cd.minus_identity else table.size // 2)
        # genus formula integrality is asserted inside curve_profile
        assert cp.genus >= 0
        assert cp.s <= len(cd.cusps)
