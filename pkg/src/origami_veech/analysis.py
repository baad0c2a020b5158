"""Cusps, widths, Wohlfahrt level and the modular-curve profile.

Everything here is read off the coset action of SL2(Z) on the orbit of a
reduced origami: cusp widths are the cycle lengths of the T-action on the
cosets, the level is their lcm, and the quotient-curve genus comes from the
standard index/elliptic-point/cusp count formula.
"""

import math
from dataclasses import dataclass

from . import sl2
from .action import OrbitTable, orbit, sigma_for_matrix, veech_generators
from .perm import Perm


@dataclass(frozen=True)
class Cusp:
    """One cusp of the quotient curve H/Gamma.

    width is the T-cycle length on the orbit points; point is the smallest
    1-based orbit index on that cycle; a_width and b_width are the cycle
    lengths of T and T' through that point (the parabolic exponents
    T^a_width and T'^b_width both stabilise the surface at that point).
    """

    point: int
    width: int
    a_width: int
    b_width: int


@dataclass(frozen=True)
class CuspData:
    cusps: tuple  # Cusp per T-cycle, sorted by point
    width_infinity: int  # T-cycle length at the base point
    width_zero: int  # T'-cycle length at the base point
    level: int  # lcm of all cusp widths (Wohlfahrt level when -I present)
    minus_identity: bool  # -I in the Veech group
    index: int  # [SL2(Z) : Gamma] = orbit size


def cusp_data(o_or_table):
    table = o_or_table if isinstance(o_or_table, OrbitTable) else orbit(o_or_table)
    cusps = []
    for cyc in table.sigma_T.cycles(include_fixed=True):
        pt = min(cyc)
        cusps.append(
            Cusp(
                pt,
                len(cyc),
                table.sigma_T.cycle_length_at(pt),
                table.sigma_Tprime.cycle_length_at(pt),
            )
        )
    cusps.sort(key=lambda c: c.point)
    if sum(c.width for c in cusps) != table.size:
        raise AssertionError("cusp widths do not sum to the index")
    level = math.lcm(*(c.width for c in cusps))
    vg = veech_generators(table)
    return CuspData(
        tuple(cusps),
        table.sigma_T.cycle_length_at(1),
        table.sigma_Tprime.cycle_length_at(1),
        level,
        vg.minus_identity,
        table.size,
    )


@dataclass(frozen=True)
class CurveProfile:
    """Genus data of the quotient curve H/Gamma.

    mu is the index of the image of Gamma in PSL2(Z), e2/e3 the numbers of
    elliptic points of order 2/3, s the number of cusps.
    """

    mu: int
    e2: int
    e3: int
    s: int
    genus: int


def curve_profile(o_or_table):
    table = o_or_table if isinstance(o_or_table, OrbitTable) else orbit(o_or_table)
    sig_s = sigma_for_matrix(table, sl2.S)
    sig_s2 = sig_s * sig_s
    # PSL2(Z) cosets = orbits of -I (= S^2) on the SL2(Z) cosets
    classes = sig_s2.cycles(include_fixed=True)
    class_of = {}
    for idx, cyc in enumerate(classes):
        for pt in cyc:
            class_of[pt] = idx
    mu = len(classes)

    def project(sig):
        img = [0] * mu
        for idx, cyc in enumerate(classes):
            img[idx] = class_of[sig(cyc[0])] + 1
        return Perm(img)

    p_s = project(sig_s)
    p_st = project(sig_s * table.sigma_T)  # T acts first
    p_t = project(table.sigma_T)
    assert p_st == p_s * p_t
    assert project(table.sigma_T * sig_s) == p_t * p_s  # order-3 class check
    e2 = sum(1 for i in range(1, mu + 1) if p_s(i) == i)
    e3 = sum(1 for i in range(1, mu + 1) if p_st(i) == i)
    assert e3 == sum(1 for i in range(1, mu + 1) if (p_t * p_s)(i) == i)
    s = len(p_t.cycles(include_fixed=True))
    twelve_g = 12 + mu - 3 * e2 - 4 * e3 - 6 * s
    if twelve_g % 12 != 0:
        raise AssertionError("non-integral quotient-curve genus")
    return CurveProfile(mu, e2, e3, s, twelve_g // 12)
