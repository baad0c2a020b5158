"""Level index, deficiency and congruence certificates for Veech groups.

For a Veech group Gamma of index d in SL2(Z) and a modulus m, the level
index is e_m = [SL2(Z/mZ) : p_m(Gamma)] and the deficiency is f_m = d/e_m.
The principal congruence group Gamma(m) is never constructed: all indices
are measured through exact BSGS orders of permutation images on the CRT
domain.  f_l = 1 means Gamma is a congruence group of level l; e_l = 1
means it is totally non-congruence.
"""

import math
from dataclasses import dataclass, field

from . import sl2
from .action import veech_generators
from .perm import bsgs_order
from .sl2 import CrtDomain, MatMod, MatZ, mpde, perm_rep, sl2_order
from .surface import BudgetError

DEFAULT_BUDGET = 5000

KIND_COPRIME_CUSP = "CoprimeCusp"
KIND_PARABOLIC_HULL = "ParabolicHull"
KIND_THESTEP = "TheStep"
KIND_LEMMA13 = "Lemma13"


def _check_budget(m, budget):
    dom = CrtDomain(m)
    if dom.total_points > budget:
        raise BudgetError(
            "CRT domain for m=%d needs %d points (budget %d)"
            % (m, dom.total_points, budget)
        )
    return dom


def _dedupe_mod(gens, m):
    """Distinct nontrivial reductions of the generators mod m."""
    out = []
    seen = set()
    for g in gens:
        r = MatMod.reduce(g, m) if isinstance(g, MatZ) else g
        if r.is_identity or r.entries() in seen:
            continue
        seen.add(r.entries())
        out.append(r)
    return out


def image_bsgs(gens, m, budget=DEFAULT_BUDGET):
    """BSGS of the image of <gens> in SL2(Z/mZ); None when the image is
    trivial (including m = 1)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return None
    dom = _check_budget(m, budget)
    reduced = _dedupe_mod(gens, m)
    if not reduced:
        return None
    return bsgs_order([perm_rep(g, dom) for g in reduced])


def image_order(gens, m, budget=DEFAULT_BUDGET):
    """Exact order of the subgroup of SL2(Z/mZ) generated by the reductions."""
    b = image_bsgs(gens, m, budget)
    return 1 if b is None else b.order


@dataclass(frozen=True)
class DeficiencyResult:
    m: int
    image_order: int
    e: int  # [SL2(Z/mZ) : p_m(Gamma)]
    f: int  # d / e = [Gamma(m) : Gamma(m) meet Gamma]
    d: int  # [SL2(Z) : Gamma]


def deficiency(v, m, budget=DEFAULT_BUDGET):
    order = image_order(v.generators, m, budget) if v.generators else (
        image_order([sl2.IDENTITY], m, budget)
    )
    total = sl2_order(m)
    if total % order != 0:
        raise AssertionError("image order does not divide |SL2(Z/%d)|" % m)
    e = total // order
    if v.index % e != 0:
        raise AssertionError("level index e=%d does not divide d=%d" % (e, v.index))
    return DeficiencyResult(m, order, e, v.index // e, v.index)


def is_congruence(v, cusp, budget=DEFAULT_BUDGET):
    """True iff Gamma contains Gamma(l) for its level l (f_l = 1)."""
    return deficiency(v, cusp.level, budget).f == 1


def is_totally_noncongruence(v, cusp, budget=DEFAULT_BUDGET):
    """True iff the image of Gamma mod its level is everything (e_l = 1)."""
    return deficiency(v, cusp.level, budget).e == 1


@dataclass(frozen=True)
class Theorem1Report:
    level: int
    f_level: int
    checked_moduli: tuple
    multiples_checked: tuple  # (m, f_m) for m in {2l, 3l, 4l} within budget
    divisor_pairs: tuple  # ((a, ka), (f_a, f_ka)) samples
    violations: tuple  # human-readable strings, expected empty

    @property
    def ok(self):
        return not self.violations


def verify_theorem1(v, cusp, m_max, budget=DEFAULT_BUDGET):
    """Check minimality of the deficiency at the level and its stability.

    Verifies f_m >= f_l for every m <= m_max, f_{k*l} = f_l for k in
    {2, 3, 4}, and f_{k*a} | f_a on all pairs (a, k*a) with both <= m_max;
    moduli whose CRT domain exceeds the budget are skipped.
    """
    l = cusp.level
    f = {}

    def f_of(m):
        if m not in f:
            f[m] = deficiency(v, m, budget).f
        return f[m]

    violations = []
    f_l = f_of(l)
    checked = []
    for m in range(1, m_max + 1):
        try:
            fm = f_of(m)
        except BudgetError:
            continue
        checked.append(m)
        if fm < f_l:
            violations.append("f_%d = %d < f_%d = %d" % (m, fm, l, f_l))
    multiples = []
    for k in (2, 3, 4):
        try:
            fkl = f_of(k * l)
        except BudgetError:
            continue
        multiples.append((k * l, fkl))
        if fkl != f_l:
            violations.append("f_%d = %d != f_%d = %d" % (k * l, fkl, l, f_l))
    pairs = []
    for a in checked:
        for ka in range(2 * a, m_max + 1, a):
            if ka in f:
                pairs.append(((a, ka), (f[a], f[ka])))
                if f[a] % f[ka] != 0:
                    violations.append(
                        "f_%d = %d does not divide f_%d = %d"
                        % (ka, f[ka], a, f[a])
                    )
    return Theorem1Report(
        l, f_l, tuple(checked), tuple(multiples), tuple(pairs), tuple(violations)
    )


@dataclass(frozen=True)
class Certificate:
    """A re-checkable witness; data holds everything needed to re-verify."""

    kind: str
    data: dict = field(compare=False)
    verdict: bool


def point_cusp_widths(table):
    """(a_i, b_i) per orbit point: the T- and T'-cycle lengths through it."""
    return tuple(
        (
            table.sigma_T.cycle_length_at(i),
            table.sigma_Tprime.cycle_length_at(i),
        )
        for i in range(1, table.size + 1)
    )


def coprime_cusp_certificate(table):
    """Witness pair of orbit points with coprime normalised cusp widths.

    If points i, j satisfy gcd(lcm(a_i, b_i), lcm(a_j, b_j)) = 1 then the
    image of Gamma mod its level is all of SL2(Z/lZ) (e_l = 1).  Returns
    None when no such pair exists.
    """
    widths = point_cusp_widths(table)
    norms = [math.lcm(a, b) for a, b in widths]
    for i in range(len(norms)):
        for j in range(i + 1, len(norms)):
            if math.gcd(norms[i], norms[j]) == 1:
                return Certificate(
                    KIND_COPRIME_CUSP,
                    {
                        "point_i": i + 1,
                        "point_j": j + 1,
                        "widths_i": widths[i],
                        "widths_j": widths[j],
                        "n_i": norms[i],
                        "n_j": norms[j],
                    },
                    True,
                )
    return None


def _crt_pair(r1, m1, r2, m2):
    g, x, _ = _extgcd(m1, m2)
    assert g == 1
    m = m1 * m2
    return (r1 + (r2 - r1) * x % m2 * m1) % m


def _extgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def crt_matrix(mat_n, n, mat_m, m):
    """The matrix mod n*m that is mat_n mod n and mat_m mod m (gcd(n,m)=1)."""
    if math.gcd(n, m) != 1:
        raise ValueError("moduli are not coprime")
    if n == 1:
        return MatMod.reduce(mat_m, m) if isinstance(mat_m, MatZ) else mat_m
    if m == 1:
        return MatMod.reduce(mat_n, n) if isinstance(mat_n, MatZ) else mat_n
    en = mat_n.entries()
    em = mat_m.entries()
    entries = [_crt_pair(en[k] % n, n, em[k] % m, m) for k in range(4)]
    return MatMod(n * m, *entries)


def check_thestep(v, cusp, N, M, budget=DEFAULT_BUDGET):
    """Verify that p_l(Gamma) contains {I} x SL2(Z/MZ).

    Preconditions: N*M = l, gcd(N, M) = 1 and lcm(width_infinity,
    width_zero) divides N.  The conclusion is checked by sifting the CRT
    elements (I mod N, T mod M) and (I mod N, T' mod M) through the BSGS of
    the image of Gamma mod l; they generate {I} x SL2(Z/MZ).
    """
    l = cusp.level
    if N * M != l:
        raise ValueError("N*M = %d != level %d" % (N * M, l))
    if math.gcd(N, M) != 1:
        raise ValueError("gcd(N, M) = %d != 1" % math.gcd(N, M))
    n0 = math.lcm(cusp.width_infinity, cusp.width_zero)
    if N % n0 != 0:
        raise ValueError(
            "lcm of the base-point widths (%d) does not divide N=%d" % (n0, N)
        )
    data = {"N": N, "M": M, "level": l, "base_widths_lcm": n0}
    if M == 1:
        return Certificate(KIND_THESTEP, data, True)
    b = image_bsgs(v.generators, l, budget)
    dom = CrtDomain(l)
    verdict = True
    for mat in (sl2.T, sl2.TP):
        x = crt_matrix(sl2.IDENTITY, N, mat, M)
        if b is None or not b.contains(perm_rep(x, dom)):
            verdict = False
    return Certificate(KIND_THESTEP, data, verdict)


def check_lemma13(table, point1, point2, budget=DEFAULT_BUDGET):
    """Parabolic transfer between two orbit points.

    With cusp pairs (a1, b1) at point1 and (a2, b2) at point2 and N the
    maximal divisor of the level with the prime support of lcm(a1, b1), set
    g1 = gcd(a2, N) and g2 = gcd(b2, N); then [[1,g1],[0,1]] and
    [[1,0],[g2,1]] must lie in the image mod l of the Veech group of
    point2's surface.  Verified by sifting.
    """
    widths = point_cusp_widths(table)
    a1, b1 = widths[point1 - 1]
    a2, b2 = widths[point2 - 1]
    l = math.lcm(*(a for a, _ in widths))
    N = mpde(math.lcm(a1, b1), l)
    g1 = math.gcd(a2, N)
    g2 = math.gcd(b2, N)
    data = {
        "point1": point1,
        "point2": point2,
        "widths1": (a1, b1),
        "widths2": (a2, b2),
        "level": l,
        "N": N,
        "g1": g1,
        "g2": g2,
    }
    base_gens = veech_generators(table).generators
    conj = table.matrices[point2 - 1]
    conj_inv = conj.inverse()
    gens2 = [conj * g * conj_inv for g in base_gens]
    b = image_bsgs(gens2, l, budget)
    dom = CrtDomain(l)
    verdict = True
    for mat in (MatZ(1, g1, 0, 1), MatZ(1, 0, g2, 1)):
        if b is None or not b.contains(perm_rep(mat, dom)):
            verdict = False
    return Certificate(KIND_LEMMA13, data, verdict)


def parabolic_hull(table, m, budget=DEFAULT_BUDGET):
    """Order of the subgroup of SL2(Z/mZ) generated by the conjugated
    parabolic cusp elements A_i^-1 T^{a_i} A_i and A_i^-1 T'^{b_i} A_i over
    all orbit points i; always divides image_order of the Veech group."""
    if m == 1:
        return 1
    gens = []
    for i, (a, b) in enumerate(point_cusp_widths(table)):
        mat = table.matrices[i]
        mat_inv = mat.inverse()
        gens.append(mat_inv * (sl2.T ** a) * mat)
        gens.append(mat_inv * (sl2.TP ** b) * mat)
    return image_order(gens, m, budget)
