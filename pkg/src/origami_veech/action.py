"""The SL2(Z) action on origamis, orbits and Veech group generators.

The action is a left action: apply_matrix(A*B, o) == apply_matrix(A,
apply_matrix(B, o)).  An origami must be reduced for its stabiliser in
SL2(Z) to be the Veech group of the surface.
"""

from dataclasses import dataclass

from . import sl2
from .perm import Perm
from .sl2 import (
    GEN_S,
    GEN_S_INV,
    GEN_T,
    GEN_T_INV,
    GEN_TP,
    GEN_TP_INV,
    MatZ,
    word_to_matrix,
)
from .surface import NotReducedError, Origami, canonical_form, is_reduced


def apply_generator(token, o):
    """Image of the origami under one standard generator of SL2(Z)."""
    a, b = o.sigma_a, o.sigma_b
    if token == GEN_T:
        return Origami(a, b * a.inverse())
    if token == GEN_T_INV:
        return Origami(a, b * a)
    if token == GEN_TP:
        return Origami(b.inverse() * a, b)
    if token == GEN_TP_INV:
        return Origami(b * a, b)
    if token == GEN_S:
        return Origami(b.inverse(), a)
    if token == GEN_S_INV:
        return Origami(b, a.inverse())
    raise ValueError("unknown generator token %r" % token)


def matrix_to_word(mat):
    """A word in the generator tokens whose product is the given matrix.

    Euclidean reduction of the first column by T^-k and T'^-k steps, then a
    closed form for the residual +/-[[1,b],[0,1]]; verified by round trip.
    """
    def balanced_quotient(x, y):
        q, r = divmod(x, y)
        if 2 * abs(r) > abs(y):
            q += 1
        return q

    word = []
    cur = mat
    while cur.c != 0:
        if cur.a == 0:
            # first column (0, +/-1); one T step makes the corner nonzero
            word.append((GEN_T, 1))
            cur = sl2.T.inverse() * cur
        elif abs(cur.a) > abs(cur.c):
            q = balanced_quotient(cur.a, cur.c)
            word.append((GEN_T, q) if q >= 0 else (GEN_T_INV, -q))
            cur = (sl2.T ** (-q)) * cur
        else:
            q = balanced_quotient(cur.c, cur.a)
            word.append((GEN_TP, q) if q >= 0 else (GEN_TP_INV, -q))
            cur = (sl2.TP ** (-q)) * cur
    # cur = [[a, b], [0, a]] with a = +/-1
    if cur.a == 1:
        tail = [(GEN_T, cur.b)] if cur.b >= 0 else [(GEN_T_INV, -cur.b)]
    else:
        # -T^-b = S^2 * T^-b
        tail = [(GEN_S, 2)]
        tail += [(GEN_T, -cur.b)] if -cur.b >= 0 else [(GEN_T_INV, cur.b)]
    word += tail
    flat = []
    for tok, k in word:
        flat.extend([tok] * k)
    assert word_to_matrix(flat) == mat, "word reconstruction failed"
    return flat


def apply_matrix(mat_or_word, o):
    """Image of the origami under a matrix (or explicit generator word)."""
    if isinstance(mat_or_word, MatZ):
        word = matrix_to_word(mat_or_word)
    else:
        word = list(mat_or_word)
    for tok in reversed(word):  # rightmost factor acts first
        o = apply_generator(tok, o)
    return o


@dataclass(frozen=True)
class OrbitTable:
    """The SL2(Z) orbit of a reduced origami with coset bookkeeping.

    points[i] is an origami with points[i] == apply_matrix(matrices[i],
    points[0]) up to isomorphism; sigma_T and sigma_Tprime describe how T and
    T' permute the orbit points (1-based, matching the points list).
    """

    points: tuple  # Origami per point, index 0 = base
    encodings: tuple  # canonical_form bytes per point
    matrices: tuple  # MatZ coset representatives
    words: tuple  # generator-token words for the representatives
    sigma_T: Perm
    sigma_Tprime: Perm

    @property
    def size(self):
        return len(self.points)


def orbit(o):
    """Breadth-first SL2(Z) orbit of a reduced origami.

    The orbit size equals the index of the Veech group in SL2(Z).
    """
    if not is_reduced(o):
        raise NotReducedError("the SL2(Z) orbit machinery needs a reduced origami")
    steps = (
        (GEN_T, sl2.T),
        (GEN_T_INV, sl2.T.inverse()),
        (GEN_TP, sl2.TP),
        (GEN_TP_INV, sl2.TP.inverse()),
    )
    points = [o]
    encodings = [canonical_form(o)]
    matrices = [sl2.IDENTITY]
    words = [()]
    index = {encodings[0]: 0}
    for i, pt in enumerate(points):
        for tok, mat in steps:
            img = apply_generator(tok, pt)
            enc = canonical_form(img)
            if enc not in index:
                index[enc] = len(points)
                points.append(img)
                encodings.append(enc)
                matrices.append(mat * matrices[i])
                words.append((tok,) + words[i])
    d = len(points)
    img_t = [0] * d
    img_tp = [0] * d
    for i, pt in enumerate(points):
        img_t[i] = index[canonical_form(apply_generator(GEN_T, pt))] + 1
        img_tp[i] = index[canonical_form(apply_generator(GEN_TP, pt))] + 1
    return OrbitTable(
        tuple(points),
        tuple(encodings),
        tuple(matrices),
        tuple(words),
        Perm(img_t),
        Perm(img_tp),
    )


def sigma_for_matrix(table, mat):
    """Permutation of the orbit points induced by an arbitrary matrix."""
    word = matrix_to_word(mat)
    lookup = {enc: i for i, enc in enumerate(table.encodings)}
    img = [0] * table.size
    for i, pt in enumerate(table.points):
        img[i] = lookup[canonical_form(apply_matrix(word, pt))] + 1
    return Perm(img)


@dataclass(frozen=True)
class VeechGroupData:
    """Generators of the stabiliser of the base origami in SL2(Z)."""

    index: int  # = orbit size d
    generators: tuple  # MatZ Schreier generators (with -I when present)
    minus_identity: bool  # whether -I stabilises the surface
    table: OrbitTable


def veech_generators(o_or_table):
    """Schreier generators of the Veech group from the orbit table.

    For every orbit point i and g in {T, T'} the element
    matrices[g(i)]^-1 * g * matrices[i] fixes the base point; the nontrivial
    ones generate the stabiliser.  -I is appended iff it fixes the surface.
    """
    table = o_or_table if isinstance(o_or_table, OrbitTable) else orbit(o_or_table)
    gens = []
    seen = set()
    for sig, mat in ((table.sigma_T, sl2.T), (table.sigma_Tprime, sl2.TP)):
        for i in range(1, table.size + 1):
            j = sig(i)
            g = table.matrices[j - 1].inverse() * mat * table.matrices[i - 1]
            if not g.is_identity and g.entries() not in seen:
                seen.add(g.entries())
                gens.append(g)
    base = table.points[0]
    s2 = apply_generator(GEN_S, apply_generator(GEN_S, base))
    minus = canonical_form(s2) == table.encodings[0]
    if minus and sl2.NEG_IDENTITY.entries() not in seen:
        gens.append(sl2.NEG_IDENTITY)
    return VeechGroupData(table.size, tuple(gens), minus, table)
