"""Square-tiled surfaces as permutation pairs and their intrinsic geometry.

An origami on n squares is a transitive pair (sigma_a, sigma_b): sigma_a(i)
is the right neighbour of square i, sigma_b(i) its upper neighbour.
"""

import itertools
import json
import math
from dataclasses import dataclass

from .perm import Perm, format_cycles, is_transitive, parse_cycles


class NotTransitiveError(ValueError):
    pass


class NotReducedError(ValueError):
    pass


class BudgetError(RuntimeError):
    pass


class StructureError(RuntimeError):
    """A structural expectation of the surface failed (internal bug signal)."""


class Origami:
    """A connected square-tiled surface given by its neighbour permutations."""

    __slots__ = ("n", "sigma_a", "sigma_b")

    def __init__(self, sigma_a, sigma_b):
        if sigma_a.degree != sigma_b.degree:
            raise ValueError(
                "degree mismatch: %d vs %d" % (sigma_a.degree, sigma_b.degree)
            )
        if not is_transitive([sigma_a, sigma_b], sigma_a.degree):
            raise NotTransitiveError("permutation pair is not transitive")
        object.__setattr__(self, "n", sigma_a.degree)
        object.__setattr__(self, "sigma_a", sigma_a)
        object.__setattr__(self, "sigma_b", sigma_b)

    def __setattr__(self, *a):
        raise AttributeError("Origami is immutable")

    def __reduce__(self):
        return (Origami, (self.sigma_a, self.sigma_b))

    def __eq__(self, other):
        return (
            isinstance(other, Origami)
            and self.sigma_a == other.sigma_a
            and self.sigma_b == other.sigma_b
        )

    def __hash__(self):
        return hash((self.sigma_a, self.sigma_b))

    def __repr__(self):
        return "Origami(%s | %s, n=%d)" % (
            format_cycles(self.sigma_a),
            format_cycles(self.sigma_b),
            self.n,
        )


def make(sigma_a, sigma_b):
    """Validated origami from the right- and up-neighbour permutations."""
    return Origami(sigma_a, sigma_b)


def parse_origami(text):
    """Parse the text grammar "<cycles for sigma_a>|<cycles for sigma_b>".

    Example: "(1,4,7,8,9)|(1,2,3)(4,5,6)".  The degree is inferred from the
    largest label unless a trailing "n=<int>" overrides it.
    """
    n = None
    body = text.strip()
    if "n=" in body:
        body, _, tail = body.rpartition("n=")
        n = int(tail.strip())
    parts = body.split("|")
    if len(parts) != 2:
        raise ValueError("expected '<cycles>|<cycles>' in %r" % text)
    if n is None:
        pa = parse_cycles(parts[0])
        pb = parse_cycles(parts[1])
        n = max(pa.degree, pb.degree)
    return Origami(parse_cycles(parts[0], n), parse_cycles(parts[1], n))


def format_origami(o):
    return "%s|%s" % (format_cycles(o.sigma_a), format_cycles(o.sigma_b))


def origami_to_json(o):
    return {"n": o.n, "r": list(o.sigma_a.images), "u": list(o.sigma_b.images)}


def origami_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    r, u = list(data["r"]), list(data["u"])
    if len(r) != n or len(u) != n:
        raise ValueError("image lists do not match n=%d" % n)
    return Origami(Perm(r), Perm(u))


@dataclass(frozen=True)
class VertexData:
    """Vertex classes of the surface (cycles of the corner map).

    cone_angles[i] is the total angle around class i in multiples of 2*pi;
    zero_orders[i] = cone_angles[i] - 1 is the order of the zero there.
    """

    classes: tuple
    cone_angles: tuple
    zero_orders: tuple


def corner_map(o):
    """The corner map u = sigma_b sigma_a sigma_b^-1 sigma_a^-1 (rightmost
    acts first); u(i) is the next square label naming the same surface vertex
    after a full turn around the bottom-left corner of square i."""
    return o.sigma_b * o.sigma_a * o.sigma_b.inverse() * o.sigma_a.inverse()


def vertex_data(o):
    cls = tuple(corner_map(o).cycles(include_fixed=True))
    angles = tuple(len(c) for c in cls)
    if sum(angles) != o.n:
        raise StructureError("vertex classes do not partition the squares")
    return VertexData(cls, angles, tuple(a - 1 for a in angles))


def genus(o):
    v = len(vertex_data(o).classes)
    if (o.n - v) % 2 != 0:
        raise StructureError("parity violation in genus computation")
    return 1 + (o.n - v) // 2


def stratum(o):
    """Multiset (sorted descending) of the nonzero zero orders; sums to 2g-2."""
    vd = vertex_data(o)
    orders = tuple(sorted((z for z in vd.zero_orders if z > 0), reverse=True))
    if sum(orders) != 2 * genus(o) - 2:
        raise StructureError("stratum does not match the genus")
    return orders


@dataclass(frozen=True)
class PeriodLattice:
    """Abelianised stabiliser-subgroup lattice in Z^2 and its index."""

    vectors: tuple
    index: int


def _lattice_index(vecs):
    """Index of the sublattice of Z^2 spanned by vecs (0 if rank < 2)."""
    a1, b1 = 0, 0  # first Hermite row (a1 > 0 once set)
    b2 = 0  # second row (0, b2)
    for x, y in vecs:
        while x:
            if a1 == 0:
                a1, b1, x, y = x, y, 0, 0
            else:
                q = x // a1
                x, y = x - q * a1, y - q * b1
                if x:
                    a1, b1, x, y = x, y, a1, b1
        b2 = math.gcd(b2, y)
    if a1 < 0:
        a1, b1 = -a1, -b1
    if a1 and b2:
        b1 %= b2
    return abs(a1 * b2)


def period_lattice(o):
    """Reidemeister-Schreier abelianisation of the square-stabiliser subgroup.

    Builds a spanning tree of the square graph under the moves x (sigma_a)
    and y (sigma_b), abelianises the Schreier generator of every edge to an
    (x, y) exponent vector and returns the generated sublattice of Z^2.
    """
    a0 = o.sigma_a.images0
    b0 = o.sigma_b.images0
    w = [None] * o.n  # abelianised tree word per square
    w[0] = (0, 0)
    order = [0]
    for x in order:
        for img, step in ((a0, (1, 0)), (b0, (0, 1))):
            y = img[x]
            if w[y] is None:
                w[y] = (w[x][0] + step[0], w[x][1] + step[1])
                order.append(y)
    vecs = []
    for x in range(o.n):
        for img, step in ((a0, (1, 0)), (b0, (0, 1))):
            y = img[x]
            v = (w[x][0] + step[0] - w[y][0], w[x][1] + step[1] - w[y][1])
            if v != (0, 0):
                vecs.append(v)
    return PeriodLattice(tuple(vecs), _lattice_index(vecs))


def is_reduced(o):
    """True iff the period lattice is all of Z^2 (primitive origami)."""
    return period_lattice(o).index == 1


@dataclass(frozen=True)
class Cylinder:
    direction: str  # "horizontal" | "vertical"
    width: int  # circumference
    height: int
    rows: tuple  # the merged permutation cycles, bottom/left first


def _cylinders_along(cyc_perm, glue_perm, direction, n):
    """Maximal cylinders from the cycles of cyc_perm glued by glue_perm.

    Two adjacent rows merge iff glue_perm maps one cycle setwise onto the
    other and commutes with cyc_perm pointwise on it (translation gluing,
    i.e. no singularity on the interface circle).
    """
    rows = [tuple(c) for c in cyc_perm.cycles(include_fixed=True)]
    row_of = {}
    for idx, row in enumerate(rows):
        for s in row:
            row_of[s] = idx
    succ = [None] * len(rows)
    pred = [None] * len(rows)
    for idx, row in enumerate(rows):
        target = row_of[glue_perm(row[0])]
        if len(rows[target]) != len(row):
            continue
        if any(row_of[glue_perm(s)] != target for s in row[1:]):
            continue
        if any(glue_perm(cyc_perm(s)) != cyc_perm(glue_perm(s)) for s in row):
            continue
        succ[idx] = target
        pred[target] = idx
    def walk(start):
        chain = [start]
        seen.add(start)
        cur = succ[start]
        while cur is not None and cur != start:
            seen.add(cur)
            chain.append(cur)
            cur = succ[cur]
        return chain

    out = []
    seen = set()
    for idx in range(len(rows)):  # open chains first, from their bottom row
        if idx not in seen and pred[idx] is None:
            out.append(walk(idx))
    for idx in range(len(rows)):  # what remains lies on closed loops
        if idx not in seen:
            out.append(walk(idx))
    out = [
        Cylinder(
            direction, len(rows[c[0]]), len(c), tuple(rows[i] for i in c)
        )
        for c in out
    ]
    total = sum(c.width * c.height for c in out)
    if total != n:
        raise StructureError("cylinder areas do not sum to n")
    return sorted(out, key=lambda c: (-c.width, c.height, c.rows))


def cylinders(o, direction):
    """Maximal cylinder decomposition in the given direction."""
    if direction == "horizontal":
        return _cylinders_along(o.sigma_a, o.sigma_b, direction, o.n)
    if direction == "vertical":
        return _cylinders_along(o.sigma_b, o.sigma_a, direction, o.n)
    raise ValueError("direction must be 'horizontal' or 'vertical'")


def canonical_form(o):
    """Byte encoding invariant under simultaneous conjugation.

    Lexicographic minimum, over all base squares, of the relabelling induced
    by first-visit traversal order (sigma_a edge first, then sigma_b).  Equal
    encodings iff the origamis are isomorphic.
    """
    a0 = o.sigma_a.images0
    b0 = o.sigma_b.images0
    n = o.n
    best = None
    for s in range(n):
        lab = [-1] * n
        lab[s] = 0
        order = [s]
        nxt = 1
        for x in order:
            for img in (a0, b0):
                y = img[x]
                if lab[y] < 0:
                    lab[y] = nxt
                    nxt += 1
                    order.append(y)
        enc = bytearray()
        for x in order:
            enc += lab[a0[x]].to_bytes(2, "big")
        for x in order:
            enc += lab[b0[x]].to_bytes(2, "big")
        enc = bytes(enc)
        if best is None or enc < best:
            best = enc
    return best


def origami_from_canonical(enc):
    """Rebuild the representative origami encoded by canonical_form."""
    vals = [int.from_bytes(enc[i : i + 2], "big") for i in range(0, len(enc), 2)]
    n = len(vals) // 2
    return Origami(
        Perm(x + 1 for x in vals[:n]), Perm(x + 1 for x in vals[n:])
    )


def L(a, b):
    """The L-shaped origami L(a,b): an a-square bottom row plus a column of
    b-1 squares above square 1; genus 2, stratum (2)."""
    if a < 2 or b < 2:
        raise ValueError("L(a,b) needs a, b >= 2")
    n = a + b - 1
    sigma_a = Perm.from_cycles([list(range(1, a + 1))], n)
    sigma_b = Perm.from_cycles([[1] + list(range(a + 1, a + b))], n)
    return Origami(sigma_a, sigma_b)


def Cr2(j):
    """The origami Cr(2,j): sigma_a = (1,2,...,j), sigma_b = (1,2)."""
    if j < 2:
        raise ValueError("Cr2(j) needs j >= 2")
    return Origami(
        Perm.from_cycles([list(range(1, j + 1))], j),
        Perm.from_cycles([[1, 2]], j),
    )


def Ogn(g, n):
    """The one-zero family member O_{g,n} (genus g, stratum (2g-2))."""
    if g < 3 or n < 3 * g - 2:
        raise ValueError("Ogn needs g >= 3 and n >= 3g-2")
    a_cycle = list(range(1, 3 * g - 4, 3)) + list(range(3 * g - 2, n + 1))
    b_cycles = [[k, k + 1, k + 2] for k in range(1, 3 * g - 4, 3)]
    return Origami(
        Perm.from_cycles([a_cycle], n), Perm.from_cycles(b_cycles, n)
    )


def weierstrass_involution(o):
    """The square permutation of the affine involution with derivative -I.

    Requires a reduced genus-2 origami.  The involution pi satisfies
    pi*sigma_a = sigma_a^-1*pi, pi*sigma_b = sigma_b^-1*pi and pi*pi = id;
    exactly one such pi must exist.
    """
    if genus(o) != 2:
        raise ValueError("Weierstrass involution needs genus 2")
    if not is_reduced(o):
        raise ValueError("Weierstrass involution needs a reduced origami")
    a0 = o.sigma_a.images0
    b0 = o.sigma_b.images0
    ainv = o.sigma_a.inverse().images0
    binv = o.sigma_b.inverse().images0
    n = o.n
    solutions = []
    for t in range(n):
        pi = [-1] * n
        pi[0] = t
        stack = [0]
        ok = True
        while stack and ok:
            i = stack.pop()
            for img, inv in ((a0, ainv), (b0, binv)):
                j, v = img[i], inv[pi[i]]
                if pi[j] < 0:
                    pi[j] = v
                    stack.append(j)
                elif pi[j] != v:
                    ok = False
                    break
        if not ok or sorted(pi) != list(range(n)):
            continue
        if any(pi[pi[i]] != i for i in range(n)):
            continue
        solutions.append(Perm._from0(pi))
    if not solutions:
        raise StructureError("no -I involution found on a genus-2 origami")
    if len(solutions) > 1:
        raise StructureError("-I involution is not unique")
    return solutions[0]


def integer_weierstrass_count(o):
    """Number of vertex classes fixed by the -I involution.

    The bottom-left corner of square i maps to the top-right corner of
    pi(i), which is the bottom-left corner of sigma_b(sigma_a(pi(i))).
    """
    pi = weierstrass_involution(o)
    vd = vertex_data(o)
    class_of = {}
    for idx, cls in enumerate(vd.classes):
        for s in cls:
            class_of[s] = idx
    image = {}
    for idx, cls in enumerate(vd.classes):
        targets = {class_of[o.sigma_b(o.sigma_a(pi(s)))] for s in cls}
        if len(targets) != 1:
            raise StructureError("involution does not act on vertex classes")
        image[idx] = targets.pop()
    return sum(1 for idx, tgt in image.items() if idx == tgt)


ORBIT_SINGLE = "single"
ORBIT_A = "A"
ORBIT_B = "B"


def classify_h2_orbit(o):
    """SL(2,R)-orbit class of a reduced stratum-(2) origami.

    One single orbit for an even number of squares or n = 3; otherwise the
    integer Weierstrass count separates the orbits A (count 1) and B (3).
    """
    if stratum(o) != (2,):
        raise ValueError("classification applies to stratum (2) only")
    if not is_reduced(o):
        raise ValueError("classification applies to reduced origamis only")
    if o.n % 2 == 0 or o.n == 3:
        return ORBIT_SINGLE
    count = integer_weierstrass_count(o)
    if count == 1:
        return ORBIT_A
    if count == 3:
        return ORBIT_B
    raise StructureError(
        "integer Weierstrass count %d is impossible for odd n" % count
    )


def _partitions(n):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def enumerate_origamis(n, strat=None, budget=8):
    """All reduced origamis with n squares, one canonical representative per
    isomorphism class, sorted by canonical encoding."""
    if n > budget:
        raise BudgetError("enumeration budget exceeded: n=%d > %d" % (n, budget))
    found = {}
    for part in _partitions(n):
        cyc, start = [], 1
        for length in part:
            cyc.append(list(range(start, start + length)))
            start += length
        sigma_a = Perm.from_cycles(cyc, n)
        a0 = sigma_a.images0
        for images in itertools.permutations(range(n)):
            # quick transitivity check before building objects
            seen = 1 << 0
            queue = [0]
            count = 1
            for x in queue:
                for y in (a0[x], images[x]):
                    if not seen >> y & 1:
                        seen |= 1 << y
                        count += 1
                        queue.append(y)
            if count != n:
                continue
            o = Origami(sigma_a, Perm._from0(images))
            if not is_reduced(o):
                continue
            if strat is not None and stratum(o) != tuple(strat):
                continue
            enc = canonical_form(o)
            if enc not in found:
                found[enc] = origami_from_canonical(enc)
    return [found[k] for k in sorted(found)]
