"""Permutations on finite domains and exact group orders via BSGS.

Points are 1-based in all public I/O.  The composition convention used
throughout the package is "rightmost acts first":

    compose(p, q)(i) == p(q(i))
"""

import math
import re
from array import array

from .kernel import compose as _kcompose
from .kernel import identity as _kidentity
from .kernel import invert as _kinvert
from .kernel import is_identity as _kis_identity


class Perm:
    """An immutable permutation of {1..degree}."""

    __slots__ = ("_img",)

    def __init__(self, images):
        img = tuple(x - 1 for x in images)
        n = len(img)
        if sorted(img) != list(range(n)):
            raise ValueError("images are not a bijection on {1..%d}" % n)
        object.__setattr__(self, "_img", img)

    @classmethod
    def _from0(cls, img0):
        p = object.__new__(cls)
        object.__setattr__(p, "_img", tuple(img0))
        return p

    @classmethod
    def identity(cls, n):
        return cls._from0(range(n))

    @classmethod
    def from_cycles(cls, cycles, n):
        img = list(range(n))
        for cyc in cycles:
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                if not 1 <= x <= n:
                    raise ValueError("point %d outside {1..%d}" % (x, n))
                if img[x - 1] != x - 1:
                    raise ValueError("point %d repeated in cycles" % x)
                img[x - 1] = y - 1
        return cls._from0(img)

    @property
    def degree(self):
        return len(self._img)

    @property
    def images(self):
        """1-based image tuple."""
        return tuple(x + 1 for x in self._img)

    @property
    def images0(self):
        """0-based image tuple (internal indexing)."""
        return self._img

    def __call__(self, i):
        return self._img[i - 1] + 1

    def __mul__(self, other):
        """self * other = compose(self, other): other acts first."""
        if not isinstance(other, Perm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        a, b = self._img, other._img
        return Perm._from0(a[j] for j in b)

    def inverse(self):
        out = [0] * len(self._img)
        for i, j in enumerate(self._img):
            out[j] = i
        return Perm._from0(out)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = Perm.identity(self.degree)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    @property
    def is_identity(self):
        return all(i == j for i, j in enumerate(self._img))

    def cycles(self, include_fixed=True):
        """Cycle decomposition as 1-based tuples; partitions {1..degree}."""
        seen = [False] * len(self._img)
        out = []
        for i in range(len(self._img)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self._img[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self._img[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(x + 1 for x in cyc))
        return out

    def cycle_lengths(self):
        return sorted(len(c) for c in self.cycles())

    def cycle_length_at(self, i):
        """Length of the cycle through the 1-based point i."""
        j = self._img[i - 1]
        k = 1
        while j != i - 1:
            j = self._img[j]
            k += 1
        return k

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles()))

    def to_kernel(self):
        return array("i", self._img)

    @classmethod
    def from_kernel(cls, buf):
        return cls._from0(buf)

    def __eq__(self, other):
        return isinstance(other, Perm) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __repr__(self):
        return "Perm(%r)" % (format_cycles(self),)


def compose(p, q):
    """p after q: result(i) = p(q(i))."""
    return p * q


def inverse(p):
    return p.inverse()


def cycles(p):
    return p.cycles()


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)\s*\)")


def parse_cycles(text, n=None):
    """Parse cycle notation like "(1,4,7,8,9)" or "(1,2,3)(4,5,6)".

    Whitespace-insensitive and 1-based; the degree is the largest label seen
    unless n is given.  "()" and the empty string denote the identity.
    """
    stripped = re.sub(r"\s+", "", text)
    cycs = []
    pos = 0
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != pos:
            raise ValueError("cannot parse cycle notation: %r" % text)
        cycs.append([int(x) for x in m.group(1).split(",")])
        pos = m.end()
    if stripped[pos:] not in ("", "()"):
        raise ValueError("cannot parse cycle notation: %r" % text)
    maxlab = max((max(c) for c in cycs), default=1)
    if n is None:
        n = maxlab
    elif maxlab > n:
        raise ValueError("label %d exceeds degree %d" % (maxlab, n))
    return Perm.from_cycles(cycs, n)


def format_cycles(p):
    """Cycle notation with fixed points omitted; "()" for the identity."""
    out = "".join(
        "(%s)" % ",".join(map(str, c)) for c in p.cycles(include_fixed=False)
    )
    return out or "()"


def orbit_of(gens, start, n):
    """Orbit of the 1-based point start under the group generated by gens."""
    seen = [False] * n
    seen[start - 1] = True
    queue = [start - 1]
    imgs = [g.images0 for g in gens]
    for x in queue:
        for img in imgs:
            y = img[x]
            if not seen[y]:
                seen[y] = True
                queue.append(y)
    return [x + 1 for x in queue]


def is_transitive(gens, n):
    """True iff the group generated by gens is transitive on {1..n}."""
    for g in gens:
        if g.degree != n:
            raise ValueError("degree mismatch")
    return len(orbit_of(gens, 1, n)) == n


class _Level:
    """One level of the stabiliser chain: base point, generators, orbit."""

    __slots__ = ("point", "gens", "u", "uinv", "order_list")

    def __init__(self, point):
        self.point = point  # 0-based
        self.gens = []  # kernel buffers fixing all earlier base points
        self.u = {}
        self.uinv = {}
        self.order_list = []

    def rebuild(self, n):
        ident = _kidentity(n)
        self.u = {self.point: ident}
        self.uinv = {self.point: ident}
        self.order_list = [self.point]
        ginvs = [_kinvert(g) for g in self.gens]
        for x in self.order_list:
            for g, ginv in zip(self.gens, ginvs):
                y = g[x]
                if y not in self.u:
                    self.u[y] = _kcompose(g, self.u[x])
                    self.uinv[y] = _kcompose(self.uinv[x], ginv)
                    self.order_list.append(y)


class Bsgs:
    """Base and strong generating set with exact group order.

    Built by ``bsgs_order``; supports exact membership tests via sifting.
    """

    def __init__(self, domain_size, levels):
        self.domain_size = domain_size
        self._levels = levels
        self.base = tuple(lvl.point + 1 for lvl in levels)
        order = 1
        for lvl in levels:
            order *= len(lvl.order_list)
        self.order = order
        seen = set()
        strong = []
        for lvl in levels:
            for g in lvl.gens:
                key = g.tobytes()
                if key not in seen:
                    seen.add(key)
                    strong.append(Perm.from_kernel(g))
        self.strong_generators = tuple(strong)

    def _strip(self, h, start=0):
        """Sift h (kernel buffer) from the given level; (residue, level)."""
        for idx in range(start, len(self._levels)):
            lvl = self._levels[idx]
            x = h[lvl.point]
            if x not in lvl.uinv:
                return h, idx
            h = _kcompose(lvl.uinv[x], h)
        return h, len(self._levels)

    def contains(self, p):
        if p.degree != self.domain_size:
            raise ValueError(
                "degree mismatch: %d vs domain %d" % (p.degree, self.domain_size)
            )
        h, _ = self._strip(p.to_kernel())
        return _kis_identity(h)

    def __repr__(self):
        return "Bsgs(domain=%d, base=%r, order=%d)" % (
            self.domain_size,
            self.base,
            self.order,
        )


def _first_moved(h):
    for i, j in enumerate(h):
        if i != j:
            return i
    raise AssertionError("identity has no moved point")


def _schreier_sims(gens, n):
    """Deterministic Schreier-Sims on deduplicated non-identity kernel perms."""
    levels = []

    def place(g):
        depth = 0
        while depth < len(levels) and g[levels[depth].point] == levels[depth].point:
            depth += 1
        if depth == len(levels):
            levels.append(_Level(_first_moved(g)))
        for idx in range(depth + 1):
            levels[idx].gens.append(g)

    for g in gens:
        place(g)

    def strip_from(h, start):
        for idx in range(start, len(levels)):
            lvl = levels[idx]
            x = h[lvl.point]
            if x not in lvl.uinv:
                return h, idx
            h = _kcompose(lvl.uinv[x], h)
        return h, len(levels)

    def sims(i):
        lvl = levels[i]
        lvl.rebuild(n)
        seen = set()
        for x in lvl.order_list:
            ux = lvl.u[x]
            for g in lvl.gens:
                y = g[x]
                h = _kcompose(lvl.uinv[y], _kcompose(g, ux))
                if _kis_identity(h):
                    continue
                key = h.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                h2, j = strip_from(h, i + 1)
                if _kis_identity(h2):
                    continue
                if j == len(levels):
                    levels.append(_Level(_first_moved(h2)))
                for l in range(i + 1, j + 1):
                    levels[l].gens.append(h2)
                for l in range(j, i, -1):
                    sims(l)

    for i in range(len(levels) - 1, -1, -1):
        sims(i)
    return levels


def bsgs_order(gens):
    """BSGS of the group generated by gens, with exact order.

    Deterministic for a fixed input order: generators are identity-stripped
    and deduplicated, then added incrementally; a generator already sifting
    through the current chain is skipped.
    """
    if not gens:
        raise ValueError("empty generator list")
    n = gens[0].degree
    for g in gens:
        if g.degree != n:
            raise ValueError("degree mismatch in generator list")
    seen = set()
    pending = []
    for g in gens:
        if g.is_identity:
            continue
        key = g.images0
        if key not in seen:
            seen.add(key)
            pending.append(g.to_kernel())

    essential = []
    levels = []
    result = Bsgs(n, [])
    for g in pending:
        h, _ = result._strip(g)
        if _kis_identity(h):
            continue
        essential.append(g)
        levels = _schreier_sims(list(essential), n)
        result = Bsgs(n, levels)
    return result


def bsgs_contains(b, p):
    """True iff p lies in the group described by the BSGS."""
    return b.contains(p)


def naive_closure(gens, limit=None):
    """Set of all group elements by breadth-first closure (test oracle)."""
    if not gens:
        raise ValueError("empty generator list")
    n = gens[0].degree
    ident = Perm.identity(n)
    elems = {ident.images0: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                p = g * h
                if p.images0 not in elems:
                    if limit is not None and len(elems) >= limit:
                        raise OverflowError("closure exceeds limit %d" % limit)
                    elems[p.images0] = p
                    nxt.append(p)
        frontier = nxt
    return set(elems.values())
