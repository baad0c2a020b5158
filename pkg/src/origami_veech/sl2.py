"""Exact 2x2 unimodular arithmetic, SL2(Z/mZ) orders and permutation models.

Matrix products follow the same convention as permutations: in a word the
leftmost factor is applied last.
"""

import math
from dataclasses import dataclass

from .perm import Perm


def factorint(n):
    """Prime factorisation {p: k} by trial division (moduli are small)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class MatZ:
    """Integer matrix [[a,b],[c,d]] with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant is not 1: %r" % ((self.a, self.b, self.c, self.d),))

    def __mul__(self, other):
        if not isinstance(other, MatZ):
            return NotImplemented
        return MatZ(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return MatZ(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = IDENTITY
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    @property
    def is_identity(self):
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __str__(self):
        return "[[%d,%d],[%d,%d]]" % self.entries()


IDENTITY = MatZ(1, 0, 0, 1)
T = MatZ(1, 1, 0, 1)
TP = MatZ(1, 0, 1, 1)
S = MatZ(0, -1, 1, 0)
NEG_IDENTITY = MatZ(-1, 0, 0, -1)

GEN_T = "T"
GEN_T_INV = "T^-1"
GEN_TP = "T'"
GEN_TP_INV = "T'^-1"
GEN_S = "S"
GEN_S_INV = "S^-1"

GENERATOR_TOKENS = (GEN_T, GEN_T_INV, GEN_TP, GEN_TP_INV, GEN_S, GEN_S_INV)

GENERATOR_MATRICES = {
    GEN_T: T,
    GEN_T_INV: T.inverse(),
    GEN_TP: TP,
    GEN_TP_INV: TP.inverse(),
    GEN_S: S,
    GEN_S_INV: S.inverse(),
}


def parse_matrix(text):
    """Parse the CLI/JSON literal [[a,b],[c,d]]."""
    import json

    rows = json.loads(text)
    (a, b), (c, d) = rows
    return MatZ(int(a), int(b), int(c), int(d))


def word_to_matrix(word):
    """Product of generator matrices; the leftmost factor is applied last."""
    m = IDENTITY
    for tok in word:
        m = m * GENERATOR_MATRICES[tok]
    return m


@dataclass(frozen=True)
class MatMod:
    """Matrix over Z/mZ with determinant 1 mod m."""

    m: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("modulus must be positive")
        for e in (self.a, self.b, self.c, self.d):
            if not 0 <= e < max(self.m, 1):
                raise ValueError("entry %d not reduced mod %d" % (e, self.m))
        if (self.a * self.d - self.b * self.c) % self.m != 1 % self.m:
            raise ValueError("determinant is not 1 mod %d" % self.m)

    @classmethod
    def reduce(cls, mat, m):
        return cls(m, mat.a % m, mat.b % m, mat.c % m, mat.d % m)

    def __mul__(self, other):
        if not isinstance(other, MatMod) or other.m != self.m:
            return NotImplemented
        m = self.m
        return MatMod(
            m,
            (self.a * other.a + self.b * other.c) % m,
            (self.a * other.b + self.b * other.d) % m,
            (self.c * other.a + self.d * other.c) % m,
            (self.c * other.b + self.d * other.d) % m,
        )

    def inverse(self):
        m = self.m
        return MatMod(m, self.d % m, -self.b % m, -self.c % m, self.a % m)

    @property
    def is_identity(self):
        m = self.m
        return (self.a, self.b, self.c, self.d) == (1 % m, 0, 0, 1 % m)

    def entries(self):
        return (self.a, self.b, self.c, self.d)


def sl2_order(m):
    """|SL2(Z/mZ)| = m^3 * prod over p|m of (1 - p^-2); exact big integer."""
    if m < 1:
        raise ValueError("modulus must be positive")
    order = m ** 3
    for p in factorint(m):
        order = order * (p * p - 1) // (p * p)
    return order


class CrtDomain:
    """Disjoint union of (Z/q)^2 over the prime-power factors q of m.

    The faithful permutation domain for SL2(Z/mZ): within each block points
    are ordered row-major ((x, y) -> x*q + y), blocks by increasing q.
    """

    def __init__(self, m):
        if m < 2:
            raise ValueError("CRT domain needs modulus >= 2")
        self.modulus = m
        self.prime_powers = tuple(
            sorted(p ** k for p, k in factorint(m).items())
        )
        offsets = []
        total = 0
        for q in self.prime_powers:
            offsets.append(total)
            total += q * q
        self._offsets = tuple(offsets)
        self.total_points = total

    def __repr__(self):
        return "CrtDomain(m=%d, blocks=%r, points=%d)" % (
            self.modulus,
            self.prime_powers,
            self.total_points,
        )


def perm_rep(mat, dom):
    """Faithful permutation of the CRT domain induced by v -> M*v per block.

    M -> perm_rep(M) is a homomorphism into Sym(domain) compatible with the
    package's composition convention, and perm_rep(M) is the identity iff
    M = I in SL2(Z/mZ).
    """
    if isinstance(mat, MatZ):
        mat = MatMod.reduce(mat, dom.modulus)
    elif mat.m != dom.modulus:
        raise ValueError("matrix modulus %d != domain modulus %d" % (mat.m, dom.modulus))
    img = [0] * dom.total_points
    for q, off in zip(dom.prime_powers, dom._offsets):
        a, b, c, d = (mat.a % q, mat.b % q, mat.c % q, mat.d % q)
        for x in range(q):
            for y in range(q):
                nx = (a * x + b * y) % q
                ny = (c * x + d * y) % q
                img[off + x * q + y] = off + nx * q + ny
    return Perm._from0(img)


def mpde(n, N):
    """Maximal prime divisor equivalent of n in N (Definition of mpde).

    The largest divisor t of N with the same prime divisors as n; then n | t
    and gcd(t, N/t) = 1.
    """
    if n < 1 or N % n != 0:
        raise ValueError("n must be a positive divisor of N")
    t = 1
    for p in factorint(n):
        rest = N
        power = 1
        while rest % p == 0:
            rest //= p
            power *= p
        t *= power
    assert N % t == 0 and t % n == 0 and math.gcd(t, N // t) == 1
    return t
