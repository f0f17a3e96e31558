"""Exact arithmetic in GF(q), q = p^e, on integer-coded elements.

An element is an integer in [0, q) whose base-p digits are the coefficients
of the residue polynomial, constant term least significant.  For e = 1 a
code is simply the residue mod p.  Code 0 is the additive identity and
code 1 the multiplicative identity in every field.

The reduction modulus is the lexicographically smallest monic irreducible
polynomial of degree e over F_p, comparing coefficient tuples from the
constant term upward, so element encodings are reproducible across runs.
GF(4) gets x^2 + x + 1.  For e = 1 the modulus is the degree-1 polynomial
x, under which "residue polynomial" degenerates to the residue mod p.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .config import Q_CAP


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return out


def _poly_mod(a, mod, p):
    """Remainder of a modulo the monic polynomial mod, coefficients mod p."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return a[:dm]


def _poly_is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, e: int) -> tuple:
    """Monic irreducible of degree e over F_p, smallest by (c0, c1, ...)."""
    if e == 1:
        return (0, 1)
    for coeffs in product(range(p), repeat=e):
        poly = coeffs + (1,)
        if _poly_is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


class Field:
    """GF(p^e) with a fixed total order on elements (their integer codes)."""

    __slots__ = ("p", "e", "q", "modulus")

    def __init__(self, p: int, e: int = 1):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        q = p**e
        if q > Q_CAP:
            raise ValueError(f"q = {q} exceeds the supported cap {Q_CAP}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = smallest_irreducible(p, e)

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def elements(self) -> range:
        """All element codes in their canonical order."""
        return range(self.q)

    def _check(self, a):
        if not 0 <= a < self.q:
            raise ValueError(f"element code {a} out of range for GF({self.q})")
        return a

    def digits(self, a: int) -> tuple:
        """Base-p digits of a, constant coefficient first, length e."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def encode(self, digits) -> int:
        a = 0
        for d in reversed(tuple(digits)):
            a = a * self.p + d % self.p
        return a

    def add(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.e):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        self._check(a)
        if self.e == 1:
            return (-a) % self.p
        return self.encode((-d) % self.p for d in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.e == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.digits(a), self.digits(b), self.p)
        return self.encode(_poly_mod(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        # a^(q-2) by square and multiply; q <= 2^16 keeps this short.
        result, base, n = 1, a, self.q - 2
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def scalar_mul_vec(self, c: int, v) -> tuple:
        return tuple(self.mul(c, x) for x in v)

    def add_vec(self, u, v) -> tuple:
        return tuple(self.add(a, b) for a, b in zip(u, v))


def field_new(p: int, e: int = 1) -> Field:
    """Construct GF(p^e) with the canonical modulus; p must be prime."""
    return Field(p, e)


@lru_cache(maxsize=16)
def _op_tables(p: int, e: int):
    """(add, mul) tables as q-by-q uint16 arrays, for vectorized extension
    field linear algebra.  Lazily built; prime fields never need them."""
    import numpy as np

    f = Field(p, e)
    q = f.q
    add = np.empty((q, q), dtype=np.uint16)
    mul = np.empty((q, q), dtype=np.uint16)
    for a in range(q):
        for b in range(q):
            add[a, b] = f.add(a, b)
            mul[a, b] = f.mul(a, b)
    add.setflags(write=False)
    mul.setflags(write=False)
    return add, mul


def op_tables(field: Field):
    return _op_tables(field.p, field.e)
