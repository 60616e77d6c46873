"""Finite fields GF(p^r).

Elements are plain ints in ``range(q)``: the element with polynomial
coefficients ``c_0 + c_1 x + ... + c_{r-1} x^{r-1}`` is encoded as
``sum(c_i * p**i)``. Enumerating ``range(q)`` therefore lists 0 first, then 1,
and for GF(4) gives ``0, 1, x, x+1``.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from .errors import DivisionByZero, NotAPrimePower


def prime_power(q):
    """Return (p, r) with q == p**r, or raise NotAPrimePower."""
    if not isinstance(q, int) or q < 2:
        raise NotAPrimePower(q)
    p = None
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return q, 1
    r = 0
    rest = q
    while rest % p == 0:
        rest //= p
        r += 1
    if rest != 1:
        raise NotAPrimePower(q)
    return p, r


# -- polynomials over GF(p), little-endian coefficient lists --

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        a = _trim(a)
    return a


def _monic_polys(p, degree):
    for lower in product(range(p), repeat=degree):
        yield list(lower) + [1]


def is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _polymod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p, r):
    """Monic irreducible of degree r, smallest when the lower coefficients
    (c_0, c_1, ..., c_{r-1}) are compared as a tuple."""
    # itertools.product varies c_0 slowest, so candidates arrive in order
    for poly in _monic_polys(p, r):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {r} over GF({p})")


@dataclass(frozen=True)
class Field:
    p: int
    r: int
    modulus: tuple = field(repr=False)

    @property
    def q(self):
        return self.p**self.r

    def __len__(self):
        return self.q

    def elements(self):
        return list(range(self.q))

    def coeffs(self, a):
        out = []
        for _ in range(self.r):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs):
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + c % self.p
        return a

    def _check(self, *elems):
        for a in elems:
            if not 0 <= a < self.q:
                raise ValueError(f"{a} is not an element of GF({self.q})")

    def add(self, a, b):
        self._check(a, b)
        if self.r == 1:
            return (a + b) % self.p
        return self.from_coeffs([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a):
        self._check(a)
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        self._check(a, b)
        if self.r == 1:
            return a * b % self.p
        x, y = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.r - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        return self.from_coeffs(_polymod([c % self.p for c in prod], self.modulus, self.p))

    def pow(self, a, e):
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @cached_property
    def add_table(self):
        q = self.q
        t = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                t[a, b] = self.add(a, b)
        t.flags.writeable = False
        return t

    @cached_property
    def mul_table(self):
        q = self.q
        t = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                t[a, b] = self.mul(a, b)
        t.flags.writeable = False
        return t

    def __str__(self):
        return f"GF({self.q})"


def make_field(q):
    p, r = prime_power(q)
    if r == 1:
        return Field(p, 1, (0, 1))
    return Field(p, r, smallest_irreducible(p, r))


def format_element(F, a, var="x"):
    """Human-readable polynomial form, e.g. ``x+1`` in GF(4)."""
    terms = []
    for i, c in enumerate(F.coeffs(a)):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(reversed(terms)) or "0"
