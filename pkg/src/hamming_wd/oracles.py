"""Independent ground truth for Hamming weight distributions.

Two oracles share nothing with the recursion: exhaustive enumeration of the
codewords over GF(q), and the MacWilliams transform of the closed-form weight
enumerator of the dual (simplex) code.
"""

from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from .errors import BudgetExceeded, DivisibilityViolation, NegativeCount
from .hamming import generator_matrix, parity_check_matrix
from .wdist import WeightDistribution

ENUMERATION_BUDGET = 2**24
MACWILLIAMS_MAX_LENGTH = 4096
_BLOCK = 2**16


@dataclass(frozen=True)
class BivariatePoly:
    """Homogeneous sum_j coeffs[j] x^(n-j) y^j."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("a degree-n homogeneous polynomial has n+1 coefficients")

    @classmethod
    def from_distribution(cls, dist):
        return cls(dist.params.n, tuple(dist.counts))

    def __str__(self):
        n = self.degree
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            factors = []
            for var, e in (("x", n - j), ("y", j)):
                if e == 1:
                    factors.append(var)
                elif e > 1:
                    factors.append(f"{var}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"


# -- exhaustive enumeration --

def _enumerate_weights(G, field):
    """Tally Hamming weights of all codewords message @ G.

    Messages run in lexicographic order over the field's element order. The
    span of the trailing generator rows is materialized once as a block; each
    leading-row combination shifts that block by one offset vector.
    """
    k, n = G.shape
    q = field.q
    add, mul = field.add_table, field.mul_table
    scalars = np.arange(q)

    n_low = 0
    while n_low < k and q ** (n_low + 1) <= _BLOCK:
        n_low += 1
    high_rows, low_rows = G[: k - n_low], G[k - n_low:]

    block = np.zeros((1, n), dtype=np.intp)
    for g in low_rows:
        multiples = mul[scalars[:, None], g[None, :]]  # (q, n)
        block = add[block[:, None, :], multiples[None, :, :]].reshape(-1, n)

    tally = np.zeros(n + 1, dtype=np.int64)
    for msg in product(range(q), repeat=len(high_rows)):
        offset = np.zeros(n, dtype=np.intp)
        for a, g in zip(msg, high_rows):
            if a:
                offset = add[offset, mul[a, g]]
        words = add[block, offset[None, :]] if offset.any() else block
        tally += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    return [int(c) for c in tally]


def brute_force_distribution(params, budget=ENUMERATION_BUDGET, H=None):
    """Enumerate all q^k codewords and count them by weight.

    ``H`` overrides the standard parity-check matrix, e.g. with a column-scaled
    presentation of the same code.
    """
    if params.size > budget:
        raise BudgetExceeded("codeword enumeration", params.size, budget)
    if H is None:
        H = parity_check_matrix(params)
    G = generator_matrix(H)
    counts = _enumerate_weights(np.array(G.entries, dtype=np.intp).reshape(G.rows, G.cols), H.field)
    return WeightDistribution(params, tuple(counts))


# -- MacWilliams --

def simplex_enumerator(params):
    q, m, n = params.q, params.m, params.n
    w = q ** (m - 1)
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    coeffs[w] += q**m - 1
    return BivariatePoly(n, tuple(coeffs))


def _expand(a, b, q):
    """Coefficients in y of (x + (q-1) y)^a (x - y)^b."""
    left = [comb(a, s) * (q - 1) ** s for s in range(a + 1)]
    if b == 0:
        return left
    right = [comb(b, s) if s % 2 == 0 else -comb(b, s) for s in range(b + 1)]
    out = [0] * (a + b + 1)
    for i, x in enumerate(left):
        for j, y in enumerate(right):
            out[i + j] += x * y
    return out


def macwilliams_transform(dual, q, dual_size):
    """Enumerator of C from that of its dual: W(x + (q-1)y, x - y) / |dual|."""
    n = dual.degree
    total = [0] * (n + 1)
    for j, a in enumerate(dual.coeffs):
        if a:
            for s, c in enumerate(_expand(n - j, j, q)):
                total[s] += a * c
    out = []
    for s, c in enumerate(total):
        quotient, rem = divmod(c, dual_size)
        if rem:
            raise DivisibilityViolation(f"coefficient of y^{s}: {c} not divisible by {dual_size}")
        if quotient < 0:
            raise NegativeCount(f"coefficient of y^{s} is negative: {quotient}")
        out.append(quotient)
    return BivariatePoly(n, tuple(out))


def macwilliams_distribution(params, max_length=MACWILLIAMS_MAX_LENGTH):
    if params.n > max_length:
        raise BudgetExceeded("MacWilliams polynomial length", params.n, max_length)
    poly = macwilliams_transform(simplex_enumerator(params), params.q, params.q**params.m)
    return WeightDistribution(params, poly.coeffs)


# -- power moments --

@dataclass(frozen=True)
class MomentResult:
    order: int
    expected: int
    actual: int

    @property
    def passed(self):
        return self.expected == self.actual


def moment_check(dist):
    """Orders 0 and 1 of the power moments of a complete distribution.

    sum C_h = q^k, and sum h C_h = n (q-1) q^(k-1); the latter holds because
    the dual code has no words of weight 1.
    """
    if dist.partial:
        raise ValueError("moment identities need the complete distribution")
    p = dist.params
    return [
        MomentResult(0, p.q**p.k, sum(dist.counts)),
        MomentResult(1, p.n * (p.q - 1) * p.q ** (p.k - 1), sum(h * c for h, c in enumerate(dist.counts))),
    ]
