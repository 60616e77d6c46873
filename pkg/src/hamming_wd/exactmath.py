"""Exact integer combinatorics: factorials, binomials, Stirling numbers."""

import math
from functools import lru_cache

from .errors import DivisibilityViolation


def factorial(n):
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def binomial(n, k):
    """C(n, k) for arbitrarily large nonnegative n; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, k)


@lru_cache(maxsize=None)
def stirling2(h, t):
    """Stirling number of the second kind S(h, t).

    Evaluated as the alternating sum sum_j (-1)^(t-j) C(t,j) j^h followed by
    an exact division by t!.
    """
    if h < 0 or t < 0:
        raise ValueError("stirling2 arguments must be nonnegative")
    total = 0
    for j in range(t + 1):
        term = math.comb(t, j) * j**h
        total += term if (t - j) % 2 == 0 else -term
    quotient, rem = divmod(total, math.factorial(t))
    if rem:
        raise DivisibilityViolation(f"S({h},{t}): alternating sum {total} not divisible by {t}!")
    return quotient


def surjection_rows(hmax):
    """Yield (h, row) for h = 0..hmax where row[t] = t! * S(h, t).

    Rows are built with the recurrence s(h,t) = t * (s(h-1,t) + s(h-1,t-1)),
    which keeps the whole table at O(hmax^2) integer operations.
    """
    row = [1]
    yield 0, row
    for h in range(1, hmax + 1):
        new = [0] * (h + 1)
        for t in range(1, h + 1):
            above = row[t] if t < h else 0
            new[t] = t * (above + row[t - 1])
        row = new
        yield h, row
