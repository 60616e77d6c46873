from itertools import product

import pytest


def naive_prime_field_distribution(p, m):
    """Weight distribution of H(m, p), p prime, by scanning all of GF(p)^n.

    Parity-check columns are built here from scratch (normalized nonzero
    vectors) and every vector is tested against the syndrome equations, so
    nothing is shared with the package code.
    """
    cols = [v for v in product(range(p), repeat=m) if any(v) and v[next(i for i, a in enumerate(v) if a)] == 1]
    n = len(cols)
    counts = [0] * (n + 1)
    for word in product(range(p), repeat=n):
        if all(sum(w * c[r] for w, c in zip(word, cols)) % p == 0 for r in range(m)):
            counts[sum(1 for w in word if w)] += 1
    return counts


@pytest.fixture(scope="session")
def naive_distribution():
    return naive_prime_field_distribution
