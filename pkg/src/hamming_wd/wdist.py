"""Exact weight distributions of H(m, q) by recursion.

``theorem1_distribution`` evaluates, for h = 1..n,

    h! C_h = (-1)^h q^(m(h-1)) (q^m - 1)
             + sum_{i<h} (-1)^(h+i+1) C_i sum_{t=i}^{h} t! S(h,t) q^(h-t) (q-1)^(t-i) C(n-i, t-i)

in exact integer arithmetic, for every prime power q and every m >= 2.
``binary_recurrence_distribution`` is the classical three-term recurrence for
q = 2 and serves as an independent check.
"""

from dataclasses import dataclass

from .errors import BudgetExceeded, DivisibilityViolation, NegativeCount
from .exactmath import binomial, factorial, stirling2, surjection_rows
from .hamming import CodeParams, code_params

# Full recursions beyond this many steps are refused unless max_h is given.
MAX_RECURSION_STEPS = 1 << 16


@dataclass(frozen=True)
class WeightDistribution:
    params: CodeParams
    counts: tuple
    partial: bool = False

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if not self.partial and len(self.counts) != self.params.n + 1:
            raise ValueError(f"expected {self.params.n + 1} counts, got {len(self.counts)}")

    def __getitem__(self, h):
        return self.counts[h]

    def __len__(self):
        return len(self.counts)

    def total(self):
        return sum(self.counts)

    def violations(self):
        """Structural invariants that fail, as human-readable strings."""
        bad = []
        c = self.counts
        for h, want in ((0, 1), (1, 0), (2, 0)):
            if h < len(c) and c[h] != want:
                bad.append(f"C_{h} = {c[h]}, expected {want}")
        if any(x < 0 for x in c):
            bad.append("negative count")
        if not self.partial and self.total() != self.params.size:
            bad.append(f"sum of counts {self.total()} != q^k = {self.params.size}")
        return bad

    def check(self):
        bad = self.violations()
        if bad:
            raise AssertionError(f"{self.params}: " + "; ".join(bad))
        return self

    def first_mismatch(self, other):
        """Smallest h where the two distributions differ, or None."""
        for h in range(max(len(self), len(other))):
            a = self.counts[h] if h < len(self) else None
            b = other.counts[h] if h < len(other) else None
            if a != b:
                return h
        return None


def _exact_div(num, den, what):
    quotient, rem = divmod(num, den)
    if rem:
        raise DivisibilityViolation(f"{what}: {num} is not divisible by {den}")
    if quotient < 0:
        raise NegativeCount(f"{what}: negative value {quotient}")
    return quotient


def theorem1_step(h, prefix, params):
    """C_h from C_0..C_{h-1}, evaluating the recursion term by term."""
    q, m, n = params.q, params.m, params.n
    if not 1 <= h <= n:
        raise ValueError(f"h must lie in 1..{n}, got {h}")
    if len(prefix) < h:
        raise ValueError(f"need C_0..C_{h - 1}, got {len(prefix)} values")
    rhs = q ** (m * (h - 1)) * (q**m - 1)
    if h % 2:
        rhs = -rhs
    for i in range(h):
        inner = 0
        for t in range(i, h + 1):
            inner += (
                factorial(t) * stirling2(h, t) * q ** (h - t) * (q - 1) ** (t - i) * binomial(n - i, t - i)
            )
        term = prefix[i] * inner
        rhs += term if (h + i + 1) % 2 == 0 else -term
    if rhs < 0:
        raise NegativeCount(f"h={h}: right-hand side {rhs} is negative")
    return _exact_div(rhs, factorial(h), f"h={h}")


def theorem1_distribution(params, max_h=None):
    """Weight distribution C_0..C_{max_h} (all of it by default).

    Exchanging the order of summation turns the recursion into
    (-1)^h [q^(m(h-1))(q^m-1) - sum_t t!S(h,t) q^(h-t) D_t] where
    D_t = sum_{i} (-1)^i C_i (q-1)^(t-i) C(n-i, t-i) over the known C_i. Each
    D_t is updated once per new C_i, so the whole run costs O(N^2) big-integer
    operations instead of O(N^3).
    """
    q, m, n = params.q, params.m, params.n
    top = n if max_h is None else max_h
    if not 0 <= top <= n:
        raise ValueError(f"max_h must lie in 0..{n}, got {max_h}")
    if top > MAX_RECURSION_STEPS:
        raise BudgetExceeded("recursion steps", top, MAX_RECURSION_STEPS)

    qm1 = q - 1
    lead = q**m - 1
    qmh = q**m
    D = [0] * (top + 1)

    def absorb(i, c_i):
        if not c_i:
            return
        binom = 1
        weight = c_i if i % 2 == 0 else -c_i
        top_arg = n - i
        for j in range(top - i + 1):
            if j:
                binom = binom * (top_arg - j + 1) // j
                weight *= qm1
            D[i + j] += weight * binom

    counts = [1]
    absorb(0, 1)
    fact = 1
    qpow = [1]
    first_term = lead  # q^(m(h-1)) (q^m - 1)
    for h, row in surjection_rows(top):
        if h == 0:
            continue
        fact *= h
        qpow.append(qpow[-1] * q)
        if h > 1:
            first_term *= qmh
        acc = 0
        for t in range(1, h + 1):
            if D[t]:
                acc += row[t] * qpow[h - t] * D[t]
        rhs = first_term - acc
        if h % 2:
            rhs = -rhs
        if rhs < 0:
            raise NegativeCount(f"h={h}: right-hand side {rhs} is negative")
        c_h = _exact_div(rhs, fact, f"h={h}")
        counts.append(c_h)
        absorb(h, c_h)

    dist = WeightDistribution(params, tuple(counts), partial=top < n)
    return dist.check()


def binary_recurrence_distribution(m):
    """Binary Hamming distribution from (i+1)C_{i+1} + C_i + (n-i+1)C_{i-1} = C(n,i)."""
    params = code_params(2, m)
    n = params.n
    if n > MAX_RECURSION_STEPS:
        raise BudgetExceeded("recursion steps", n, MAX_RECURSION_STEPS)
    C = [1, 0]
    binom = 1
    for i in range(1, n):
        binom = binom * (n - i + 1) // i
        num = binom - C[i] - (n - i + 1) * C[i - 1]
        if num < 0:
            raise NegativeCount(f"i={i}: {num} is negative")
        C.append(_exact_div(num, i + 1, f"i={i}"))
    # the i = n instance forces C_{n+1} = 0
    if C[n] + C[n - 1] != 1:
        raise DivisibilityViolation(f"recurrence at i={n} does not close")
    return WeightDistribution(params, tuple(C)).check()
