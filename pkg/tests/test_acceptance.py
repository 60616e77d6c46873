"""Acceptance criteria for the recursion engine and its tooling.

Each test records one PASS/FAIL line; the lines are printed together at the
end of the module. Run standalone with ``python tests/test_acceptance.py``.
"""

import json
import random
import sys
import time

import pytest

from hamming_wd.cli import main
from hamming_wd.errors import DivisibilityViolation, NegativeCount
from hamming_wd.export import Cache, from_json
from hamming_wd.hamming import code_params, parity_check_matrix, scale_columns
from hamming_wd.oracles import (
    ENUMERATION_BUDGET,
    brute_force_distribution,
    macwilliams_distribution,
    moment_check,
)
from hamming_wd.wdist import WeightDistribution, binary_recurrence_distribution, theorem1_distribution

BRUTE_GRID = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (5, 2), (7, 2), (8, 2), (9, 2), (4, 3)]
MACWILLIAMS_MAX_N = 300
PRIME_POWERS_TO_9 = [2, 3, 4, 5, 7, 8, 9]
BINARY_M = range(2, 11)

LIMIT_BRUTE_S = 120
LIMIT_MACWILLIAMS_S = 300
LIMIT_BINARY_UP_TO_8_S = 60
LIMIT_BINARY_M10_S = 900

REPORT = []


def record(number, ok, detail):
    REPORT.append(f"[criterion {number}] {'PASS' if ok else 'FAIL'}  {detail}")
    print(REPORT[-1])


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        reporter.write_line("")
        for line in REPORT:
            reporter.write_line(line)


def macwilliams_grid():
    grid = []
    for q in PRIME_POWERS_TO_9:
        m = 2
        while (q**m - 1) // (q - 1) <= MACWILLIAMS_MAX_N:
            grid.append((q, m))
            m += 1
    return grid


class Runs:
    """Every distribution produced by criteria 1-3, plus arithmetic faults."""

    def __init__(self):
        self.pairs = {1: [], 2: [], 3: []}  # (label, recursion, oracle)
        self.faults = []
        self.skipped = []
        self.seconds = {}

    def attempt(self, criterion, label, recursion, oracle):
        try:
            a, b = recursion(), oracle()
        except (DivisibilityViolation, NegativeCount) as exc:
            self.faults.append(f"{label}: {exc!r}")
            return
        self.pairs[criterion].append((label, a, b))


@pytest.fixture(scope="module")
def runs():
    r = Runs()

    start = time.perf_counter()
    for q, m in BRUTE_GRID:
        p = code_params(q, m)
        if p.size > ENUMERATION_BUDGET:
            r.skipped.append(f"({q},{m}) q^k={p.size}")
            continue
        r.attempt(1, f"({q},{m})", lambda p=p: theorem1_distribution(p), lambda p=p: brute_force_distribution(p))
    r.seconds[1] = time.perf_counter() - start

    start = time.perf_counter()
    for q, m in macwilliams_grid():
        p = code_params(q, m)
        r.attempt(2, f"({q},{m})", lambda p=p: theorem1_distribution(p), lambda p=p: macwilliams_distribution(p))
    r.seconds[2] = time.perf_counter() - start

    start = time.perf_counter()
    for m in BINARY_M:
        t0 = time.perf_counter()
        p = code_params(2, m)
        r.attempt(3, f"(2,{m})", lambda p=p: theorem1_distribution(p), lambda m=m: binary_recurrence_distribution(m))
        r.seconds[(3, m)] = time.perf_counter() - t0
    r.seconds[3] = time.perf_counter() - start
    return r


def _mismatches(pairs):
    return [f"{label} first differs at h={a.first_mismatch(b)}" for label, a, b in pairs if a != b]


def test_criterion_1_brute_force(runs):
    bad = _mismatches(runs.pairs[1])
    expected = [(q, m) for q, m in BRUTE_GRID if code_params(q, m).size <= ENUMERATION_BUDGET]
    ok = not bad and len(runs.pairs[1]) == len(expected) and runs.seconds[1] < LIMIT_BRUTE_S
    record(1, ok, f"{len(runs.pairs[1])} codes equal by enumeration in {runs.seconds[1]:.1f}s; "
                  f"over budget: {', '.join(runs.skipped)}" + (f"; {bad}" if bad else ""))
    assert ok


def test_criterion_2_macwilliams(runs):
    grid = macwilliams_grid()
    for must in [(2, 8), (3, 5), (4, 4), (9, 3), (4, 3), (3, 4), (7, 3)]:
        assert must in grid
    bad = _mismatches(runs.pairs[2])
    ok = not bad and len(runs.pairs[2]) == len(grid) and runs.seconds[2] < LIMIT_MACWILLIAMS_S
    record(2, ok, f"{len(runs.pairs[2])} codes with n<={MACWILLIAMS_MAX_N} equal to MacWilliams "
                  f"in {runs.seconds[2]:.1f}s" + (f"; {bad}" if bad else ""))
    assert ok


def test_criterion_3_binary_recurrence(runs):
    bad = _mismatches(runs.pairs[3])
    up_to_8 = sum(runs.seconds[(3, m)] for m in BINARY_M if m <= 8)
    ok = (not bad and len(runs.pairs[3]) == len(BINARY_M)
          and up_to_8 < LIMIT_BINARY_UP_TO_8_S and runs.seconds[(3, 10)] < LIMIT_BINARY_M10_S)
    record(3, ok, f"m=2..10 equal to the binary recurrence; m<=8 in {up_to_8:.2f}s, "
                  f"m=10 in {runs.seconds[(3, 10)]:.2f}s" + (f"; {bad}" if bad else ""))
    assert ok


def test_criterion_4_divisibility(runs):
    ok = not runs.faults
    record(4, ok, "no divisibility or sign fault" if ok else "; ".join(runs.faults))
    assert ok


def test_criterion_5_moments(runs):
    failures = []
    count = 0
    for pairs in runs.pairs.values():
        for label, *dists in pairs:
            for dist in dists:
                count += 1
                if dist.counts[:3] != (1, 0, 0):
                    failures.append(f"{label} C_0..C_2 = {dist.counts[:3]}")
                for res in moment_check(dist):
                    if not res.passed:
                        failures.append(f"{label} order {res.order}: {res.actual} != {res.expected}")
    ok = not failures and count > 0
    record(5, ok, f"orders 0 and 1 exact on {count} distributions" + (f"; {failures}" if failures else ""))
    assert ok


def test_criterion_6_binary_symmetry(runs):
    asym = [label for label, a, b in runs.pairs[3] for d in (a, b) if d.counts != d.counts[::-1]]
    ok = not asym and len(runs.pairs[3]) == len(BINARY_M)
    record(6, ok, "C_h = C_(n-h) for m=2..10" + (f"; asymmetric: {asym}" if asym else ""))
    assert ok


def test_criterion_7_column_scaling():
    rng = random.Random(20261015)
    failures = []
    for q, m in [(3, 3), (4, 2)]:
        p = code_params(q, m)
        H = parity_check_matrix(p)
        reference = brute_force_distribution(p)
        for trial in range(10):
            Hs = scale_columns(H, [rng.randrange(1, q) for _ in range(p.n)])
            if brute_force_distribution(p, H=Hs) != reference:
                failures.append(f"({q},{m}) trial {trial}")
    ok = not failures
    record(7, ok, "10 random column scalings each of (3,3) and (4,2) preserve the distribution"
                  + (f"; {failures}" if failures else ""))
    assert ok


def test_criterion_8_cli_contract(tmp_path, capsys):
    out = tmp_path / "h28.json"
    code_dist = main(["dist", "--q", "2", "--m", "8", "--format", "json", "--out", str(out)])
    text = out.read_text()
    parsed = from_json(text)
    reference = theorem1_distribution(code_params(2, 8))
    big = max(int(c) for c in json.loads(text)["counts"])
    round_trip = code_dist == 0 and parsed == reference and big > 2**64

    code_ok = main(["verify", "--q", "2", "--m", "4"])
    p = code_params(2, 3)
    cache_dir = tmp_path / "cache"
    Cache(cache_dir).store(WeightDistribution(p, (1, 0, 0, 8, 6, 0, 0, 1)), None)
    code_bad = main(["verify", "--q", "2", "--m", "3", "--cache-dir", str(cache_dir)])
    code_invalid = main(["dist", "--q", "6", "--m", "2"])
    capsys.readouterr()

    codes = (code_ok, code_bad, code_invalid)
    ok = round_trip and codes == (0, 1, 2)
    record(8, ok, f"(2,8) JSON round trip lossless (max count {big.bit_length()} bits); "
                  f"exit codes success/mismatch/q=6 = {codes}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
