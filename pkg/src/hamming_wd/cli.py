"""Command-line front end: ``dist``, ``verify`` and ``enumerator``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 resource
budget exceeded.
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidM, NotAPrimePower
from .export import FORMATTERS, Cache, atomic_write
from .hamming import code_params
from .oracles import (
    ENUMERATION_BUDGET,
    MACWILLIAMS_MAX_LENGTH,
    BivariatePoly,
    brute_force_distribution,
    macwilliams_distribution,
    moment_check,
)
from .wdist import binary_recurrence_distribution, theorem1_distribution

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3
ORACLES = ("brute", "macwilliams", "binary", "moments")
CACHE_ENV = "HAMMING_WD_CACHE"

log = logging.getLogger("hamming_wd")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    q: int
    m: int
    max_h: int | None = None
    format: str = "text"
    oracles: tuple | None = None  # None selects every applicable oracle
    out: str | None = None
    cache_dir: str | None = None


def _oracle_list(text):
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    unknown = [s for s in names if s not in ORACLES]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown oracle(s): {', '.join(unknown)}")
    return names


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, required=True, help="field order (a prime power)")
    common.add_argument("--m", type=int, required=True, help="redundancy, at least 2")
    common.add_argument("--max-h", type=int, default=None, help="stop the recursion at this weight")
    common.add_argument("--format", choices=sorted(FORMATTERS), default="text")
    common.add_argument("--oracles", type=_oracle_list, default=None,
                        help=f"comma list from {{{','.join(ORACLES)}}}")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--cache-dir", default=None, help=f"result cache (default: ${CACHE_ENV})")

    parser = argparse.ArgumentParser(prog="hamming-wd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dist", parents=[common], help="compute the weight distribution")
    sub.add_parser("verify", parents=[common], help="check the distribution against oracles")
    sub.add_parser("enumerator", parents=[common], help="print the weight enumerator")
    return parser


def _emit(config, text):
    if config.out:
        atomic_write(config.out, text)
    else:
        sys.stdout.write(text)


def distribution(config):
    """Recursion result for the config, served from the cache when possible."""
    params = code_params(config.q, config.m)
    if config.max_h is not None and not 0 <= config.max_h <= params.n:
        raise UsageError(f"--max-h must lie in 0..{params.n}")
    max_h = None if config.max_h == params.n else config.max_h
    cache = Cache(config.cache_dir) if config.cache_dir else None
    if cache:
        hit = cache.load(config.q, config.m, max_h)
        if hit is not None:
            return hit
    dist = theorem1_distribution(params, max_h)
    if cache:
        cache.store(dist, max_h)
    return dist


def cmd_dist(config):
    dist = distribution(config)
    _emit(config, FORMATTERS[config.format](dist))
    return EXIT_OK


def _select_oracles(config, params):
    if config.oracles is not None:
        if "binary" in config.oracles and params.q != 2:
            raise UsageError("the binary recurrence applies only to q = 2")
        return list(config.oracles)
    chosen = []
    if params.size <= ENUMERATION_BUDGET:
        chosen.append("brute")
    if params.n <= MACWILLIAMS_MAX_LENGTH:
        chosen.append("macwilliams")
    if params.q == 2:
        chosen.append("binary")
    chosen.append("moments")
    return chosen


def cmd_verify(config):
    dist = distribution(config)
    params = dist.params
    rows = []
    for name in _select_oracles(config, params):
        if name == "moments":
            if dist.partial:
                rows.append((name, "skip", "needs the complete distribution"))
                continue
            for res in moment_check(dist):
                detail = f"expected {res.expected}, got {res.actual}"
                rows.append((f"moment{res.order}", "pass" if res.passed else "FAIL", detail))
            continue
        if name == "brute":
            ref = brute_force_distribution(params)
        elif name == "macwilliams":
            ref = macwilliams_distribution(params)
        else:
            ref = binary_recurrence_distribution(params.m)
        h = dist.first_mismatch(ref) if not dist.partial else next(
            (i for i, c in enumerate(dist.counts) if c != ref.counts[i]), None)
        if h is None:
            rows.append((name, "pass", f"{len(dist)} counts agree"))
        else:
            ours = dist.counts[h] if h < len(dist) else "-"
            rows.append((name, "FAIL", f"first mismatch at h={h}: recursion={ours} {name}={ref.counts[h]}"))

    width = max(len(r[0]) for r in rows)
    lines = [f"verify {params}"]
    lines += [f"{name.ljust(width)}  {status:4}  {detail}" for name, status, detail in rows]
    ok = all(status != "FAIL" for _, status, _ in rows)
    lines.append("ALL PASS" if ok else "MISMATCH")
    _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_enumerator(config):
    dist = distribution(config)
    if dist.partial:
        raise UsageError("the enumerator needs the complete distribution; drop --max-h")
    _emit(config, str(BivariatePoly.from_distribution(dist)) + "\n")
    return EXIT_OK


COMMANDS = {"dist": cmd_dist, "verify": cmd_verify, "enumerator": cmd_enumerator}


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    config = RunConfig(
        q=args.q,
        m=args.m,
        max_h=args.max_h,
        format=args.format,
        oracles=args.oracles,
        out=args.out,
        cache_dir=args.cache_dir or os.environ.get(CACHE_ENV) or None,
    )
    try:
        return COMMANDS[args.command](config)
    except (NotAPrimePower, InvalidM, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
