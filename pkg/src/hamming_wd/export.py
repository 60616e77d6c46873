"""Serialization of weight distributions and the on-disk result cache.

Counts are always written as decimal strings; they exceed 64 bits for
moderate parameters.
"""

import json
import logging
import os
import tempfile
from pathlib import Path

from .hamming import code_params
from .wdist import WeightDistribution

log = logging.getLogger(__name__)


def to_dict(dist):
    p = dist.params
    return {
        "q": p.q,
        "m": p.m,
        "n": str(p.n),
        "k": str(p.k),
        "partial": dist.partial,
        "counts": [str(c) for c in dist.counts],
    }


def to_json(dist):
    return json.dumps(to_dict(dist), indent=2) + "\n"


def from_json(text):
    data = json.loads(text)
    params = code_params(int(data["q"]), int(data["m"]))
    if int(data["n"]) != params.n or int(data["k"]) != params.k:
        raise ValueError("n/k do not match q and m")
    counts = data["counts"]
    if not all(isinstance(c, str) and c.isdigit() for c in counts):
        raise ValueError("counts must be nonnegative decimal strings")
    return WeightDistribution(params, tuple(int(c) for c in counts), partial=bool(data["partial"]))


def to_csv(dist):
    lines = ["h,count"]
    lines += [f"{h},{c}" for h, c in enumerate(dist.counts)]
    return "\n".join(lines) + "\n"


def to_text(dist):
    p = dist.params
    width = len(str(len(dist.counts) - 1))
    lines = [f"{'h'.rjust(width)}  count"]
    lines += [f"{str(h).rjust(width)}  {c}" for h, c in enumerate(dist.counts)]
    tail = " (partial)" if dist.partial else ""
    lines.append(f"# n={p.n} k={p.k} total={dist.total()}{tail}")
    return "\n".join(lines) + "\n"


FORMATTERS = {"json": to_json, "csv": to_csv, "text": to_text}


def atomic_write(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


class Cache:
    """One JSON file per (q, m, max_h), in the same schema as ``dist --format json``."""

    def __init__(self, directory):
        self.directory = Path(directory)

    def path(self, q, m, max_h):
        tag = "full" if max_h is None else f"h{max_h}"
        return self.directory / f"hamming_q{q}_m{m}_{tag}.json"

    def load(self, q, m, max_h):
        path = self.path(q, m, max_h)
        if not path.exists():
            return None
        try:
            dist = from_json(path.read_text(encoding="utf-8"))
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None
        want_len = (dist.params.n if max_h is None else max_h) + 1
        problems = dist.violations()
        if (dist.params.q, dist.params.m) != (q, m) or len(dist) != want_len:
            problems.append("entry does not match its key")
        if problems:
            log.warning("ignoring invalid cache entry %s: %s", path, "; ".join(problems))
            return None
        return dist

    def store(self, dist, max_h):
        p = dist.params
        atomic_write(self.path(p.q, p.m, max_h), to_json(dist))
