"""Counting equivalence classes of Gauss diagrams that pass STZ and GL123.

Only diagrams satisfying Gauss' parity condition can pass either test, and in
those every chord joins an even position to an odd one.  Such a diagram is a
permutation ``sigma``: the chord starting at position ``2i`` ends at
``2 sigma(i) + 1``.  That cuts the search from ``(2n-1)!!`` matchings to
``n!`` permutations, which are processed as numpy batches sharing a fixed
two-element prefix.  Within a batch, the remaining evenness condition and the
connectivity filter are vectorized; the few survivors are tested for
orbit-minimality and then checked exactly.

By default only prime diagrams are counted, i.e. those with a connected
interlacement graph.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .codec import GaussCode, is_class_representative, relabel
from .criteria import check_gl123, check_stz_linear
from .interlace import interlacement_graph

LONG_RUN_THRESHOLD = 11
MAX_N = 12


@dataclass
class CountRow:
    n: int
    stz_count: int = 0
    gl123_count: int = 0
    gap_examples: List[GaussCode] = field(default_factory=list)
    gap_count: int = 0

    def merge(self, other: "CountRow", cap: Optional[int] = None) -> "CountRow":
        gaps = sorted(self.gap_examples + other.gap_examples, key=lambda c: c.symbols)
        return CountRow(self.n, self.stz_count + other.stz_count,
                        self.gl123_count + other.gl123_count,
                        gaps if cap is None else gaps[:cap],
                        self.gap_count + other.gap_count)

    def to_json(self) -> dict:
        return {"n": self.n, "stz": self.stz_count, "gl123": self.gl123_count,
                "gap": [_plain(c) for c in self.gap_examples]}


def _plain(code: GaussCode) -> str:
    return " ".join(str(s) for s in code.symbols)


@lru_cache(maxsize=4)
def permutation_table(k: int) -> np.ndarray:
    """All ``k!`` permutations of ``range(k)`` as rows, in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int8)
    table = np.zeros((1, 1), dtype=np.int8)
    for size in range(2, k + 1):
        # prepend each first element, shifting the others up
        blocks = []
        for first in range(size):
            rest = table + (table >= first)
            blocks.append(np.hstack([np.full((len(table), 1), first, dtype=np.int8), rest]))
        table = np.vstack(blocks).astype(np.int8)
    return table


def work_units(n: int) -> List[Tuple[int, ...]]:
    """Prefixes ``(sigma(0), sigma(1))`` splitting the search into equal batches."""
    depth = min(2, n)
    units = [()]
    for _ in range(depth):
        units = [u + (v,) for u in units for v in range(n) if v not in u]
    return units


def _batch(n: int, prefix: Tuple[int, ...]) -> np.ndarray:
    rest = [v for v in range(n) if v not in prefix]
    perms = np.asarray(rest, dtype=np.int8)[permutation_table(len(rest))]
    head = np.broadcast_to(np.asarray(prefix, dtype=np.int8), (len(perms), len(prefix)))
    return np.hstack([head, perms]) if prefix else perms


def interlacement_rows(perms: np.ndarray) -> np.ndarray:
    """Neighbour bitsets (one column per chord) for a batch of permutations."""
    count, n = perms.shape
    a = np.arange(n, dtype=np.int16) * 2
    b = perms.astype(np.int16) * 2 + 1
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    rows = np.zeros((count, n), dtype=np.uint32)
    for i in range(n):
        for j in range(i + 1, n):
            inside_a = (lo[:, i] < a[j]) & (a[j] < hi[:, i])
            inside_b = (lo[:, i] < b[:, j]) & (b[:, j] < hi[:, i])
            cross = (inside_a ^ inside_b).astype(np.uint32)
            rows[:, i] |= cross << j
            rows[:, j] |= cross << i
    return rows


def even_common_neighbors(rows: np.ndarray) -> np.ndarray:
    """Mask of batch entries whose non-adjacent pairs share evenly many neighbours."""
    count, n = rows.shape
    ok = np.ones(count, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = (rows[:, i] >> j) & 1
            odd = np.bitwise_count(rows[:, i] & rows[:, j]) & 1
            ok &= ~((adjacent == 0) & (odd == 1))
    return ok


def connected(rows: np.ndarray) -> np.ndarray:
    count, n = rows.shape
    full = (1 << n) - 1
    reach = np.ones(count, dtype=np.uint32)
    for _ in range(n):
        grow = reach.copy()
        for i in range(n):
            grow |= np.where((reach >> i) & 1, rows[:, i], 0).astype(np.uint32)
        if np.array_equal(grow, reach):
            break
        reach = grow
    return reach == full


def word_of(perm: Sequence[int]) -> Tuple[int, ...]:
    w = [0] * (2 * len(perm))
    for i, p in enumerate(perm):
        w[2 * i] = i
        w[2 * int(p) + 1] = i
    return relabel(w)[0]


def _count_unit(args) -> CountRow:
    n, prefix, connected_only, collect_gap, cap = args
    perms = _batch(n, prefix)
    rows = interlacement_rows(perms)
    keep = even_common_neighbors(rows)
    if connected_only:
        keep &= connected(rows)
    out = CountRow(n)
    for perm in perms[keep]:
        word = word_of(perm)
        if not is_class_representative(word):
            continue
        code = GaussCode(word)
        g = interlacement_graph(code)
        stz = check_stz_linear(g).verdict
        gl = check_gl123(g).verdict
        out.stz_count += stz
        out.gl123_count += gl
        if gl and not stz:
            out.gap_count += 1
            if collect_gap and (cap is None or len(out.gap_examples) < cap):
                out.gap_examples.append(code)
    return out


def default_jobs() -> int:
    env = os.environ.get("GAUSS_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def count_row(n: int, collect_gap: bool = False, jobs: Optional[int] = None,
              connected_only: bool = True, gap_cap: Optional[int] = None) -> CountRow:
    units = [(n, u, connected_only, collect_gap, gap_cap) for u in work_units(n)]
    jobs = jobs or default_jobs()
    total = CountRow(n)
    if jobs == 1 or len(units) == 1:
        results = map(_count_unit, units)
        for r in results:
            total = total.merge(r, gap_cap)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for r in pool.map(_count_unit, units, chunksize=max(1, len(units) // (4 * jobs))):
                total = total.merge(r, gap_cap)
    return total


def count_table(n_min: int, n_max: int, collect_gap: bool = False,
                jobs: Optional[int] = None, connected_only: bool = True,
                gap_cap: Optional[int] = None, allow_long: bool = False) -> List[CountRow]:
    """One :class:`CountRow` per size; sizes from 11 on need ``allow_long``."""
    if not 1 <= n_min <= n_max <= MAX_N:
        raise ValueError(f"need 1 <= n_min <= n_max <= {MAX_N}")
    if n_max >= LONG_RUN_THRESHOLD and not allow_long:
        raise ValueError(f"n >= {LONG_RUN_THRESHOLD} is a long run; pass allow_long=True")
    return [count_row(n, collect_gap, jobs, connected_only, gap_cap)
            for n in range(n_min, n_max + 1)]


def gap_diagrams(n: int, jobs: Optional[int] = None, connected_only: bool = True,
                 allow_long: bool = False) -> List[GaussCode]:
    """Class representatives passing GL123 but not STZ, sorted."""
    row = count_table(n, n, collect_gap=True, jobs=jobs, connected_only=connected_only,
                      allow_long=allow_long)[0]
    return row.gap_examples


def format_table(rows: Sequence[CountRow]) -> str:
    width = max([len(str(r.gl123_count)) for r in rows] + [len(str(r.n)) for r in rows] + [2])
    head = "size   " + " ".join(str(r.n).rjust(width) for r in rows)
    stz = "STZ    " + " ".join(str(r.stz_count).rjust(width) for r in rows)
    gl = "GL123  " + " ".join(str(r.gl123_count).rjust(width) for r in rows)
    lines = [head, stz, gl]
    for r in rows:
        for code in r.gap_examples:
            lines.append(f"gap n={r.n}: {code}")
    return "\n".join(lines)


def table_json(rows: Sequence[CountRow]) -> str:
    return json.dumps([r.to_json() for r in rows], sort_keys=True)


def orbit_count_bound(n: int) -> int:
    """Number of parity-respecting matchings searched for size ``n``."""
    return math.factorial(n)
