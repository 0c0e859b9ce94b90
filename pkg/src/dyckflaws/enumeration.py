"""Brute-force path enumeration and the statistic count tables.

This module is the oracle the rest of the package is checked against:
it visits every balanced word individually (recursing on the remaining
up/down budgets, never pruning on height) and buckets paths by their
statistics.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional

from .paths import Path, Step
from .polynomials import IntPolynomial


class StatKind(Enum):
    PEAK = "peak"
    VALLEY = "valley"
    DOUBLE_ASCENT = "double_ascent"
    DOUBLE_DESCENT = "double_descent"


# position of each statistic in a (flaws, peaks, valleys, ascents, descents)
# signature tuple
_SIGNATURE_INDEX = {
    StatKind.PEAK: 1,
    StatKind.VALLEY: 2,
    StatKind.DOUBLE_ASCENT: 3,
    StatKind.DOUBLE_DESCENT: 4,
}


@dataclass(frozen=True)
class CountTable:
    """Counts of paths of one semilength, bucketed by flaws and one statistic."""

    semilength: int
    stat: StatKind
    entries: dict  # {m: {k: count}}, zero counts omitted

    def count(self, flaws: int, value: int) -> int:
        return self.entries.get(flaws, {}).get(value, 0)

    def polynomial(self, flaws: int) -> IntPolynomial:
        row = self.entries.get(flaws, {})
        if not row:
            return IntPolynomial()
        out = [0] * (max(row) + 1)
        for k, c in row.items():
            out[k] = c
        return IntPolynomial(out)

    def row_sum(self, flaws: int) -> int:
        return sum(self.entries.get(flaws, {}).values())

    def total(self) -> int:
        return sum(c for row in self.entries.values() for c in row.values())

    def to_json(self) -> str:
        rows = {
            str(m): {str(k): str(row[k]) for k in sorted(row)}
            for m, row in sorted(self.entries.items())
        }
        doc = {"n": self.semilength, "stat": self.stat.value, "rows": rows}
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        lines = ["m,k,count"]
        for m, row in sorted(self.entries.items()):
            for k in sorted(row):
                lines.append(f"{m},{k},{row[k]}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _signature_counts(n: int) -> dict:
    """Tally (flaws, peaks, valleys, ascents, descents) over all paths.

    Depth-first over words with the remaining up/down budgets as the only
    state that limits branching.  Once either budget empties, the single
    forced completion's statistics are added in O(1); every path is still
    accounted for individually.
    """
    if n == 0:
        return {(0, 0, 0, 0, 0): 1}
    counts: dict = {}
    # (ups left, downs left, height, last step (+1/-1/0), flaws,
    #  peaks, valleys, ascents, descents)
    stack = [(n, n, 0, 0, 0, 0, 0, 0, 0)]
    push = stack.append
    pop = stack.pop
    while stack:
        ups, downs, h, last, m, pk, vl, da, dd = pop()
        if ups == 0:
            # forced all-down tail
            key = (m, pk + (last == 1), vl, da, dd + (last == -1) + downs - 1)
            counts[key] = counts.get(key, 0) + 1
        elif downs == 0:
            # forced all-up tail; ups start at heights h, h+1, ...
            below = -h if h < 0 else 0
            key = (
                m + (ups if ups < below else below),
                pk,
                vl + (last == -1),
                da + (last == 1) + ups - 1,
                dd,
            )
            counts[key] = counts.get(key, 0) + 1
        else:
            push((ups, downs - 1, h - 1, -1, m, pk + (last == 1), vl, da,
                  dd + (last == -1)))
            push((ups - 1, downs, h + 1, 1, m + (h < 0), pk,
                  vl + (last == -1), da + (last == 1), dd))
    return counts


def enumerate_paths(n: int, flaws: Optional[int] = None) -> Iterator[Path]:
    """Yield every path of semilength n (optionally with a fixed flaw count)
    in lexicographic word order with D < U."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    buf: list[Step] = []

    def rec(ups: int, downs: int, height: int, m: int) -> Iterator[Path]:
        if ups == 0 and downs == 0:
            if flaws is None or m == flaws:
                yield Path(tuple(buf))
            return
        if downs:
            buf.append(Step.DOWN)
            yield from rec(ups, downs - 1, height - 1, m)
            buf.pop()
        if ups:
            buf.append(Step.UP)
            yield from rec(ups - 1, downs, height + 1, m + (height < 0))
            buf.pop()

    return rec(n, n, 0, 0)


def count_table(n: int, stat: StatKind) -> CountTable:
    """Bucket all paths of semilength n by (flaws, stat value)."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    idx = _SIGNATURE_INDEX[stat]
    entries: dict = {}
    for sig, c in _signature_counts(n).items():
        row = entries.setdefault(sig[0], {})
        k = sig[idx]
        row[k] = row.get(k, 0) + c
    return CountTable(semilength=n, stat=stat, entries=entries)


def table_polynomial(n: int, m: int, stat: StatKind) -> IntPolynomial:
    """The row polynomial: coefficient of x**k counts paths with m flaws
    and statistic value k."""
    if not 0 <= m <= n:
        raise ValueError(f"flaw count {m} outside 0..{n}")
    return count_table(n, stat).polynomial(m)
