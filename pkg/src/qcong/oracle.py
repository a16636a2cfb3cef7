"""Counting biregular overpartitions directly, without any series arithmetic.

An overpartition may overline the first occurrence of each part size, so a
partition with ``d`` distinct part sizes yields ``2**d`` overpartitions.
:func:`count_dp` uses that weighting; :func:`count_enumerate` lists the
overlined variants one by one so the weighting itself gets tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

ENUMERATION_LIMIT = 40


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleTable:
    l1: int
    l2: int
    values: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]


def allowed_parts(l1: int, l2: int, n_max: int) -> list[int]:
    return [s for s in range(1, n_max + 1) if s % l1 and s % l2]


def count_dp_parts(parts: Sequence[int], n_max: int) -> list[int]:
    """Overpartition counts of ``0..n_max`` with parts drawn from ``parts``."""
    f = [0] * (n_max + 1)
    f[0] = 1
    for s in sorted(set(parts)):
        if s > n_max:
            continue
        # tail[n] = sum over m >= 1 of f[n - m*s]: the ways where size s is used at least once
        tail = [0] * (n_max + 1)
        for n in range(s, n_max + 1):
            tail[n] = f[n - s] + tail[n - s]
        # using s at all doubles the count (overlined first copy or not)
        f = [f[n] + 2 * tail[n] for n in range(n_max + 1)]
    return f


def count_dp(l1: int, l2: int, n_max: int) -> OracleTable:
    if l1 <= 1 or l2 <= 1:
        raise ValueError(f"l1 and l2 must exceed 1, got ({l1}, {l2})")
    values = count_dp_parts(allowed_parts(l1, l2, n_max), n_max)
    return OracleTable(l1, l2, tuple(values))


def _partitions(n: int, parts_desc: Sequence[int], start: int = 0):
    if n == 0:
        yield ()
        return
    for idx in range(start, len(parts_desc)):
        p = parts_desc[idx]
        if p <= n:
            for rest in _partitions(n - p, parts_desc, idx):
                yield (p,) + rest


def overpartitions(n: int, parts: Sequence[int]):
    """Yield every overpartition of ``n`` as a tuple of ``(part, overlined)`` pairs."""
    parts_desc = sorted(set(parts), reverse=True)
    for lam in _partitions(n, parts_desc):
        distinct = sorted(set(lam), reverse=True)
        for marks in product((False, True), repeat=len(distinct)):
            bar = dict(zip(distinct, marks))
            seen = set()
            out = []
            for p in lam:
                out.append((p, bar[p] and p not in seen))
                seen.add(p)
            yield tuple(out)


def count_enumerate_parts(parts: Sequence[int], n: int, limit: int = ENUMERATION_LIMIT) -> int:
    if limit > ENUMERATION_LIMIT:
        raise OracleLimitError(f"enumeration limit may only be lowered below {ENUMERATION_LIMIT}")
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds the enumeration limit {limit}")
    return sum(1 for _ in overpartitions(n, [p for p in parts if p <= n]))


def count_enumerate(l1: int, l2: int, n: int, limit: int = ENUMERATION_LIMIT) -> int:
    return count_enumerate_parts(allowed_parts(l1, l2, max(n, 0)), n, limit)
