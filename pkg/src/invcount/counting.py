"""Exact dominance counters: non-adaptive, capped, and adaptive.

The non-adaptive counter is a distribution-sort style recursion: the
smaller color is split into ``~sqrt(M/B)`` value-contiguous chunks, one
synchronized scan in x order counts the cross-chunk pairs, and each chunk
recurses with the opposite-color points that belong to it.

The capped counter builds red-blue cells for a cap ``K`` and runs the
non-adaptive counter inside each cell; it may report failure, which
certifies the true count exceeds ``K``.

The adaptive counter runs the capped counter over a doubly-exponential
cap schedule ``(N*B) * (M/B)**(2**i)``, saturating at ``N**2``, and stops
at the first success.  The total cost telescopes to the cost of the last
round, so the I/O count adapts to the true number of pairs.

RAM-model variants fix (M, B) to small constants; the comparison-model
adaptive variant swaps the distribution counter for an O(n log n)
merge-based leaf.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterator, Optional

import numpy as np

from .cells import build_cells
from .core import PointSet
from .iomodel import EmParams, IoTally, RAM_PARAMS


def _strict_rank_pairs(y: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Dense ranks of ``(y, t)`` keys; equal keys share a rank."""
    order = np.lexsort((t, y))
    sy, st = y[order], t[order]
    new = np.empty(len(y), dtype=bool)
    if len(y):
        new[0] = True
        new[1:] = (sy[1:] != sy[:-1]) | (st[1:] != st[:-1])
    ranks = np.empty(len(y), dtype=np.int64)
    ranks[order] = np.cumsum(new) - 1
    return ranks


def _colored_inversions(rank: np.ndarray, is_red: np.ndarray) -> int:
    """Pairs (i < j) with a red at i, a blue at j, and rank[i] > rank[j]."""
    n = len(rank)
    if n < 2:
        return 0
    mid = n // 2
    left_red = np.sort(rank[:mid][is_red[:mid]])
    right_blue = rank[mid:][~is_red[mid:]]
    cross = int((len(left_red) - np.searchsorted(left_red, right_blue, side="right")).sum())
    return (cross
            + _colored_inversions(rank[:mid], is_red[:mid])
            + _colored_inversions(rank[mid:], is_red[mid:]))


def merge_count_dominance(red: PointSet, blue: PointSet) -> int:
    """Exact domination-pair count in O(n log n) comparisons.

    Used as the comparison-model leaf solver; independent of the
    distribution-based recursion.
    """
    nr, nb = len(red), len(blue)
    if nr == 0 or nb == 0:
        return 0
    y = np.concatenate([red.y, blue.y])
    t = np.concatenate([red.tiebreak, blue.tiebreak]).astype(np.float64)
    ranks = _strict_rank_pairs(y, t)
    # Merge both colors by x; blue precedes red on equal x so that
    # equal-x pairs (never dominating) are excluded.
    x = np.concatenate([red.x, blue.x])
    is_red = np.concatenate([np.ones(nr, dtype=np.int8), np.zeros(nb, dtype=np.int8)])
    order = np.lexsort((is_red, x))
    return _colored_inversions(ranks[order], is_red[order].astype(bool))


def _fanout(params: EmParams) -> int:
    f = max(2, isqrt(params.memory_words // params.block_words))
    # One input stream plus f output/chunk streams must fit in memory.
    return min(f, params.max_streams - 1)


def _nonadaptive_rec(red: PointSet, blue: PointSet,
                     params: EmParams, tally: IoTally, f: int) -> int:
    nr, nb = len(red), len(blue)
    if nr == 0 or nb == 0:
        return 0
    if min(nr, nb) <= params.block_words:
        tally.charge_read(nr)
        tally.charge_read(nb)
        return merge_count_dominance(red, blue)

    if nr <= nb:
        side, other, side_is_red = red, blue, True
    else:
        side, other, side_is_red = blue, red, False
    ns, no = len(side), len(other)

    # Chunk the split side into f value-contiguous pieces of equal size.
    order = np.lexsort((side.tiebreak, side.y))
    pos = np.empty(ns, dtype=np.int64)
    pos[order] = np.arange(ns)
    boundaries = np.array([j * ns // f for j in range(f)], dtype=np.int64)
    side_bucket = np.searchsorted(boundaries, pos, side="right") - 1

    # Rank each opposite point against the side's value order: the number
    # of side keys strictly below it decides which chunk it belongs to.
    y_all = np.concatenate([side.y, other.y])
    t_all = np.concatenate([side.tiebreak, other.tiebreak]).astype(np.float64)
    marker = np.concatenate([np.ones(ns, dtype=np.int8), np.zeros(no, dtype=np.int8)])
    order2 = np.lexsort((marker, t_all, y_all))
    is_side = marker[order2] == 1
    below_sorted = np.cumsum(is_side) - is_side
    other_rank = np.empty(no, dtype=np.int64)
    other_rank[order2[~is_side] - ns] = below_sorted[~is_side]
    other_bucket = np.searchsorted(
        boundaries, np.minimum(other_rank, ns - 1), side="right") - 1

    # Distribution pass over the side, then a synchronized counting scan
    # that also routes the opposite points into their buckets.
    tally.charge_read(ns)
    chunk_idx = [np.nonzero(side_bucket == j)[0] for j in range(f)]
    for idx in chunk_idx:
        tally.charge_write(len(idx))
    tally.charge_write_blocks(f)
    for idx in chunk_idx:
        tally.charge_read(len(idx))
    tally.charge_read(no)
    bucket_idx = [np.nonzero(other_bucket == j)[0] for j in range(f)]
    for idx in bucket_idx:
        tally.charge_write(len(idx))
    tally.charge_write_blocks(f)

    # Cross-chunk pairs, resolved with in-memory chunk counters.
    total = 0
    if side_is_red:
        # blue p dominates reds with larger value: chunks above its own.
        for j in range(1, f):
            cx = side.x[chunk_idx[j]]
            qx = other.x[other_bucket < j]
            if len(cx) and len(qx):
                total += int(np.searchsorted(cx, qx, side="left").sum())
    else:
        # red p is dominated by blues with smaller value: chunks below.
        for j in range(f - 1):
            cx = side.x[chunk_idx[j]]
            qx = other.x[other_bucket > j]
            if len(cx) and len(qx):
                total += int((len(cx) - np.searchsorted(cx, qx, side="right")).sum())

    for j in range(f):
        sub_side = side.take(chunk_idx[j])
        sub_other = other.take(bucket_idx[j])
        if side_is_red:
            total += _nonadaptive_rec(sub_side, sub_other, params, tally, f)
        else:
            total += _nonadaptive_rec(sub_other, sub_side, params, tally, f)
    return total


def count_nonadaptive(red: PointSet, blue: PointSet,
                      params: EmParams, tally: IoTally) -> int:
    """Exact domination-pair count by multiway distribution."""
    f = _fanout(params)
    if f < 2:
        raise ValueError("memory too small for fanout 2 plus an input stream")
    return _nonadaptive_rec(red, blue, params, tally, f)


def count_capped(red: PointSet, blue: PointSet, cap: int,
                 params: EmParams, tally: IoTally) -> Optional[int]:
    """Exact count, or ``None`` (failure) only when the true count > cap.

    A cap that cannot be exceeded skips the cell construction entirely.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if cap >= len(red) * len(blue):
        return count_nonadaptive(red, blue, params, tally)
    built = build_cells(red, blue, cap, tally)
    if built.failed:
        return None
    total = 0
    for cell in built.cells:
        total += count_nonadaptive(cell.red, cell.blue, params, tally)
    return total


def cap_schedule(n: int, params: EmParams) -> Iterator[int]:
    """Doubly-exponential cap guesses, saturating at ``n**2``.

    Round ``i`` uses ``(n*B) * (M/B)**(2**i - 2)``, i.e. exponents 0, 2,
    6, 14, ...; the first round's cap ``n*B`` keeps the zero-inversion
    cost near one scan, and a failure in round ``i`` still certifies
    ``2**(i+1) <= 2*log_{M/B}(true/(n*B)) + 4``, so the total cost
    telescopes to the cost of the last round.
    """
    m, b = params.memory_words, params.block_words
    sat = n * n
    e = 0
    while True:
        cap = (n * b * m**e) // (b**e) if e else n * b
        if cap >= sat:
            yield sat
            return
        yield max(cap, 1)
        e = 2 * e + 2


def ram_cap_schedule(n: int) -> Iterator[int]:
    """Cap guesses ``n * 2**(2**i)`` for the comparison/RAM variants."""
    sat = n * n
    e = 2
    while True:
        cap = n * 2**e
        if cap >= sat:
            yield sat
            return
        yield max(cap, 1)
        e *= 2


@dataclass
class AdaptiveCount:
    """Result of a guessing-round run: the count and the rounds it took."""

    count: int
    rounds: int
    caps: list[int] = field(default_factory=list)


def count_adaptive(red: PointSet, blue: PointSet,
                   params: EmParams, tally: IoTally) -> AdaptiveCount:
    """Exact count via capped rounds with doubly-exponential caps."""
    n = max(len(red), len(blue))
    if n == 0:
        return AdaptiveCount(0, 0)
    caps: list[int] = []
    for cap in cap_schedule(n, params):
        caps.append(cap)
        res = count_capped(red, blue, cap, params, tally)
        if res is not None:
            return AdaptiveCount(res, len(caps), caps)
    raise AssertionError("saturated cap cannot fail")


def count_capped_ram(red: PointSet, blue: PointSet, cap: int) -> Optional[int]:
    """Capped counter with (M, B) fixed to RAM-model constants."""
    tally = IoTally(RAM_PARAMS)
    return count_capped(red, blue, cap, RAM_PARAMS, tally)


def _capped_comparison(red: PointSet, blue: PointSet, cap: int,
                       tally: IoTally) -> Optional[int]:
    if cap >= len(red) * len(blue):
        return merge_count_dominance(red, blue)
    built = build_cells(red, blue, cap, tally)
    if built.failed:
        return None
    return sum(merge_count_dominance(c.red, c.blue) for c in built.cells)


def count_adaptive_ram(red: PointSet, blue: PointSet) -> AdaptiveCount:
    """Comparison-model adaptive counter with a merge-based leaf solver."""
    n = max(len(red), len(blue))
    if n == 0:
        return AdaptiveCount(0, 0)
    tally = IoTally(RAM_PARAMS)
    caps: list[int] = []
    for cap in ram_cap_schedule(n):
        caps.append(cap)
        res = _capped_comparison(red, blue, cap, tally)
        if res is not None:
            return AdaptiveCount(res, len(caps), caps)
    raise AssertionError("saturated cap cannot fail")
