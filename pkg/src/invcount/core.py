"""Domain types for inversion counting and the reference counters.

An inversion in a list ``L`` is a pair of positions ``i < j`` with
``L(i) > L(j)``.  Counting inversions reduces to red-blue dominance
counting: map every element to the planar point ``(i, L(i))`` and use the
same point set for both colors.  A blue point *dominates* a red point when
it lies strictly to the right of it and strictly below it; the domination
pairs of the reduction are exactly the inversions of the list.

Equal values never form an inversion (the definition uses strict ``>``).
To keep the downstream geometry free of degenerate ties, every point
carries a ``tiebreak`` (its original index) and all vertical comparisons
use the lexicographic key ``(value, tiebreak)``, which is a strict total
order.

Two reference counters live here: an exhaustive O(n^2) enumeration and an
O(n log n) merge-based counter.  Everything else in the package is tested
against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

#: Hard cap on input length so that pair counts fit comfortably in 64 bits
#: (n*(n-1)/2 < 2**62 for n <= 2**31).
MAX_LENGTH = 2**31


class Point(NamedTuple):
    """A planar point of the reduction: list index, value, tie-break index."""

    x: int
    y: float
    tiebreak: int


def dominates(b: Point, r: Point) -> bool:
    """True iff blue point ``b`` dominates red point ``r``.

    Domination is strict: larger x and smaller ``(y, tiebreak)`` key.
    Equal values therefore never dominate, matching the strict ``>`` in
    the inversion definition.
    """
    return b.x > r.x and (b.y, b.tiebreak) < (r.y, r.tiebreak)


def ykey_less(y1, t1, y2, t2):
    """Vectorized strict lexicographic comparison ``(y1, t1) < (y2, t2)``."""
    return (y1 < y2) | ((y1 == y2) & (t1 < t2))


@dataclass(frozen=True)
class ValueList:
    """An input list of finite 64-bit floats."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.ndim != 1:
            raise ValueError("value list must be one-dimensional")
        if len(vals) > MAX_LENGTH:
            raise ValueError(f"value list longer than {MAX_LENGTH}")
        if len(vals) and not np.all(np.isfinite(vals)):
            raise ValueError("value list must contain only finite numbers")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_iterable(cls, values: Iterable[float]) -> "ValueList":
        return cls(np.asarray(list(values), dtype=np.float64))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PointSet:
    """An x-sorted set of colored points, stored as parallel arrays."""

    x: np.ndarray
    y: np.ndarray
    tiebreak: np.ndarray
    color: str = "red"

    def __post_init__(self):
        x = np.asarray(self.x, dtype=np.int64)
        y = np.asarray(self.y, dtype=np.float64)
        t = np.asarray(self.tiebreak, dtype=np.int64)
        if not (len(x) == len(y) == len(t)):
            raise ValueError("coordinate arrays must have equal length")
        if len(x) > 1 and not np.all(np.diff(x) > 0):
            raise ValueError("x coordinates must be strictly increasing")
        if self.color not in ("red", "blue"):
            raise ValueError(f"unknown color {self.color!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "tiebreak", t)

    def __len__(self) -> int:
        return len(self.x)

    def point(self, i: int) -> Point:
        return Point(int(self.x[i]), float(self.y[i]), int(self.tiebreak[i]))

    def points(self) -> list[Point]:
        return [self.point(i) for i in range(len(self))]

    def take(self, idx: np.ndarray) -> "PointSet":
        """Subset by an ascending index array (keeps the x order)."""
        idx = np.asarray(idx, dtype=np.intp)
        return PointSet(self.x[idx], self.y[idx], self.tiebreak[idx], self.color)

    @classmethod
    def from_points(cls, points: Iterable[Point], color: str = "red") -> "PointSet":
        pts = sorted(points, key=lambda p: p.x)
        x = np.array([p.x for p in pts], dtype=np.int64)
        y = np.array([p.y for p in pts], dtype=np.float64)
        t = np.array([p.tiebreak for p in pts], dtype=np.int64)
        return cls(x, y, t, color)


def reduce_inversions(values) -> tuple[PointSet, PointSet]:
    """Map a value list to the red and blue point sets of the reduction.

    Both sets contain the point ``(i, L(i))`` with tiebreak ``i``; the
    domination pairs between them are exactly the inversions of the list.
    """
    if not isinstance(values, ValueList):
        values = ValueList(np.asarray(values, dtype=np.float64))
    n = len(values)
    idx = np.arange(n, dtype=np.int64)
    red = PointSet(idx, values.values, idx, "red")
    blue = PointSet(idx, values.values, idx, "blue")
    return red, blue


def brute_force_count(red: PointSet, blue: PointSet) -> int:
    """Count domination pairs by exhaustive enumeration.

    O(|red| * |blue|) time and memory; this is the ground-truth oracle for
    every other counter in the package.
    """
    if len(red) == 0 or len(blue) == 0:
        return 0
    bx = blue.x[:, None]
    rx = red.x[None, :]
    below = ykey_less(blue.y[:, None], blue.tiebreak[:, None],
                      red.y[None, :], red.tiebreak[None, :])
    return int(np.count_nonzero((bx > rx) & below))


def _merge_count(values: np.ndarray) -> tuple[int, np.ndarray]:
    """Recursive merge step: inversion count and sorted copy of ``values``."""
    n = len(values)
    if n <= 1:
        return 0, values
    mid = n // 2
    c_left, left = _merge_count(values[:mid])
    c_right, right = _merge_count(values[mid:])
    # Cross inversions: for each left element, later right elements that are
    # strictly smaller.  searchsorted 'left' excludes equal values.
    cross = int(np.searchsorted(right, left, side="left").sum())
    merged = np.concatenate([left, right])
    merged.sort(kind="stable")
    return c_left + c_right + cross, merged


def mergesort_count(values) -> int:
    """Count inversions of a list in O(n log n) by divide and conquer."""
    if isinstance(values, ValueList):
        values = values.values
    values = np.asarray(values, dtype=np.float64)
    count, _ = _merge_count(values)
    return count
