"""Recursive construction of red-blue cells for capped dominance counting.

Given red and blue point sets and a cap ``K``, the builder produces cells
``(R_i, B_i)`` such that, on success:

* the smaller side of every cell is O(K/N);
* every domination pair of the input lands in exactly one cell;
* the total cell size is O(N).

Each level builds a staircase cutting of depth ``ceil(2K/N_level)`` over
the red points, assigns the blue points that land in a cell, then mirrors
the step over the remaining ("deep") blue points to assign red points.
If either deep set exceeds half the level budget the builder reports
failure, which certifies that the true pair count exceeds ``K``; failures
are a value, not an error, because callers retry with a larger cap.  The
recursion halves the level budget and stops below a small constant, where
one leaf cell holds everything left.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import PointSet
from .cuttings import build_blue_cutting, build_red_cutting
from .iomodel import IoTally

#: Recursion stops when both colors are below this many points; the
#: remainder becomes a single all-pairs leaf cell.
STOP_SIZE = 64


@dataclass(frozen=True)
class Cell:
    """One red-blue cell: the candidate pairs are R x B.

    ``level`` records the recursion level that produced the cell; the
    level-j size budget is ``2**j`` times the level-0 budget, because the
    recursion halves the point budget while keeping the same cap.
    """

    red: PointSet
    blue: PointSet
    level: int = 0

    @property
    def weight(self) -> int:
        return len(self.red) * len(self.blue)


@dataclass
class RedBlueCells:
    """Outcome of the cell construction for one cap value."""

    cap: int
    cells: list[Cell] = field(default_factory=list)
    failed: bool = False
    levels: int = 0

    @property
    def ok(self) -> bool:
        return not self.failed

    def sample_space(self) -> int:
        return sum(c.weight for c in self.cells)

    def debug_dict(self) -> dict:
        return {
            "cap": self.cap,
            "outcome": "failure" if self.failed else "success",
            "levels": self.levels,
            "n_cells": len(self.cells),
            "cell_sizes": [[len(c.red), len(c.blue)] for c in self.cells],
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _group_by_cell(assign: np.ndarray, pts: PointSet, base_cut, out: list[Cell],
                   tally: IoTally, level: int) -> None:
    """Append one cell per cutting cell that received at least one point.

    Materializing a cell writes its conflict list (the host side); the
    member side is charged by the caller in one batch.
    """
    shallow = assign >= 0
    for ci in np.unique(assign[shallow]):
        members = pts.take(np.nonzero(assign == ci)[0])
        host = base_cut.cell_points(int(ci))
        tally.charge_write(len(host))
        if base_cut.orientation == "red":
            out.append(Cell(red=host, blue=members, level=level))
        else:
            out.append(Cell(red=members, blue=host, level=level))


def build_cells(red: PointSet, blue: PointSet, cap: int, tally: IoTally) -> RedBlueCells:
    """Build red-blue cells for ``cap``; may report failure iff truth > cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    n0 = max(len(red), len(blue))
    result = RedBlueCells(cap=cap)
    if n0 == 0:
        return result

    cur_red, cur_blue = red, blue
    level = 0
    while True:
        nr, nb = len(cur_red), len(cur_blue)
        if nr == 0 or nb == 0:
            break
        if nr < STOP_SIZE and nb < STOP_SIZE:
            result.cells.append(Cell(red=cur_red, blue=cur_blue, level=level))
            break
        result.levels = level + 1
        depth = _ceil_div(2 * cap * (1 << level), n0)

        red_cut = build_red_cutting(cur_red, depth, tally)
        assign_b = red_cut.classify_many(cur_blue)
        tally.charge_read(nb)  # classification scan of the blue points
        deep_b = int(np.count_nonzero(assign_b < 0))
        # Failure threshold: deep count > N/2 at this level's budget N0/2^level.
        if deep_b * (1 << (level + 1)) > n0:
            result.failed = True
            return result
        red_cut.charge_corners(tally)
        tally.charge_write(nb - deep_b)
        _group_by_cell(assign_b, cur_blue, red_cut, result.cells, tally, level)
        deep_blue = cur_blue.take(np.nonzero(assign_b < 0)[0])
        if len(deep_blue) == 0:
            break

        blue_cut = build_blue_cutting(deep_blue, depth, tally)
        assign_r = blue_cut.classify_many(cur_red)
        tally.charge_read(nr)
        deep_r = int(np.count_nonzero(assign_r < 0))
        if deep_r * (1 << (level + 1)) > n0:
            result.failed = True
            return result
        blue_cut.charge_corners(tally)
        tally.charge_write(nr - deep_r)
        _group_by_cell(assign_r, cur_red, blue_cut, result.cells, tally, level)
        deep_red = cur_red.take(np.nonzero(assign_r < 0)[0])
        tally.charge_write(deep_r + len(deep_blue))

        cur_red, cur_blue = deep_red, deep_blue
        level += 1
    return result


@dataclass
class CellAudit:
    """Measured cell-family properties, verified against brute force."""

    ok: bool
    total_pairs: int
    expected_pairs: int
    small_side_ratio: float     # max over cells of min(|R|,|B|) / (2^level * cap/N)
    total_size_ratio: float     # max(sum|R|, sum|B|) / N
    duplicate_pairs: list
    missing_pairs: list

    def summary(self) -> str:
        status = "ok" if self.ok else "VIOLATION"
        return (f"{status}: pairs {self.total_pairs}/{self.expected_pairs}, "
                f"small-side ratio {self.small_side_ratio:.2f}, "
                f"size ratio {self.total_size_ratio:.2f}")


def _cell_pairs(cell: Cell) -> set:
    """Domination pairs of one cell as (red tiebreak, blue tiebreak) ids."""
    from .core import ykey_less

    r, b = cell.red, cell.blue
    if len(r) == 0 or len(b) == 0:
        return set()
    mask = (b.x[:, None] > r.x[None, :]) & ykey_less(
        b.y[:, None], b.tiebreak[:, None], r.y[None, :], r.tiebreak[None, :])
    bi, ri = np.nonzero(mask)
    return {(int(r.tiebreak[j]), int(b.tiebreak[i])) for i, j in zip(bi, ri)}


def audit_cells(result: RedBlueCells, red: PointSet, blue: PointSet) -> CellAudit:
    """Exhaustively verify a successful cell family (meant for small N).

    Checks that the per-cell domination pairs partition the input's pairs
    exactly and reports the measured size constants.
    """
    from .core import brute_force_count

    if result.failed:
        raise ValueError("cannot audit a failed cell construction")
    n = max(len(red), len(blue), 1)

    seen: dict[tuple, int] = {}
    for cell in result.cells:
        for pair in _cell_pairs(cell):
            seen[pair] = seen.get(pair, 0) + 1
    duplicates = sorted(p for p, c in seen.items() if c > 1)

    full = _cell_pairs(Cell(red=red, blue=blue))
    missing = sorted(full - set(seen))
    expected = brute_force_count(red, blue)
    total = sum(seen.values())

    small_side = max(
        (min(len(c.red), len(c.blue)) / (1 << c.level) for c in result.cells),
        default=0.0)
    size_sum = max(sum(len(c.red) for c in result.cells),
                   sum(len(c.blue) for c in result.cells))
    ok = not duplicates and not missing and total == expected
    return CellAudit(
        ok=ok,
        total_pairs=total,
        expected_pairs=expected,
        small_side_ratio=small_side / (result.cap / n),
        total_size_ratio=size_sum / n,
        duplicate_pairs=duplicates,
        missing_pairs=missing,
    )
