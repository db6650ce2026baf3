"""Linear-time randomized estimation of the inversion count.

Three regimes, dispatched by how large the true count turns out to be:

1. small: a capped exact count with cap N either returns the exact answer
   or certifies that the count exceeds N;
2. middle: build red-blue cells for cap ``ceil(N**1.5 * log2 N)`` and draw
   N pair samples weighted by cell, each pair uniform over the cell
   family's sample space S; report ``hits * S / N``;
3. large: if the cell construction fails, draw N uniform pairs from
   R x B and report ``hits * N``.

Both sampling estimators are exactly unbiased: in the middle regime every
domination pair lives in exactly one cell, so a sample hits with
probability (true count)/S; in the large regime the hit probability is
(true count)/N^2.

All randomness flows through one seeded 64-bit generator
(``numpy.random.default_rng``); cell and within-cell draws use integer
arithmetic, so the stage probabilities are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log2

import numpy as np

from .cells import RedBlueCells, build_cells
from .core import Point, PointSet, ValueList, reduce_inversions, ykey_less
from .counting import count_capped_ram
from .iomodel import IoTally, RAM_PARAMS

REGIME_EXACT = "exact_small"
REGIME_CELL = "cell_sampling"
REGIME_UNIFORM = "uniform_sampling"


@dataclass(frozen=True)
class Estimate:
    """An inversion-count estimate with its provenance."""

    value: float
    regime: str
    hits: int
    sample_space: int
    n_samples: int
    epsilon_bound: float


class EmptySampleSpaceError(ValueError):
    """No candidate pairs to sample from (the true count is zero)."""


class PairSampler:
    """Three-stage pair sampler over a successful cell family.

    Stage 1 picks a cell with probability |R_i||B_i|/S, stage 2 a uniform
    blue point of the cell, stage 3 a uniform red point; the resulting
    pair is uniform over all S candidate pairs.
    """

    def __init__(self, cells: RedBlueCells):
        live = [c for c in cells.cells if c.weight > 0]
        self.weights = np.array([c.weight for c in live], dtype=np.int64)
        self.cum = np.cumsum(self.weights)
        self.total = int(self.cum[-1]) if len(live) else 0
        self.r_sizes = np.array([len(c.red) for c in live], dtype=np.int64)
        self.b_sizes = np.array([len(c.blue) for c in live], dtype=np.int64)
        self.r_offs = np.concatenate([[0], np.cumsum(self.r_sizes)])
        self.b_offs = np.concatenate([[0], np.cumsum(self.b_sizes)])

        def _cat(attr, side):
            arrs = [getattr(getattr(c, side), attr) for c in live]
            return np.concatenate(arrs) if arrs else np.empty(0)

        self.rx, self.ry, self.rt = (_cat(a, "red") for a in ("x", "y", "tiebreak"))
        self.bx, self.by, self.bt = (_cat(a, "blue") for a in ("x", "y", "tiebreak"))

    def draw_many(self, rng: np.random.Generator, m: int):
        """Draw ``m`` pairs; returns flat indices (red, blue, cell)."""
        if self.total == 0:
            raise EmptySampleSpaceError("sample space is empty")
        u = rng.integers(0, self.total, size=m)
        cell = np.searchsorted(self.cum, u, side="right")
        b_pos = rng.integers(0, self.b_sizes[cell])
        r_pos = rng.integers(0, self.r_sizes[cell])
        return self.r_offs[cell] + r_pos, self.b_offs[cell] + b_pos, cell

    def draw(self, rng: np.random.Generator):
        """Draw one pair: ``(red point, blue point, cell index)``."""
        ri, bi, cell = self.draw_many(rng, 1)
        r = Point(int(self.rx[ri[0]]), float(self.ry[ri[0]]), int(self.rt[ri[0]]))
        b = Point(int(self.bx[bi[0]]), float(self.by[bi[0]]), int(self.bt[bi[0]]))
        return r, b, int(cell[0])

    def count_hits(self, ri: np.ndarray, bi: np.ndarray) -> int:
        """How many of the drawn pairs are domination pairs."""
        dom = (self.bx[bi] > self.rx[ri]) & ykey_less(
            self.by[bi], self.bt[bi], self.ry[ri], self.rt[ri])
        return int(np.count_nonzero(dom))


def draw_cell_pair(sampler: PairSampler, rng: np.random.Generator):
    """One three-stage draw from a cell family's sample space."""
    return sampler.draw(rng)


def draw_uniform_pair(red: PointSet, blue: PointSet, rng: np.random.Generator):
    """Independent uniform red and blue points."""
    if len(red) == 0 or len(blue) == 0:
        raise ValueError("cannot sample from an empty point set")
    i = int(rng.integers(0, len(red)))
    j = int(rng.integers(0, len(blue)))
    return red.point(i), blue.point(j)


def middle_regime_cap(n: int) -> int:
    """Cell cap for the middle regime, clamped to the maximum pair count."""
    if n < 2:
        return 1
    return max(1, min(ceil(n**1.5 * log2(n)), n * (n - 1) // 2))


def estimate_inversions(values, seed: int) -> Estimate:
    """Estimate the inversion count of a list in roughly linear time."""
    if not isinstance(values, ValueList):
        values = ValueList(np.asarray(values, dtype=np.float64))
    n = len(values)
    if n < 1:
        raise ValueError("need at least one value")
    red, blue = reduce_inversions(values)

    exact = count_capped_ram(red, blue, n)
    if exact is not None:
        return Estimate(value=float(exact), regime=REGIME_EXACT, hits=0,
                        sample_space=0, n_samples=0, epsilon_bound=0.0)

    rng = np.random.default_rng(seed)
    built = build_cells(red, blue, middle_regime_cap(n), IoTally(RAM_PARAMS))
    if not built.failed:
        sampler = PairSampler(built)
        space = sampler.total
        if space == 0:
            return Estimate(value=0.0, regime=REGIME_CELL, hits=0,
                            sample_space=0, n_samples=0,
                            epsilon_bound=log2(n) / n**0.25)
        ri, bi, _ = sampler.draw_many(rng, n)
        hits = sampler.count_hits(ri, bi)
        return Estimate(value=hits * space / n, regime=REGIME_CELL, hits=hits,
                        sample_space=space, n_samples=n,
                        epsilon_bound=log2(n) / n**0.25)

    ri = rng.integers(0, n, size=n)
    bi = rng.integers(0, n, size=n)
    dom = (blue.x[bi] > red.x[ri]) & ykey_less(
        blue.y[bi], blue.tiebreak[bi], red.y[ri], red.tiebreak[ri])
    hits = int(np.count_nonzero(dom))
    return Estimate(value=float(hits * n), regime=REGIME_UNIFORM, hits=hits,
                    sample_space=n * n, n_samples=n,
                    epsilon_bound=n**-0.25)
