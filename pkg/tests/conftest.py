"""Shared fixtures: the randomized instance corpus used by several suites."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pytest

from invcount import (InstanceSpec, brute_force_count, generate,
                      reduce_inversions)
from invcount.core import PointSet


@dataclass(frozen=True)
class CorpusInstance:
    shape: str
    n: int
    seed: int
    values: np.ndarray
    red: PointSet
    blue: PointSet
    kstar: int  # brute-force oracle


def _log_uniform_n(rng: np.random.Generator, lo: int = 8, hi: int = 2000) -> int:
    return int(round(np.exp(rng.uniform(np.log(lo), np.log(hi)))))


def build_corpus(per_shape: int, rng_seed: int = 2024) -> list[CorpusInstance]:
    """Seeded instances of every shape, n <= 2000, with brute-force oracles.

    The target-inversions shape spreads its budget over the inversion-count
    grid {0, n/2, n, n**1.5, n*(n-1)/2 // 2}.
    """
    rng = np.random.default_rng(rng_seed)
    out: list[CorpusInstance] = []
    plain = ("sorted", "reverse", "random_permutation", "random_real",
             "duplicates")
    for shape in plain:
        for i in range(per_shape):
            n = _log_uniform_n(rng)
            spec = InstanceSpec(n=n, shape=shape, seed=i)
            out.append(_make(spec))
    grid = per_shape // 5
    for gi in range(5):
        for i in range(grid):
            n = max(_log_uniform_n(rng), 4)
            maxk = n * (n - 1) // 2
            k = [0, n // 2, n, min(int(n**1.5), maxk), maxk // 2][gi]
            spec = InstanceSpec(n=n, shape="target_inversions",
                                seed=1000 * gi + i, target=min(k, maxk))
            out.append(_make(spec))
    return out


def _make(spec: InstanceSpec) -> CorpusInstance:
    values = generate(spec)
    red, blue = reduce_inversions(values)
    return CorpusInstance(shape=spec.shape, n=spec.n, seed=spec.seed,
                          values=values, red=red, blue=blue,
                          kstar=brute_force_count(red, blue))


@dataclass(frozen=True)
class Corpus:
    instances: list
    build_seconds: float


@pytest.fixture(scope="session")
def oracle_corpus() -> Corpus:
    """The full 500-instances-per-shape corpus (shared across criteria)."""
    import time

    started = time.monotonic()
    instances = build_corpus(per_shape=500)
    return Corpus(instances=instances,
                  build_seconds=time.monotonic() - started)
