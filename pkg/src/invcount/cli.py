"""Command-line surface: counting, estimation, and benchmark sweeps.

Reports are single-line JSON objects; benchmarks emit RFC-4180 CSV with a
header row.  Exit status: 0 on success, 2 on usage errors, 3 on input
parse errors.  With identical flags and seed, output is byte-identical
(wall-clock timing is only included when requested with --timing).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time

import numpy as np

from . import instances
from .approx import estimate_inversions
from .core import brute_force_count, mergesort_count, reduce_inversions
from .counting import (count_adaptive, count_adaptive_ram, count_capped,
                       count_nonadaptive)
from .iomodel import EmParams, IoTally

EXIT_USAGE = 2
EXIT_PARSE = 3

ALGORITHMS = ("brute", "mergesort", "nonadaptive", "capped", "adaptive",
              "adaptive-ram")

_SHAPE_FLAGS = {
    "sorted": "sorted",
    "reverse": "reverse",
    "random-permutation": "random_permutation",
    "random-real": "random_real",
    "duplicates": "duplicates",
    "target-inversions": "target_inversions",
}


class InputParseError(Exception):
    def __init__(self, line_no: int, text: str):
        super().__init__(f"line {line_no}: cannot parse value {text!r}")
        self.line_no = line_no


def read_values(stream) -> np.ndarray:
    """One decimal value per line; blank lines ignored."""
    values = []
    for line_no, line in enumerate(stream, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            v = float(text)
        except ValueError:
            raise InputParseError(line_no, text) from None
        if not np.isfinite(v):
            raise InputParseError(line_no, text)
        values.append(v)
    return np.array(values, dtype=np.float64)


def _load_instance(args) -> tuple[np.ndarray, dict]:
    if getattr(args, "input", None):
        if args.input == "-":
            values = read_values(sys.stdin)
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                values = read_values(fh)
        meta = {"source": args.input, "n": len(values)}
    else:
        shape = _SHAPE_FLAGS[args.shape]
        spec = instances.InstanceSpec(
            n=args.n, shape=shape, seed=args.seed,
            target=getattr(args, "k", None),
            dup_fraction=getattr(args, "dup_frac", 0.3),
        )
        values = instances.generate(spec)
        meta = {"shape": args.shape, "n": args.n}
    digest = hashlib.sha256(values.tobytes()).hexdigest()[:16]
    meta["digest"] = digest
    return values, meta


def _run_counter(alg: str, values: np.ndarray, params: EmParams, cap):
    """Returns (count, rounds, tally)."""
    tally = IoTally(params)
    red, blue = reduce_inversions(values)
    if alg == "brute":
        return brute_force_count(red, blue), 0, tally
    if alg == "mergesort":
        return mergesort_count(values), 0, tally
    if alg == "nonadaptive":
        return count_nonadaptive(red, blue, params, tally), 0, tally
    if alg == "capped":
        res = count_capped(red, blue, cap, params, tally)
        return res, 0, tally
    if alg == "adaptive":
        res = count_adaptive(red, blue, params, tally)
        return res.count, res.rounds, tally
    if alg == "adaptive-ram":
        res = count_adaptive_ram(red, blue)
        return res.count, res.rounds, tally
    raise ValueError(f"unknown algorithm {alg!r}")


def _emit(report: dict) -> None:
    print(json.dumps(report, sort_keys=True, separators=(",", ":")))


def cmd_count(args) -> int:
    values, meta = _load_instance(args)
    params = EmParams(args.mem, args.block)
    started = time.perf_counter_ns()
    count, rounds, tally = _run_counter(args.alg, values, params, args.cap)
    elapsed = time.perf_counter_ns() - started
    report = {
        "command": "count",
        "algorithm": args.alg,
        "instance": meta,
        "mem": args.mem,
        "block": args.block,
        "seed": args.seed,
        "count": count if count is None else int(count),
        "failed": count is None,
        "rounds": rounds,
        "io_reads": tally.reads,
        "io_writes": tally.writes,
    }
    if args.timing:
        report["wall_ns"] = elapsed
    if args.verify:
        if len(values) > 2000:
            print("--verify requires n <= 2000", file=sys.stderr)
            return EXIT_USAGE
        expected = brute_force_count(*reduce_inversions(values))
        if count is not None and count != expected:
            print(f"VERIFY FAILED: got {count}, oracle {expected}", file=sys.stderr)
            return 1
        report["verified"] = True
    _emit(report)
    return 0


def cmd_estimate(args) -> int:
    values, meta = _load_instance(args)
    started = time.perf_counter_ns()
    est = estimate_inversions(values, args.seed)
    elapsed = time.perf_counter_ns() - started
    report = {
        "command": "estimate",
        "instance": meta,
        "seed": args.seed,
        "value": est.value,
        "regime": est.regime,
        "hits": est.hits,
        "sample_space": est.sample_space,
    }
    if args.timing:
        report["wall_ns"] = elapsed
    _emit(report)
    return 0


def cmd_bench(args) -> int:
    params = EmParams(args.mem, args.block)
    kstars = [int(s) for s in args.kstar.split(",")]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "mem", "block", "kstar", "algorithm", "seed",
                     "io_reads", "io_writes", "rounds", "wall_ns"])
    for kstar in kstars:
        for s in range(args.seeds):
            seed = args.seed + s
            spec = instances.InstanceSpec(
                n=args.n, shape="target_inversions", seed=seed, target=kstar)
            values = instances.generate(spec)
            started = time.perf_counter_ns()
            count, rounds, tally = _run_counter(args.alg, values, params, args.cap)
            elapsed = time.perf_counter_ns() - started
            writer.writerow([args.n, args.mem, args.block, kstar, args.alg,
                             seed, tally.reads, tally.writes, rounds,
                             elapsed if args.timing else 0])
    return 0


def _add_common(p, with_alg=True):
    if with_alg:
        p.add_argument("--alg", choices=ALGORITHMS, default="adaptive")
    p.add_argument("--n", type=int, default=1000, help="instance length")
    p.add_argument("--shape", choices=sorted(_SHAPE_FLAGS), default="random-permutation")
    p.add_argument("--k", type=int, default=None,
                   help="target inversion count (target-inversions shape)")
    p.add_argument("--dup-frac", type=float, default=0.3,
                   help="duplicate fraction (duplicates shape)")
    p.add_argument("--mem", type=int, default=2048, help="memory size M in words")
    p.add_argument("--block", type=int, default=32, help="block size B in words")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", help="read values from FILE ('-' for stdin)")
    p.add_argument("--cap", type=int, default=None,
                   help="cap K for the capped algorithm")
    p.add_argument("--timing", action="store_true",
                   help="include wall time in the report (breaks byte-determinism)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invcount",
        description="Exact and approximate inversion counting with an I/O cost model.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_count = sub.add_parser("count", help="run an exact counter")
    _add_common(p_count)
    p_count.add_argument("--verify", action="store_true",
                         help="cross-check against the brute-force oracle")
    p_count.set_defaults(func=cmd_count)

    p_est = sub.add_parser("estimate", help="run the randomized estimator")
    _add_common(p_est, with_alg=False)
    p_est.set_defaults(func=cmd_estimate)

    p_bench = sub.add_parser("bench", help="sweep a benchmark grid, emit CSV")
    p_bench.add_argument("--alg", choices=ALGORITHMS, default="adaptive")
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--mem", type=int, default=2048)
    p_bench.add_argument("--block", type=int, default=32)
    p_bench.add_argument("--kstar", required=True,
                         help="comma-separated target inversion counts")
    p_bench.add_argument("--seeds", type=int, default=1)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--cap", type=int, default=None)
    p_bench.add_argument("--timing", action="store_true")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cmd == "count" and args.alg == "capped" and args.cap is None:
        parser.error("--alg capped requires --cap")
    if getattr(args, "shape", None) == "target-inversions" and \
            getattr(args, "k", None) is None and not getattr(args, "input", None):
        parser.error("--shape target-inversions requires --k")
    try:
        return args.func(args)
    except InputParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
