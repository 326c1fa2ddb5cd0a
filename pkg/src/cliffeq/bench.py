"""Scaling sweeps over qubit count or depth, written as CSV."""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import astuple, dataclass, fields, replace
from typing import Iterable, TextIO

import numpy as np

from .equivalence import check_equivalence
from .randgen import GenConfig, gen_pair

CSV_HEADER = ("n", "depth", "m", "pair_kind", "verdict", "wall_ms", "reps", "seed")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    depth: int
    m: int
    pair_kind: str
    verdict: str
    wall_ms: float
    reps: int
    seed: int


assert tuple(f.name for f in fields(BenchRecord)) == CSV_HEADER


class BenchMemoryError(MemoryError):
    def __init__(self, n: int, depth: int):
        super().__init__(f"out of memory at n={n}, depth={depth}")
        self.n, self.depth = n, depth


def time_check(u, v, reps: int) -> tuple[str, float]:
    """Median wall time in ms of ``check_equivalence`` and its verdict."""
    times, verdicts = [], set()
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        r = check_equivalence(u, v)
        times.append((time.perf_counter_ns() - t0) / 1e6)
        verdicts.add(r.verdict)
    assert len(verdicts) == 1, "non-deterministic verdict"
    return verdicts.pop(), statistics.median(times)


def time_interleaved(pairs, reps: int) -> list[float]:
    """Median ms per pair, alternating pairs each round so drift hits all alike."""
    times = [[] for _ in pairs]
    for _ in range(reps):
        for k, (u, v) in enumerate(pairs):
            t0 = time.perf_counter_ns()
            check_equivalence(u, v)
            times[k].append((time.perf_counter_ns() - t0) / 1e6)
    return [statistics.median(t) for t in times]


def run_point(cfg: GenConfig, reps: int) -> BenchRecord:
    try:
        u, v = gen_pair(cfg)
        verdict, ms = time_check(u, v, reps)
    except MemoryError:
        raise BenchMemoryError(cfg.n, cfg.depth) from None
    expected = "Equivalent" if cfg.pair_kind == "equivalent" else "NotEquivalent"
    if verdict != expected:
        raise AssertionError(f"verdict {verdict} contradicts label {cfg.pair_kind} for {cfg}")
    return BenchRecord(cfg.n, cfg.depth, len(u) + len(v), cfg.pair_kind, verdict, ms, reps, cfg.seed)


def run_sweep(
    axis: str,
    values: Iterable[int],
    fixed: GenConfig,
    reps: int = 5,
    kinds: Iterable[str] = ("equivalent", "nonequivalent"),
    out: TextIO | None = None,
) -> list[BenchRecord]:
    """Time one generated pair per (value, kind).

    ``axis`` selects which of ``fixed.n`` / ``fixed.depth`` is swept.  Rows are
    streamed to ``out`` (with a header) as each point completes.
    """
    values = list(values)
    if axis not in ("qubits", "depth"):
        raise ValueError(f"axis must be 'qubits' or 'depth', got {axis!r}")
    if values != sorted(values):
        raise ValueError("sweep values must be ascending")
    if reps < 3:
        raise ValueError("reps must be >= 3")
    writer = None
    if out is not None:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
    records = []
    for value in values:
        for kind in kinds:
            if axis == "qubits":
                cfg = replace(fixed, n=value, pair_kind=kind)
            else:
                cfg = replace(fixed, depth=value, pair_kind=kind)
            rec = run_point(cfg, reps)
            records.append(rec)
            if writer is not None:
                writer.writerow(format_row(rec))
                out.flush()
    return records


def format_row(rec: BenchRecord) -> list:
    row = list(astuple(rec))
    row[CSV_HEADER.index("wall_ms")] = f"{rec.wall_ms:.4f}"
    return row


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])
