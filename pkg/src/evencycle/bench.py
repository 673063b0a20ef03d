"""Scaling harness: run the finder over a growing instance family and fit work vs. edges."""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import astuple, dataclass, fields
from typing import Callable, Iterable, Sequence

import numpy as np

from .detector import DetectorConfig
from .finder import find_even_cycle
from .generators import gen_c4_free_polarity, gen_high_girth, gen_random
from .graph import Graph

CSV_COLUMNS = (
    "family",
    "n",
    "m",
    "k",
    "seed",
    "wall_time_ns",
    "edges_touched",
    "detector_invocations",
    "found",
)


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    m: int
    k: int
    seed: int
    wall_time_ns: int
    edges_touched: int
    detector_invocations: int
    found: bool


assert tuple(f.name for f in fields(BenchRow)) == CSV_COLUMNS


def family_builder(family: str) -> Callable[[int, int], Graph]:
    """Instance factory ``(size, seed) -> Graph`` for a family spec.

    ``polarity`` (size = prime q), ``highgirth:<g0>`` (size = n),
    ``random:<avg degree>`` (size = n).
    """
    name, _, arg = family.partition(":")
    if name == "polarity":
        return lambda size, seed: gen_c4_free_polarity(size)
    if name == "highgirth":
        g0 = int(arg) if arg else 8
        return lambda size, seed: gen_high_girth(size, g0, seed)
    if name == "random":
        deg = float(arg) if arg else 4.0
        return lambda size, seed: gen_random(size, min(size * (size - 1) // 2, round(deg * size / 2)), seed)
    raise ValueError(f"unknown family {family!r}")


def bench_scaling(
    family: str,
    k: int,
    sizes: Sequence[int],
    seed: int = 0,
    repetitions: int = 3,
    cfg: DetectorConfig | None = None,
) -> list[BenchRow]:
    """One row per size: median wall time over ``repetitions`` finder runs plus the work counters."""
    if repetitions < 1:
        raise ValueError("repetitions must be positive")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly increasing")
    build = family_builder(family)
    cfg = cfg or DetectorConfig(k, mode="exhaustive")
    rows = []
    for size in sizes:
        g = build(size, seed)
        times = []
        report = None
        for _ in range(repetitions):
            t0 = time.perf_counter_ns()
            report = find_even_cycle(g, k, cfg)
            times.append(time.perf_counter_ns() - t0)
        rows.append(
            BenchRow(
                family,
                g.n,
                g.m,
                k,
                seed,
                int(statistics.median(times)),
                report.edges_touched,
                report.detector_invocations,
                report.found,
            )
        )
    return rows


def fit_slope(rows: Iterable[BenchRow], metric: str = "edges_touched") -> float | None:
    """Least-squares slope of ``log(metric)`` against ``log(m)``; None with fewer than two usable rows."""
    pts = [(r.m, getattr(r, metric)) for r in rows if r.m > 0 and getattr(r, metric) > 0]
    if len(pts) < 2:
        return None
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([str(v).lower() if isinstance(v, bool) else v for v in astuple(r)])
    return buf.getvalue()
