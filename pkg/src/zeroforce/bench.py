"""Timing ladder for the chordal algorithm."""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Sequence, TextIO

from .generators import random_chordal
from .zplus_chordal import zplus_chordal

DEFAULT_SIZES = (10**3, 10**4, 10**5, 10**6)


@dataclass(frozen=True)
class BenchRow:
    target_edges: int
    n: int
    m: int
    median_seconds: float
    seconds_per_unit: float  # median time / (n + m)
    zplus: int


def run_bench(
    sizes: Sequence[int] = DEFAULT_SIZES,
    seed: int = 0,
    repeats: int = 5,
    density: float = 0.9,
) -> list[BenchRow]:
    """Time ``zplus_chordal`` on one random chordal graph per rung.

    With ``density = 0.9`` the simplicial-extension generator settles at
    about ten edges per vertex, so each rung is grown until it reaches its
    edge target.  Graph generation is not timed.
    """
    rows = []
    for target in sizes:
        g = random_chordal(target, density, seed, max_edges=target)
        times = []
        result = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            result = zplus_chordal(g)
            times.append(time.perf_counter() - t0)
        med = statistics.median(times)
        rows.append(BenchRow(target, g.n, g.m, med, med / (g.n + g.m), result.zplus))
    return rows


def spread(rows: Sequence[BenchRow]) -> float:
    """Largest over smallest time-per-(n+m) across rungs."""
    per = [r.seconds_per_unit for r in rows]
    return max(per) / min(per)


def write_csv(rows: Sequence[BenchRow], fh: TextIO) -> None:
    writer = csv.DictWriter(fh, fieldnames=list(BenchRow.__dataclass_fields__))
    writer.writeheader()
    for r in rows:
        writer.writerow(asdict(r))


def read_csv(fh: TextIO) -> list[BenchRow]:
    rows = []
    for rec in csv.DictReader(fh):
        rows.append(
            BenchRow(
                int(rec["target_edges"]),
                int(rec["n"]),
                int(rec["m"]),
                float(rec["median_seconds"]),
                float(rec["seconds_per_unit"]),
                int(rec["zplus"]),
            )
        )
    return rows
