"""Scaling benchmark: time to reach consensus on random trust matrices.

For every ``(size, repetition)`` cell a convergent matrix is generated from a
seed derived from ``(plan.seed, size, repetition)``; the same matrix is then
run at each precision, so step counts are comparable across precisions.
Only the squaring loop is timed, and each timed run starts with cold caches.
With ``timing_repeats > 1`` a record keeps the best of that many runs.
"""

from __future__ import annotations

import csv
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TextIO

import numpy as np

from .consensus import DEFAULT_MAX_STEPS, power_consensus
from .errors import GenerationError, ValidationError
from .trust import DEFAULT_POWER_CHECK, GenerationConfig, TrustMatrix, generate_convergent

__all__ = [
    "BenchPlan",
    "BenchRecord",
    "SummaryRow",
    "RECORD_HEADER",
    "SUMMARY_HEADER",
    "desk_plan",
    "full_plan",
    "cell_seed",
    "run_bench",
    "summarize",
    "write_records_csv",
    "write_summary_csv",
]

RECORD_HEADER = ["size", "epsilon", "repetition", "steps", "elapsed_ms", "converged"]
SUMMARY_HEADER = ["size", "epsilon", "mean_steps", "mean_elapsed_ms"]


@dataclass(frozen=True)
class BenchPlan:
    sizes: tuple[int, ...]
    epsilons: tuple[float, ...] = (1e-3, 1e-5)
    repetitions: int = 5
    seed: int = 0
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValidationError("sizes must be a non-empty list of positive integers")
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValidationError(f"sizes must be strictly increasing: {list(sizes)}")
        eps = tuple(float(e) for e in self.epsilons)
        if not eps or any(e <= 0 for e in eps):
            raise ValidationError("epsilons must be positive")
        if self.repetitions < 1:
            raise ValidationError("repetitions must be >= 1")
        if self.max_steps < 1:
            raise ValidationError("max_steps must be >= 1")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "epsilons", eps)


def desk_plan(seed: int = 0, repetitions: int = 5) -> BenchPlan:
    """Sizes 50..500 in steps of 50 at both precisions."""
    return BenchPlan(tuple(range(50, 501, 50)), (1e-3, 1e-5), repetitions, seed)


def full_plan(seed: int = 0, repetitions: int = 5) -> BenchPlan:
    """Sizes 50..2000 in steps of 50, the full sweep."""
    return BenchPlan(tuple(range(50, 2001, 50)), (1e-3, 1e-5), repetitions, seed)


@dataclass(frozen=True)
class BenchRecord:
    size: int
    epsilon: float
    repetition: int
    steps: int
    elapsed: float  # milliseconds
    converged: bool
    pi: np.ndarray | None = field(default=None, repr=False, compare=False)

    def key(self) -> tuple:
        """Everything except wall-clock time."""
        return (self.size, self.epsilon, self.repetition, self.steps, self.converged)


@dataclass(frozen=True)
class SummaryRow:
    size: int
    epsilon: float
    mean_steps: float
    mean_elapsed: float


def cell_seed(seed: int, size: int, repetition: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(seed) & (2**64 - 1), size, repetition])


MatrixFactory = Callable[[int, np.random.Generator], TrustMatrix]


def _default_factory(sparsity: float, max_power_check: int) -> MatrixFactory:
    def make(size: int, rng: np.random.Generator) -> TrustMatrix:
        return generate_convergent(
            GenerationConfig(size, max_power_check=max_power_check, sparsity=sparsity), rng=rng
        )
    return make


_SCRATCH = None


def _evict_caches() -> None:
    # stream through a buffer larger than typical last-level caches
    global _SCRATCH
    if _SCRATCH is None:
        _SCRATCH = np.empty(4 * 1024 * 1024)
    _SCRATCH.fill(1.0)


def _timed(matrix, eps: float, max_steps: int, repeats: int):
    best = float("inf")
    for _ in range(repeats):
        _evict_caches()
        t0 = time.perf_counter()
        it = power_consensus(matrix, eps, max_steps)
        best = min(best, time.perf_counter() - t0)
    return it, best * 1000.0


def _run_cell(plan: BenchPlan, size: int, rep: int, factory: MatrixFactory, repeats: int) -> list[BenchRecord]:
    rng = np.random.default_rng(cell_seed(plan.seed, size, rep))
    try:
        matrix = factory(size, rng)
    except GenerationError:
        return [BenchRecord(size, eps, rep, 0, 0.0, False) for eps in plan.epsilons]
    out = []
    for eps in plan.epsilons:
        it, elapsed = _timed(matrix, eps, plan.max_steps, repeats)
        out.append(BenchRecord(size, eps, rep, it.steps, elapsed, it.converged, it.pi))
    return out


def run_bench(
    plan: BenchPlan,
    matrix_factory: MatrixFactory | None = None,
    sparsity: float = 0.0,
    max_power_check: int = DEFAULT_POWER_CHECK,
    workers: int = 1,
    timing_repeats: int = 1,
) -> list[BenchRecord]:
    """Run every ``(size, epsilon, repetition)`` cell of ``plan``.

    ``matrix_factory(size, rng)`` replaces the random generator, e.g. to
    benchmark a fixed matrix. Records come back in plan order: by size, then
    epsilon, then repetition. With ``workers > 1`` cells run on a thread
    pool; the timings then include contention.
    """
    if timing_repeats < 1:
        raise ValidationError("timing_repeats must be >= 1")
    factory = matrix_factory or _default_factory(sparsity, max_power_check)
    # first BLAS call pays one-off setup costs; keep them out of the first cell
    power_consensus(np.full((8, 8), 1 / 8), 1.0)
    np.ones((64, 64)) @ np.ones((64, 64))
    cells = [(size, rep) for size in plan.sizes for rep in range(plan.repetitions)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda c: _run_cell(plan, c[0], c[1], factory, timing_repeats), cells))
    else:
        results = [_run_cell(plan, size, rep, factory, timing_repeats) for size, rep in cells]
    by_cell = {cell: recs for cell, recs in zip(cells, results)}
    records = []
    for size in plan.sizes:
        for i, _ in enumerate(plan.epsilons):
            for rep in range(plan.repetitions):
                records.append(by_cell[(size, rep)][i])
    return records


def summarize(records: Iterable[BenchRecord]) -> list[SummaryRow]:
    """Mean steps and mean elapsed time per ``(size, epsilon)`` group, in order of appearance."""
    groups: dict[tuple[int, float], list[BenchRecord]] = defaultdict(list)
    for r in records:
        groups[(r.size, r.epsilon)].append(r)
    if not groups:
        raise ValidationError("no records to summarize")
    return [
        SummaryRow(size, eps, float(np.mean([r.steps for r in rs])), float(np.mean([r.elapsed for r in rs])))
        for (size, eps), rs in groups.items()
    ]


def write_records_csv(records: Sequence[BenchRecord], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(RECORD_HEADER)
    for r in records:
        w.writerow([r.size, repr(r.epsilon), r.repetition, r.steps, repr(r.elapsed), str(r.converged).lower()])


def write_summary_csv(rows: Sequence[SummaryRow], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SUMMARY_HEADER)
    for r in rows:
        w.writerow([r.size, repr(r.epsilon), repr(r.mean_steps), repr(r.mean_elapsed)])


def read_records_csv(fh: TextIO) -> list[BenchRecord]:
    reader = csv.DictReader(fh)
    return [
        BenchRecord(
            int(row["size"]), float(row["epsilon"]), int(row["repetition"]),
            int(row["steps"]), float(row["elapsed_ms"]), row["converged"] == "true",
        )
        for row in reader
    ]
