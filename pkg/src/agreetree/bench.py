"""Scaling benchmark: wall time and operation counters across a taxa ladder.

Profiles are generated in agreeing mode so every run goes to completion.
Counters are reported next to wall time so the near-linear behavior can be
checked without timer noise: the number of graph-edge deletions is the
budget the whole construction charges against, and the demotion-loop and
outer-loop counters have hard per-run bounds (trees per position, labels
per run).
"""

import gc
import time
from dataclasses import dataclass

import numpy as np

from agreetree.build import BuildStats, build_agreement_tree
from agreetree.generate import GeneratorConfig, generate_instance
from agreetree.profile import normalize_profile

CSV_HEADER = "n,k,backend,wall_ms,edges_deleted,while_iters,outer_iters"


@dataclass
class BenchRow:
    n: int
    k: int
    backend: str
    wall_ms: float
    edges_deleted: int
    while_iters: int
    outer_iters: int

    def csv(self):
        return "%d,%d,%s,%.3f,%d,%d,%d" % (
            self.n, self.k, self.backend, self.wall_ms,
            self.edges_deleted, self.while_iters, self.outer_iters)


def run_one(n, k, seed, backend="hdt", coverage=0.8, max_children=4,
            repeats=1):
    """Benchmark a single agreeing instance; wall time is the best of
    `repeats` runs of the construction itself (generation excluded)."""
    cfg = GeneratorConfig(taxa=n, trees=k, seed=seed, coverage=coverage,
                          max_children=max_children)
    profile, _ = generate_instance(cfg)
    normalized, _ = normalize_profile(profile)
    best = None
    stats = None
    gc_was_on = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            stats = BuildStats()
            t0 = time.perf_counter()
            outcome = build_agreement_tree(normalized, backend=backend,
                                           stats=stats)
            wall = (time.perf_counter() - t0) * 1000.0
            if not outcome.agrees:
                raise AssertionError("agreeing benchmark instance disagreed")
            if best is None or wall < best:
                best = wall
    finally:
        if gc_was_on:
            gc.enable()
    return BenchRow(n, k, backend, best, stats.edges_deleted,
                    stats.while_iters_total, stats.outer_iters)


def run_benchmark(taxa_list, trees, seed, backend="hdt", coverage=0.8,
                  max_children=4, repeats=1):
    return [run_one(n, trees, seed + i, backend, coverage, max_children,
                    repeats)
            for i, n in enumerate(taxa_list)]


def fitted_exponent(rows, value=lambda r: r.wall_ms):
    """Least-squares slope of log(value) against log(n)."""
    xs = np.log([r.n for r in rows])
    ys = np.log([max(value(r), 1e-9) for r in rows])
    return float(np.polyfit(xs, ys, 1)[0])


def rows_to_csv(rows):
    return "\n".join([CSV_HEADER] + [r.csv() for r in rows]) + "\n"
