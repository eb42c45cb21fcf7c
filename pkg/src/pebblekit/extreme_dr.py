"""Randomized search for extreme depth-robust graphs, with exact certification.

A graph on n nodes is gamma-extreme when it is (e, d)-depth-robust for every
e + d <= (1 - gamma) * n.  Robustness is closed downward in both e and d, so
checking the frontier points (e, F - e) with F = floor((1 - gamma) * n)
certifies the whole region.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .graph import Dag
from .robustness import DEPTH_ROBUST, RobustnessReport, is_depth_robust


def complete_dag(n: int) -> Dag:
    """All edges (i, j) with i < j; trivially gamma-extreme for any gamma >= 0."""
    return Dag(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def extreme_frontier(n: int, gamma: float) -> list[tuple[int, int]]:
    """Frontier points (e, d) with e + d = floor((1 - gamma) * n), d >= 1."""
    if not 0 <= gamma < 1:
        raise ValueError("gamma must be in [0, 1)")
    total = math.floor((1 - gamma) * n)
    return [(e, total - e) for e in range(0, total) if total - e >= 1]


@dataclass(frozen=True)
class ExtremeReport:
    passed: bool
    certified: bool  # every frontier verdict was exact
    gamma: float
    frontier: tuple[tuple[int, int], ...]
    verdicts: tuple[RobustnessReport, ...]


def verify_extreme_dr(
    g: Dag, gamma: float, *, max_expanded: int = 200_000
) -> ExtremeReport:
    """Check every frontier point exactly; one reducible point fails the graph."""
    frontier = extreme_frontier(g.node_count, gamma)
    verdicts = []
    passed = True
    certified = True
    for e, d in frontier:
        rep = is_depth_robust(g, e, d, max_expanded=max_expanded)
        verdicts.append(rep)
        if rep.verdict != DEPTH_ROBUST:
            passed = False
        if rep.method != "exact":
            certified = False
    return ExtremeReport(
        passed and certified, certified, gamma, tuple(frontier), tuple(verdicts)
    )


@dataclass(frozen=True)
class SampleReport:
    dag: Dag | None
    attempts_used: int
    report: ExtremeReport | None
    best_dag: Dag | None = None
    best_passed_points: int = 0


def _random_bounded_dag(n: int, degree_cap: int, rng: random.Random) -> Dag:
    edges: list[tuple[int, int]] = []
    outdeg = [0] * n
    for v in range(1, n):
        want = rng.randint(1, min(v, degree_cap))
        candidates = [u for u in range(v) if outdeg[u] < degree_cap]
        rng.shuffle(candidates)
        for u in candidates[:want]:
            edges.append((u, v))
            outdeg[u] += 1
    return Dag(n, edges)


def sample_extreme_dr(
    n: int,
    gamma: float,
    seed: int,
    attempts: int = 200,
    degree_cap: int | None = None,
) -> SampleReport:
    """Sample degree-bounded DAGs until one certifies gamma-extreme.

    The degree cap defaults to max(2, ceil(2*log2 n)) on both indegree and
    outdegree.  Returns the failure report with the best candidate seen when
    attempts run out.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if degree_cap is None:
        degree_cap = max(2, math.ceil(2 * math.log2(max(n, 2))))
    rng = random.Random(seed)
    best: Dag | None = None
    best_points = -1
    for attempt in range(1, attempts + 1):
        g = _random_bounded_dag(n, degree_cap, rng)
        report = verify_extreme_dr(g, gamma)
        if report.passed:
            return SampleReport(g, attempt, report, g, len(report.frontier))
        points = sum(1 for r in report.verdicts if r.verdict == DEPTH_ROBUST)
        if points > best_points:
            best, best_points = g, points
    return SampleReport(None, attempts, None, best, max(best_points, 0))
