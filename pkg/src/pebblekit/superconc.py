"""Superconcentrators: construction, flow-based verification, and the overlay.

A superconcentrator joins n inputs to n outputs so that any k inputs and
any k outputs are connected by k vertex-disjoint paths.  The construction
here recurses by halving: inputs fan into a half-size instance through a
complete bipartite stage and come back out through a collector stage with
one collector per output, plus a direct input->collector matching.  Routing
argument: pair up the indices present on both chosen sides through the
direct matching; at most n/2 unpaired pairs remain, which fit through the
half-size instance and land on their collectors.  The collector stage keeps
every output at a single non-chain parent, which the overlay attack's space
accounting relies on.

All reported figures (vertex count, indegree, depth) are measured from the
built graph, never assumed from asymptotic targets.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Dag, depth

_BASE_ORDER = 4


@dataclass(frozen=True)
class Superconcentrator:
    dag: Dag
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]

    def __post_init__(self):
        if len(self.inputs) != len(self.outputs):
            raise ValueError("input and output counts differ")
        if set(self.inputs) & set(self.outputs):
            raise ValueError("inputs and outputs must be disjoint")

    @property
    def order(self) -> int:
        return len(self.inputs)

    @property
    def vertex_count(self) -> int:
        return self.dag.node_count

    @property
    def depth(self) -> int:
        """Measured depth in nodes of the longest directed path."""
        return depth(self.dag)

    @property
    def max_indegree(self) -> int:
        return self.dag.max_indegree


def build_superconcentrator(n: int) -> Superconcentrator:
    """Recursive halving construction, complete bipartite stages at the leaves."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges: list[tuple[int, int]] = []
    next_id = 0

    def fresh(count: int) -> list[int]:
        nonlocal next_id
        ids = list(range(next_id, next_id + count))
        next_id += count
        return ids

    def build(m: int) -> tuple[list[int], list[int]]:
        xs = fresh(m)
        if m <= _BASE_ORDER:
            cs = fresh(m)
            ys = fresh(m)
            for x in xs:
                for c in cs:
                    edges.append((x, c))
        else:
            half = (m + 1) // 2
            sub_in, sub_out = build(half)
            cs = fresh(m)
            ys = fresh(m)
            for x in xs:
                for a in sub_in:
                    edges.append((x, a))
            for b in sub_out:
                for c in cs:
                    edges.append((b, c))
            for x, c in zip(xs, cs):
                edges.append((x, c))
        for c, y in zip(cs, ys):
            edges.append((c, y))
        return xs, ys

    ins, outs = build(n)
    return Superconcentrator(Dag(next_id, edges), tuple(ins), tuple(outs))


def _disjoint_paths_at_least(
    g: Dag, sources: tuple[int, ...], targets: tuple[int, ...], k: int
) -> bool:
    """k vertex-disjoint paths exist, via unit-vertex-capacity max flow.

    Standard node splitting: v becomes v_in -> v_out with capacity 1, every
    graph edge gets capacity 1, a super source feeds the sources and the
    targets drain into a super sink.  BFS augmentation; k is tiny here.
    """
    n = g.node_count
    s, t = 2 * n, 2 * n + 1
    cap: dict[tuple[int, int], int] = {}

    def add(u: int, v: int):
        cap[(u, v)] = cap.get((u, v), 0) + 1
        cap.setdefault((v, u), 0)

    adj: dict[int, list[int]] = {}

    def link(u: int, v: int):
        add(u, v)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    for v in range(n):
        link(2 * v, 2 * v + 1)
    for u, v in g.edges:
        link(2 * u + 1, 2 * v)
    for src in sources:
        link(s, 2 * src)
    for tgt in targets:
        link(2 * tgt + 1, t)

    flow = 0
    while flow < k:
        parent: dict[int, int] = {s: s}
        dq = deque([s])
        while dq and t not in parent:
            u = dq.popleft()
            for v in adj.get(u, ()):
                if v not in parent and cap.get((u, v), 0) > 0:
                    parent[v] = u
                    dq.append(v)
        if t not in parent:
            return False
        v = t
        while v != s:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1
    return True


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    mode: str
    checks: int
    first_failure: tuple[int, tuple[int, ...], tuple[int, ...]] | None = None


def verify_superconcentrator(
    sc: Superconcentrator,
    mode: str = "exhaustive",
    *,
    samples: int = 1000,
    rng: random.Random | None = None,
) -> VerificationReport:
    """Check the disjoint-paths property for every k.

    Exhaustive mode tries every (S1, S2) pair for every k; sampled mode
    draws ``samples`` random (k, S1, S2) triples from ``rng``.
    """
    n = sc.order
    checks = 0
    if mode == "exhaustive":
        for k in range(1, n + 1):
            for s1 in combinations(sc.inputs, k):
                for s2 in combinations(sc.outputs, k):
                    checks += 1
                    if not _disjoint_paths_at_least(sc.dag, s1, s2, k):
                        return VerificationReport(False, mode, checks, (k, s1, s2))
        return VerificationReport(True, mode, checks)
    if mode == "sampled":
        if rng is None:
            raise ValueError("sampled mode requires an rng")
        for _ in range(samples):
            k = rng.randint(1, n)
            s1 = tuple(sorted(rng.sample(sc.inputs, k)))
            s2 = tuple(sorted(rng.sample(sc.outputs, k)))
            checks += 1
            if not _disjoint_paths_at_least(sc.dag, s1, s2, k):
                return VerificationReport(False, mode, checks, (k, s1, s2))
        return VerificationReport(True, mode, checks)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class SuperconcOverlay:
    """Base graph copied onto the inputs, outputs chained, everything measured."""

    dag: Dag
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    base: Dag
    sc_depth: int
    sc_vertex_count: int

    @property
    def interior(self) -> tuple[int, ...]:
        io = set(self.inputs) | set(self.outputs)
        return tuple(v for v in self.dag.nodes() if v not in io)

    @property
    def base_order(self) -> int:
        return len(self.inputs)


def superconc_overlay(base: Dag, sc: Superconcentrator) -> SuperconcOverlay:
    """Overlay ``base`` on the inputs of ``sc`` and chain the outputs."""
    if sc.order != base.node_count:
        raise ValueError(
            f"superconcentrator order {sc.order} != base node count {base.node_count}"
        )
    edges = set(sc.dag.edges)
    for u, v in base.edges:
        edges.add((sc.inputs[u], sc.inputs[v]))
    for i in range(sc.order - 1):
        edges.add((sc.outputs[i], sc.outputs[i + 1]))
    return SuperconcOverlay(
        dag=Dag(sc.dag.node_count, sorted(edges)),
        inputs=sc.inputs,
        outputs=sc.outputs,
        base=base,
        sc_depth=sc.depth,
        sc_vertex_count=sc.vertex_count,
    )
