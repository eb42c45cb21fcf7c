"""Indegree reduction: replace every node by a short path, landing edges
on distinct chain positions so the result has indegree at most 2."""
from __future__ import annotations

from collections.abc import Iterable

from .graph import Dag


def block_size(g: Dag, gamma: int) -> int:
    """Chain length per original node: max indegree plus the stretch gamma."""
    if gamma < 0:
        raise ValueError("gamma must be >= 0")
    size = g.max_indegree + gamma
    if size < 1:
        raise ValueError("max indegree + gamma must be >= 1")
    return size


def idr(g: Dag, gamma: int) -> Dag:
    """Expand each node v into a chain v_1..v_{delta+gamma} (delta = indeg(g)).

    The edge from u that is the i-th incoming edge of v (incoming edges
    ordered by source id) becomes an edge from u's chain tail onto v_i, so
    chain position i receives at most one external edge and the output has
    indegree at most 2 on (delta+gamma)*N nodes.
    """
    size = block_size(g, gamma)
    n = g.node_count
    edges: list[tuple[int, int]] = []
    for v in range(n):
        base = v * size
        for i in range(size - 1):
            edges.append((base + i, base + i + 1))
        for rank, u in enumerate(g.parents(v)):
            edges.append((u * size + size - 1, base + rank))
    return Dag(n * size, edges)


def lift_reducing_set(g: Dag, gamma: int, removed: Iterable[int]) -> frozenset[int]:
    """Chain tails of the blocks of ``removed``.

    If removing S leaves depth below d in g, removing the lifted set leaves
    depth below (delta+gamma)*d in idr(g, gamma), at the same cardinality.
    """
    size = block_size(g, gamma)
    out = set()
    for v in removed:
        if not (0 <= v < g.node_count):
            raise ValueError(f"node {v} out of range")
        out.add(v * size + size - 1)
    return frozenset(out)
