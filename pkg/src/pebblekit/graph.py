"""Immutable DAG substrate shared by every other module.

Nodes are dense integers ``0..n-1``.  A :class:`Dag` is validated once at
construction (acyclic, no self-loops, no duplicate edges) and never mutated
afterwards, so instances can be shared freely across concurrent searches.
Transformations always build fresh graphs.

Depth here counts *nodes*: a path visiting k nodes has depth k, and the
empty graph has depth 0.
"""
from __future__ import annotations

import heapq
from collections.abc import Iterable
from dataclasses import dataclass

ROLE_BIT = "bit"
ROLE_TEST = "test"


class CycleError(ValueError):
    """Raised when an edge set is not acyclic; carries a witness cycle."""

    def __init__(self, cycle: list[int]):
        self.cycle = list(cycle)
        super().__init__(f"graph contains a cycle: {self.cycle}")


class Dag:
    """Directed acyclic graph with forward and reverse adjacency.

    Immutable after construction.  Edges are stored sorted, adjacency lists
    are sorted tuples, and the topological order breaks ties by smallest
    node id, so every derived quantity is reproducible.
    """

    __slots__ = ("_n", "_edges", "_parents", "_children", "_topo")

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]] = ()):
        if node_count < 0:
            raise ValueError(f"node_count must be >= 0, got {node_count}")
        self._n = int(node_count)
        edge_list = sorted((int(u), int(v)) for u, v in edges)
        seen: set[tuple[int, int]] = set()
        parents: list[list[int]] = [[] for _ in range(self._n)]
        children: list[list[int]] = [[] for _ in range(self._n)]
        for u, v in edge_list:
            if not (0 <= u < self._n and 0 <= v < self._n):
                raise ValueError(f"edge ({u}, {v}) out of range for {self._n} nodes")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            children[u].append(v)
            parents[v].append(u)
        self._edges = tuple(edge_list)
        self._parents = tuple(tuple(sorted(p)) for p in parents)
        self._children = tuple(tuple(sorted(c)) for c in children)
        self._topo = self._toposort()

    def _toposort(self) -> tuple[int, ...]:
        indeg = [len(self._parents[v]) for v in range(self._n)]
        ready = [v for v in range(self._n) if indeg[v] == 0]
        heapq.heapify(ready)
        order: list[int] = []
        while ready:
            v = heapq.heappop(ready)
            order.append(v)
            for c in self._children[v]:
                indeg[c] -= 1
                if indeg[c] == 0:
                    heapq.heappush(ready, c)
        if len(order) != self._n:
            raise CycleError(self._find_cycle())
        return tuple(order)

    def _find_cycle(self) -> list[int]:
        color = [0] * self._n  # 0 unseen, 1 on stack, 2 done
        stack: list[int] = []

        def dfs(v: int) -> list[int] | None:
            color[v] = 1
            stack.append(v)
            for c in self._children[v]:
                if color[c] == 1:
                    i = stack.index(c)
                    return stack[i:] + [c]
                if color[c] == 0:
                    found = dfs(c)
                    if found is not None:
                        return found
            stack.pop()
            color[v] = 2
            return None

        for v in range(self._n):
            if color[v] == 0:
                found = dfs(v)
                if found is not None:
                    return found
        raise AssertionError("no cycle found in cyclic graph")

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def nodes(self) -> range:
        return range(self._n)

    def parents(self, v: int) -> tuple[int, ...]:
        return self._parents[v]

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def indeg(self, v: int) -> int:
        return len(self._parents[v])

    def outdeg(self, v: int) -> int:
        return len(self._children[v])

    @property
    def max_indegree(self) -> int:
        return max((len(p) for p in self._parents), default=0)

    @property
    def max_outdegree(self) -> int:
        return max((len(c) for c in self._children), default=0)

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in range(self._n) if not self._parents[v])

    @property
    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in range(self._n) if not self._children[v])

    def topological_order(self) -> tuple[int, ...]:
        return self._topo

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._children[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Dag(node_count={self._n}, edge_count={len(self._edges)})"


def _as_node_set(g: Dag, nodes: Iterable[int]) -> frozenset[int]:
    out = frozenset(int(v) for v in nodes)
    bad = [v for v in out if not (0 <= v < g.node_count)]
    if bad:
        raise ValueError(f"nodes {sorted(bad)} out of range for {g.node_count} nodes")
    return out


def depth_profile(
    g: Dag,
    counted: Iterable[int] | None = None,
    removed: Iterable[int] = (),
) -> list[int | None]:
    """Per-node path statistics after deleting ``removed``.

    Entry v is the maximum number of ``counted`` nodes on a directed path
    ending at v (v itself included when counted), or None for removed nodes.
    With ``counted=None`` every node counts, so the entry is the plain
    longest-path-ending-here node count.
    """
    rm = _as_node_set(g, removed)
    ct = None if counted is None else _as_node_set(g, counted)
    prof: list[int | None] = [None] * g.node_count
    for v in g.topological_order():
        if v in rm:
            continue
        best = 0
        for u in g.parents(v):
            pu = prof[u]
            if pu is not None and pu > best:
                best = pu
        weight = 1 if (ct is None or v in ct) else 0
        prof[v] = best + weight
    return prof


def depth(g: Dag, removed: Iterable[int] = ()) -> int:
    """Number of nodes on the longest directed path of ``g`` minus ``removed``."""
    prof = depth_profile(g, None, removed)
    return max((p for p in prof if p is not None), default=0)


def depth_counted(
    g: Dag, counted: Iterable[int], removed: Iterable[int] = ()
) -> int:
    """Maximum number of ``counted`` nodes on any directed path avoiding ``removed``."""
    prof = depth_profile(g, counted, removed)
    return max((p for p in prof if p is not None), default=0)


def longest_path(g: Dag, removed: Iterable[int] = ()) -> list[int]:
    """One longest directed path of ``g`` minus ``removed`` (deterministic)."""
    prof = depth_profile(g, None, removed)
    end = None
    best = 0
    for v in range(g.node_count):
        p = prof[v]
        if p is not None and p > best:
            best, end = p, v
    if end is None:
        return []
    path = [end]
    want = best - 1
    while want > 0:
        v = path[-1]
        for u in g.parents(v):
            if prof[u] == want:
                path.append(u)
                want -= 1
                break
        else:  # pragma: no cover - profile guarantees a predecessor
            raise AssertionError("broken depth profile")
    path.reverse()
    return path


def delete(g: Dag, removed: Iterable[int]) -> Dag:
    """New graph with ``removed`` nodes dropped and survivors relabeled compactly."""
    rm = _as_node_set(g, removed)
    survivors = [v for v in range(g.node_count) if v not in rm]
    relabel = {old: new for new, old in enumerate(survivors)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u not in rm and v not in rm
    ]
    return Dag(len(survivors), edges)


def disjoint_union(a: Dag, b: Dag) -> Dag:
    """Disjoint union; b's nodes are shifted past a's."""
    off = a.node_count
    edges = list(a.edges) + [(u + off, v + off) for u, v in b.edges]
    return Dag(a.node_count + b.node_count, edges)


@dataclass(frozen=True)
class LayeredDag:
    """A Dag with a layer index and a role (bit or test) per node.

    Edges must go to strictly higher layers, except that a bit vertex may
    feed a test vertex in its own layer.  Bit vertices are the undeletable
    (weight-infinity) nodes; test vertices have weight one.
    """

    dag: Dag
    layers: tuple[int, ...]
    roles: tuple[str, ...]

    def __post_init__(self):
        n = self.dag.node_count
        if len(self.layers) != n or len(self.roles) != n:
            raise ValueError("layers/roles length must match node count")
        for r in self.roles:
            if r not in (ROLE_BIT, ROLE_TEST):
                raise ValueError(f"unknown role {r!r}")
        for u, v in self.dag.edges:
            lu, lv = self.layers[u], self.layers[v]
            if lu < lv:
                continue
            if lu == lv and self.roles[u] == ROLE_BIT and self.roles[v] == ROLE_TEST:
                continue
            raise ValueError(
                f"edge ({u}, {v}) violates layer direction: "
                f"{self.roles[u]}@{lu} -> {self.roles[v]}@{lv}"
            )

    def bit_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.dag.nodes() if self.roles[v] == ROLE_BIT)

    def test_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.dag.nodes() if self.roles[v] == ROLE_TEST)

    def layer_nodes(self, layer: int, role: str | None = None) -> tuple[int, ...]:
        return tuple(
            v
            for v in self.dag.nodes()
            if self.layers[v] == layer and (role is None or self.roles[v] == role)
        )

    @property
    def max_layer(self) -> int:
        return max(self.layers, default=0)
