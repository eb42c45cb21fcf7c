"""Unique Games instances: bipartite constraint graphs with bijective labels.

An instance has sides V and W, a label set {0..R-1} and one permutation per
edge; a labeling satisfies an edge (v, w) when rho(v) equals the permuted
label of w.  Instances must be regular on each side.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class UniqueGamesInstance:
    v_count: int
    w_count: int
    label_count: int
    edges: tuple[tuple[int, int, tuple[int, ...]], ...]
    _v_adj: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.v_count < 1 or self.w_count < 1:
            raise ValueError("both sides must be nonempty")
        if self.label_count < 1:
            raise ValueError("label_count must be >= 1")
        edges = tuple(
            (int(v), int(w), tuple(int(x) for x in pi)) for v, w, pi in self.edges
        )
        object.__setattr__(self, "edges", edges)
        v_deg = [0] * self.v_count
        w_deg = [0] * self.w_count
        adj: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(self.v_count)]
        for v, w, pi in edges:
            if not (0 <= v < self.v_count and 0 <= w < self.w_count):
                raise ValueError(f"edge ({v}, {w}) out of range")
            if sorted(pi) != list(range(self.label_count)):
                raise ValueError(f"constraint on edge ({v}, {w}) is not a permutation")
            v_deg[v] += 1
            w_deg[w] += 1
            adj[v].append((w, pi))
        if len(set(v_deg)) > 1 or len(set(w_deg)) > 1:
            raise ValueError("instance must be regular on each side")
        object.__setattr__(self, "_v_adj", tuple(tuple(a) for a in adj))

    @property
    def v_degree(self) -> int:
        return len(self._v_adj[0])

    def neighbors(self, v: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """(w, permutation) pairs incident to v, in edge order."""
        return self._v_adj[v]


def satisfied_fraction(
    inst: UniqueGamesInstance,
    rho_v: Sequence[int],
    rho_w: Sequence[int],
) -> Fraction:
    """Fraction of edges with rho(v) == pi(rho(w)), as an exact rational."""
    if len(rho_v) != inst.v_count or len(rho_w) != inst.w_count:
        raise ValueError("labeling must cover both sides")
    for x in list(rho_v) + list(rho_w):
        if not (0 <= x < inst.label_count):
            raise ValueError(f"label {x} out of range [0, {inst.label_count})")
    hit = sum(1 for v, w, pi in inst.edges if rho_v[v] == pi[rho_w[w]])
    return Fraction(hit, len(inst.edges))


def toy_instance() -> UniqueGamesInstance:
    """Single edge, two labels, swap constraint; the smallest regular instance."""
    return UniqueGamesInstance(
        v_count=1, w_count=1, label_count=2, edges=((0, 0, (1, 0)),)
    )
