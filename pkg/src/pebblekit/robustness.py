"""Depth-reducing sets, depth-robustness verdicts and the coloring view.

A graph is (e, d)-reducible when some set S of at most e nodes leaves no
directed path with d nodes; otherwise it is (e, d)-depth-robust.  Verdicts
always carry a method tag: "exact" means the search provably covered every
candidate set, "bounded-search" means the budget ran out and only the
absence of a witness can be reported.

For layered bit/test graphs the same question can be phrased as coloring
the bit vertices: a test vertex is consistent with a coloring when all its
bit parents receive strictly smaller colors than all its bit children, and
deleting exactly the inconsistent test vertices bounds the bit-counted
depth by the number of colors.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .graph import (
    ROLE_BIT,
    ROLE_TEST,
    Dag,
    LayeredDag,
    depth,
    depth_profile,
    longest_path,
)

EXACT = "exact"
BOUNDED = "bounded-search"

REDUCIBLE = "reducible"
DEPTH_ROBUST = "depth-robust"
NO_WITNESS = "no-witness-found"


@dataclass(frozen=True)
class ReducibilityCertificate:
    """A deletion set together with the depth bound it claims to enforce."""

    removed: frozenset[int]
    target_depth: int

    def __post_init__(self):
        if self.target_depth < 1:
            raise ValueError("target_depth must be positive")
        object.__setattr__(self, "removed", frozenset(self.removed))


def verify_certificate(g: Dag, cert: ReducibilityCertificate) -> bool:
    """True iff deleting the certificate set leaves depth below the target."""
    return depth(g, cert.removed) < cert.target_depth


@dataclass(frozen=True)
class ReductionSearch:
    """Outcome of a minimum depth-reducing-set search."""

    target_depth: int
    size: int | None
    witness: frozenset[int] | None
    method: str
    nodes_expanded: int

    @property
    def exact(self) -> bool:
        return self.method == EXACT


@dataclass(frozen=True)
class RobustnessReport:
    budget: int
    target_depth: int
    verdict: str
    method: str
    witness: frozenset[int] | None
    nodes_expanded: int


def _greedy_reducing_set(g: Dag, d: int) -> set[int]:
    # incumbent for branch and bound: repeatedly delete the most central
    # node of a current longest path
    removed: set[int] = set()
    while True:
        path = longest_path(g, removed)
        if len(path) < d:
            return removed
        removed.add(path[len(path) // 2])


def min_depth_reducing_set(
    g: Dag,
    d: int,
    *,
    max_expanded: int = 200_000,
    size_cap: int | None = None,
) -> ReductionSearch:
    """Smallest S with depth(g - S) < d, by branch and bound.

    Branches on the nodes of a d-node window of a current longest path
    (any surviving path with d nodes must lose one of them).  With
    ``size_cap`` the search only looks for a witness of at most that size
    and stops at the first one found.  Intended to stay exact up to roughly
    25 nodes; a blown budget downgrades the method tag to bounded-search.
    """
    if d < 1:
        raise ValueError("d must be positive")
    greedy = _greedy_reducing_set(g, d)
    best_size = len(greedy)
    best_set: frozenset[int] | None = frozenset(greedy)
    if size_cap is not None and best_size > size_cap:
        best_size = size_cap + 1
        best_set = None

    expanded = 0
    truncated = False
    first_hit = size_cap is not None

    def recurse(removed: set[int]):
        nonlocal best_size, best_set, expanded, truncated
        if truncated or (first_hit and best_set is not None):
            return
        expanded += 1
        if expanded > max_expanded:
            truncated = True
            return
        path = longest_path(g, removed)
        if len(path) < d:
            if len(removed) < best_size or (first_hit and best_set is None):
                best_size = len(removed)
                best_set = frozenset(removed)
            return
        if len(removed) + 1 >= best_size and not (first_hit and best_set is None):
            return
        if size_cap is not None and len(removed) + 1 > size_cap:
            return
        for v in path[:d]:
            removed.add(v)
            recurse(removed)
            removed.remove(v)
            if truncated or (first_hit and best_set is not None):
                return

    recurse(set())
    method = BOUNDED if truncated else EXACT
    if best_set is None:
        return ReductionSearch(d, None, None, method, expanded)
    return ReductionSearch(d, len(best_set), best_set, method, expanded)


def is_depth_robust(
    g: Dag, e: int, d: int, *, max_expanded: int = 200_000
) -> RobustnessReport:
    """Exact verdict on (e, d)-depth-robustness when the search completes."""
    if e < 0:
        raise ValueError("e must be >= 0")
    res = min_depth_reducing_set(g, d, max_expanded=max_expanded, size_cap=e)
    if res.witness is not None and len(res.witness) <= e:
        return RobustnessReport(e, d, REDUCIBLE, EXACT, res.witness, res.nodes_expanded)
    if res.exact:
        return RobustnessReport(e, d, DEPTH_ROBUST, EXACT, None, res.nodes_expanded)
    return RobustnessReport(e, d, NO_WITNESS, BOUNDED, None, res.nodes_expanded)


def _bit_neighbors(ldag: LayeredDag, v: int) -> tuple[list[int], list[int]]:
    bits_in = [u for u in ldag.dag.parents(v) if ldag.roles[u] == ROLE_BIT]
    bits_out = [u for u in ldag.dag.children(v) if ldag.roles[u] == ROLE_BIT]
    return bits_in, bits_out


def coloring_to_set(ldag: LayeredDag, coloring: Mapping[int, int]) -> frozenset[int]:
    """Test vertices inconsistent with a bit coloring.

    A test vertex is inconsistent when the largest color among its bit
    parents reaches the smallest color among its bit children.  Deleting the
    returned set guarantees that no surviving path carries more bit vertices
    than the largest color used.
    """
    for b in ldag.bit_vertices():
        if b not in coloring:
            raise ValueError(f"coloring misses bit vertex {b}")
    out: set[int] = set()
    for v in ldag.test_vertices():
        bits_in, bits_out = _bit_neighbors(ldag, v)
        if not bits_in or not bits_out:
            continue
        if max(coloring[b] for b in bits_in) >= min(coloring[b] for b in bits_out):
            out.add(v)
    return frozenset(out)


def set_to_coloring(ldag: LayeredDag, removed: Iterable[int]) -> dict[int, int]:
    """Bit coloring induced by deleting a set of test vertices.

    Each bit vertex gets the maximum number of bit vertices on any surviving
    path ending at it, so every surviving test vertex is consistent and the
    number of colors equals the surviving bit-counted depth.  Rejects sets
    touching bit vertices, which are undeletable.
    """
    rm = frozenset(removed)
    for v in rm:
        if ldag.roles[v] == ROLE_BIT:
            raise ValueError(f"node {v} is a bit vertex and cannot be deleted")
    prof = depth_profile(ldag.dag, ldag.bit_vertices(), rm)
    return {b: prof[b] for b in ldag.bit_vertices() if prof[b] is not None}
