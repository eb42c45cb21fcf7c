"""Exact minimum cumulative pebbling cost for small graphs.

Least-cost search over states (configuration, set of sinks already touched)
with transition cost equal to the size of the next configuration.  Successor
configurations are every keep-subset of the current pebbles joined with a
nonempty subset of the currently placeable nodes; rounds that place nothing
are never part of a minimum-cost pebbling, so they are not generated.

The only forced canonicalisation is dropping pebbles that sit on sinks
already counted as touched: a sink pebble can never serve a later placement,
so removing it is free and preserves optimality.  Everything else is left to
the search, which keeps the oracle exact.

The search is A* under an admissible, consistent remaining-cost estimate:
every untouched sink still needs at least one pebble (so the count of
untouched sinks is a lower bound), and a sink whose unpebbled ancestor
chains have length L cannot be reached in fewer than L rounds, each of
which costs at least one.
"""
from __future__ import annotations

import heapq
import os
from dataclasses import dataclass

from .graph import Dag
from .pebbling import Transcript, cost, pebble_everything

DEFAULT_NODE_LIMIT = 12
DEFAULT_MAX_STATES = 400_000
NODE_LIMIT_ENV = "PEBBLEKIT_ORACLE_NODE_LIMIT"

EXACT = "exact"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class OracleResult:
    status: str
    value: int | None
    transcript: Transcript | None
    lower_bound: int
    upper_bound: int
    states_expanded: int

    @property
    def exact(self) -> bool:
        return self.status == EXACT


def _node_limit(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(NODE_LIMIT_ENV)
    if env:
        return int(env)
    return DEFAULT_NODE_LIMIT


def exact_pcc(
    g: Dag,
    *,
    max_states: int = DEFAULT_MAX_STATES,
    node_limit: int | None = None,
) -> OracleResult:
    """Exact minimum cumulative cost plus one optimal witness transcript.

    Raises ValueError above ``node_limit`` nodes (env override via
    PEBBLEKIT_ORACLE_NODE_LIMIT); returns a budget-exceeded result carrying
    the best lower/upper bounds when ``max_states`` expansions are hit.
    """
    limit = _node_limit(node_limit)
    n = g.node_count
    if n > limit:
        raise ValueError(f"oracle limited to {limit} nodes, got {n}")
    if n == 0:
        return OracleResult(EXACT, 0, Transcript([]), 0, 0, 0)

    topo = g.topological_order()
    parents = [g.parents(v) for v in range(n)]
    parent_mask = [0] * n
    for v in range(n):
        for u in parents[v]:
            parent_mask[v] |= 1 << u
    sinks = list(g.sinks)
    sink_mask_of_node = {v: 1 << i for i, v in enumerate(sinks)}
    all_done = (1 << len(sinks)) - 1
    popcount = [bin(x).count("1") for x in range(1 << n)]

    incumbent_transcript = pebble_everything(g)
    incumbent = cost(incumbent_transcript).cumulative

    def estimate(config: int, done: int) -> int:
        # consistent lower bound on remaining cost: rounds needed to reach
        # the deepest untouched sink, and one pebble per untouched sink
        level = [0] * n
        for v in topo:
            if config >> v & 1:
                continue
            best = 0
            for u in parents[v]:
                if level[u] > best:
                    best = level[u]
            level[v] = best + 1
        remaining = 0
        worst = 0
        for i, s in enumerate(sinks):
            if not done >> i & 1:
                remaining += 1
                if level[s] > worst:
                    worst = level[s]
        return worst if worst > remaining else remaining

    start = 0
    dist: dict[int, int] = {start: 0}
    pred: dict[int, tuple[int, int]] = {}
    heap: list[tuple[int, int, int]] = [(estimate(0, 0), 0, start)]
    expanded = 0
    best_popped_f = 0
    config_all = (1 << n) - 1
    drop_mask_cache: dict[int, int] = {0: 0}

    goal_key: int | None = None
    while heap:
        f, d, key = heapq.heappop(heap)
        if d > dist.get(key, -1):
            continue
        best_popped_f = f
        config = key & config_all
        done = key >> n
        if done == all_done:
            goal_key = key
            break
        expanded += 1
        if expanded > max_states:
            return OracleResult(
                BUDGET_EXCEEDED,
                None,
                None,
                lower_bound=best_popped_f,
                upper_bound=incumbent,
                states_expanded=expanded,
            )
        avail = 0
        for v in range(n):
            if not config >> v & 1 and (parent_mask[v] & config) == parent_mask[v]:
                avail |= 1 << v
        if not avail:
            continue
        add = avail
        while add:
            placed_sinks = 0
            for s in sinks:
                if add >> s & 1:
                    placed_sinks |= sink_mask_of_node[s]
            new_done = done | placed_sinks
            drop = drop_mask_cache.get(new_done)
            if drop is None:
                drop = 0
                for i, s in enumerate(sinks):
                    if new_done >> i & 1:
                        drop |= 1 << s
                drop_mask_cache[new_done] = drop
            done_shift = new_done << n
            keep = config
            while True:
                actual = keep | add
                nd = d + popcount[actual]
                if nd <= incumbent:
                    nkey = (actual & ~drop) | done_shift
                    if nd < dist.get(nkey, nd + 1):
                        dist[nkey] = nd
                        pred[nkey] = (key, actual)
                        h = estimate(actual & ~drop, new_done)
                        heapq.heappush(heap, (nd + h, nd, nkey))
                if keep == 0:
                    break
                keep = (keep - 1) & config
            add = (add - 1) & avail

    if goal_key is None:
        # every state cheaper than the incumbent is exhausted; the baseline
        # transcript is optimal
        return OracleResult(
            EXACT,
            incumbent,
            incumbent_transcript,
            incumbent,
            incumbent,
            expanded,
        )

    value = dist[goal_key]
    rounds: list[frozenset[int]] = []
    key = goal_key
    while key in pred:
        key, actual = pred[key]
        rounds.append(frozenset(v for v in range(n) if actual >> v & 1))
    rounds.reverse()
    return OracleResult(
        EXACT, value, Transcript(rounds), value, value, expanded
    )
