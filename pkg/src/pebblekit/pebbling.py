"""Parallel black pebbling: transcripts, legality checking and cost accounting.

A transcript is the sequence of pebble configurations P_1..P_t with an
implicit empty P_0.  A placement of v in round i is legal when all parents
of v carried pebbles in round i-1; removals are unrestricted.  A transcript
is complete when every sink holds a pebble in some round (not necessarily
the same one for all sinks).
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Dag, depth_profile

PARALLEL = "parallel"
SEQUENTIAL = "sequential"


class Transcript:
    """Immutable sequence of pebble configurations."""

    __slots__ = ("_rounds",)

    def __init__(self, rounds: Iterable[Iterable[int]]):
        self._rounds = tuple(frozenset(int(v) for v in r) for r in rounds)

    @property
    def rounds(self) -> tuple[frozenset[int], ...]:
        return self._rounds

    def __len__(self) -> int:
        return len(self._rounds)

    def __iter__(self):
        return iter(self._rounds)

    def __getitem__(self, i):
        return self._rounds[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Transcript):
            return NotImplemented
        return self._rounds == other._rounds

    def __hash__(self) -> int:
        return hash(self._rounds)

    def __repr__(self) -> str:
        return f"Transcript(rounds={len(self._rounds)})"

    def touched(self) -> frozenset[int]:
        out: set[int] = set()
        for r in self._rounds:
            out |= r
        return frozenset(out)

    def to_lists(self) -> list[list[int]]:
        return [sorted(r) for r in self._rounds]


@dataclass(frozen=True)
class PebblingCost:
    cumulative: int
    space: int
    time: int
    space_time: int


@dataclass(frozen=True)
class LegalityReport:
    legal: bool
    complete: bool
    mode: str
    violation_round: int | None = None
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.legal and self.complete


def cost(p: Transcript) -> PebblingCost:
    """Cumulative, space, time and space-time cost of a transcript."""
    sizes = [len(r) for r in p.rounds]
    space = max(sizes, default=0)
    time = len(sizes)
    return PebblingCost(
        cumulative=sum(sizes), space=space, time=time, space_time=space * time
    )


def validate(g: Dag, p: Transcript, mode: str = PARALLEL) -> LegalityReport:
    """Check transcript legality against ``g``; illegality is reported, not raised.

    Rounds are numbered from 1.  Sequential mode additionally requires at
    most one new pebble per round.
    """
    if mode not in (PARALLEL, SEQUENTIAL):
        raise ValueError(f"unknown mode {mode!r}")
    for r in p.rounds:
        for v in r:
            if not (0 <= v < g.node_count):
                raise ValueError(f"transcript mentions node {v} outside [0, {g.node_count})")
    complete = set(g.sinks) <= p.touched()
    prev: frozenset[int] = frozenset()
    for i, conf in enumerate(p.rounds, start=1):
        new = conf - prev
        if mode == SEQUENTIAL and len(new) > 1:
            return LegalityReport(
                legal=False,
                complete=complete,
                mode=mode,
                violation_round=i,
                reason=f"{len(new)} new pebbles in round {i}; sequential allows 1",
            )
        for v in sorted(new):
            missing = [u for u in g.parents(v) if u not in prev]
            if missing:
                return LegalityReport(
                    legal=False,
                    complete=complete,
                    mode=mode,
                    violation_round=i,
                    reason=f"node {v} pebbled in round {i} but parents {missing} "
                    f"were not pebbled in round {i - 1}",
                )
        prev = conf
    return LegalityReport(legal=True, complete=complete, mode=mode)


def level_schedule(g: Dag, removed: Iterable[int] = ()) -> list[list[int]]:
    """Nodes of ``g`` minus ``removed`` grouped by longest-path level (1-based)."""
    prof = depth_profile(g, None, removed)
    top = max((v for v in prof if v is not None), default=0)
    levels: list[list[int]] = [[] for _ in range(top)]
    for v, lv in enumerate(prof):
        if lv is not None:
            levels[lv - 1].append(v)
    return levels


def pebble_everything(g: Dag) -> Transcript:
    """Baseline strategy: pebble each level in one round, never remove.

    Terminates after depth(g) rounds; the transcript is legal and complete
    and its cumulative cost upper-bounds the optimum.
    """
    rounds: list[set[int]] = []
    have: set[int] = set()
    for level in level_schedule(g):
        have = have | set(level)
        rounds.append(set(have))
    return Transcript(rounds)
