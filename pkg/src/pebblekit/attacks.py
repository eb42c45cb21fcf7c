"""Executable pebbling strategies built on depth-reducing sets.

Both attacks alternate *light* phases (walk an interval of nodes while
holding a small set) with *balloon* phases (rebuild dropped pebbles in a
number of rounds bounded by the certified residual depth).  Every strategy
returns a full transcript plus a per-round phase label so a cost report can
be decomposed and exported.

The space accounting of the overlay strategy assumes every output node has
at most two parents outside its interval (its chain predecessor plus one
feeder), which the bundled superconcentrator construction guarantees.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Dag, LayeredDag, depth, depth_profile
from .pebbling import Transcript
from .superconc import SuperconcOverlay

LIGHT = "light"
BALLOON = "balloon"
INPUT_LIGHT = "input-light"
INPUT_BALLOON = "input-balloon"
INTERIOR = "interior"
NATURAL = "natural"


@dataclass(frozen=True)
class AttackSchedule:
    """Depth-reducing set S, its certified residual depth d, interval length g >= d."""

    reducing_set: frozenset[int]
    residual_depth: int
    interval_length: int

    def __post_init__(self):
        object.__setattr__(self, "reducing_set", frozenset(self.reducing_set))
        if self.residual_depth < 1:
            raise ValueError("residual_depth must be >= 1")
        if self.interval_length < self.residual_depth:
            raise ValueError("interval_length must be >= residual_depth")

    def check_against(self, g: Dag) -> None:
        for v in self.reducing_set:
            if not (0 <= v < g.node_count):
                raise ValueError(f"schedule node {v} out of range")
        actual = depth(g, self.reducing_set)
        if actual > self.residual_depth:
            raise ValueError(
                f"invalid certificate: depth(G - S) = {actual} exceeds "
                f"declared bound {self.residual_depth}"
            )


@dataclass(frozen=True)
class AttackResult:
    transcript: Transcript
    phases: tuple[str, ...]
    schedule: AttackSchedule | None = None

    def __post_init__(self):
        if len(self.phases) != len(self.transcript):
            raise ValueError("one phase label per round required")

    def phase_rows(self) -> list[tuple[int, str, int]]:
        """(round, phase, pebble count) rows, rounds numbered from 1."""
        return [
            (i, phase, len(conf))
            for i, (conf, phase) in enumerate(
                zip(self.transcript.rounds, self.phases), start=1
            )
        ]

    def phase_totals(self) -> dict[str, int]:
        totals: dict[str, int] = {}
        for _, phase, size in self.phase_rows():
            totals[phase] = totals.get(phase, 0) + size
        return totals


def _chunks(seq: list[int], size: int) -> list[list[int]]:
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def _balloon_levels(
    g: Dag, removed: frozenset[int], targets: set[int]
) -> list[list[int]]:
    """``targets`` grouped by longest-path level in g minus ``removed``."""
    prof = depth_profile(g, None, removed)
    by_level: dict[int, list[int]] = {}
    for v in sorted(targets):
        by_level.setdefault(prof[v], []).append(v)
    return [by_level[lv] for lv in sorted(by_level)]


def generic_attack(g: Dag, sched: AttackSchedule) -> AttackResult:
    """Walk the topological order in intervals of g nodes.

    A light phase holds the acquired part of S plus the interval's outside
    parents and grows a pebbled prefix of the interval one node per round.
    Before each later interval, a balloon phase rebuilds every already
    visited node outside S level by level, which takes at most d rounds.
    Cumulative cost stays within e*N + indeg*g*N + d*N^2/g plus the
    documented slack N*(g+1)/2 coming from the growing interval prefixes.
    """
    sched.check_against(g)
    order = list(g.topological_order())
    intervals = _chunks(order, sched.interval_length)
    rounds: list[frozenset[int]] = []
    phases: list[str] = []
    acquired: set[int] = set()  # S intersected with the walked prefix
    prefix: set[int] = set()
    for idx, interval in enumerate(intervals):
        if idx > 0:
            rebuild = prefix - sched.reducing_set
            built: set[int] = set(acquired)
            for level in _balloon_levels(g, sched.reducing_set, rebuild):
                built |= set(level)
                rounds.append(frozenset(built))
                phases.append(BALLOON)
        held = {
            p for v in interval for p in g.parents(v) if p not in interval
        } | acquired
        walked: set[int] = set()
        for v in interval:
            walked.add(v)
            if v in sched.reducing_set:
                acquired.add(v)
            rounds.append(frozenset(held | walked | acquired))
            phases.append(LIGHT)
        prefix |= set(interval)
    return AttackResult(Transcript(rounds), tuple(phases), sched)


def overlay_attack(o: SuperconcOverlay, sched: AttackSchedule) -> AttackResult:
    """Pebble a superconcentrator overlay in the three-step phased style.

    Step 1 runs the generic attack on the base graph embedded on the inputs
    and finishes with one full balloon so every input is pebbled at once.
    Step 2 floods the interior level by level while holding the inputs.
    Step 3 walks the output chain in intervals: each light phase holds the
    input-mapped set S, the interval's outside parents and one walker; each
    balloon phase rebuilds inputs and interior in at most d + sc_depth
    rounds while retaining the walker for the next interval.
    """
    base = o.base
    sched.check_against(base)
    s_in = frozenset(o.inputs[v] for v in sched.reducing_set)
    input_set = frozenset(o.inputs)
    output_set = frozenset(o.outputs)
    non_output = set(o.dag.nodes()) - output_set
    rounds: list[frozenset[int]] = []
    phases: list[str] = []

    # Step 1: base-graph attack transplanted onto the input copy, then one
    # more balloon so all inputs are simultaneously pebbled.
    inner = generic_attack(base, sched)
    for conf, phase in zip(inner.transcript.rounds, inner.phases):
        rounds.append(frozenset(o.inputs[v] for v in conf))
        phases.append(INPUT_LIGHT if phase == LIGHT else INPUT_BALLOON)
    built = set(rounds[-1]) if rounds else set()
    not_input = frozenset(o.dag.nodes()) - input_set
    for level in _balloon_levels(o.dag, not_input | s_in, input_set - s_in - built):
        built |= set(level)
        rounds.append(frozenset(built | s_in))
        phases.append(INPUT_BALLOON)

    # Step 2: flood the interior, never dropping anything.
    have = set(o.inputs)
    for level in _balloon_levels(o.dag, output_set, non_output - have):
        have |= set(level)
        rounds.append(frozenset(have))
        phases.append(INTERIOR)

    # Step 3: walk the output chain.
    intervals = _chunks(list(o.outputs), sched.interval_length)
    walker: int | None = None
    for idx, interval in enumerate(intervals):
        if idx > 0:
            held = set(s_in)
            if walker is not None:
                held.add(walker)
            built = set(held)
            for level in _balloon_levels(
                o.dag, output_set | s_in, non_output - s_in - built
            ):
                built |= set(level)
                rounds.append(frozenset(built))
                phases.append(BALLOON)
        held = {
            p for v in interval for p in o.dag.parents(v) if p not in interval
        } | s_in
        for v in interval:
            rounds.append(frozenset(held | {v}))
            phases.append(LIGHT)
            walker = v
    return AttackResult(Transcript(rounds), tuple(phases), sched)


def natural_svensson_pebbling(g: LayeredDag) -> AttackResult:
    """Layer-per-round pebbling that never removes a pebble.

    Requires equally sized layers and edges that strictly increase layers;
    with m nodes per layer and L layers the cumulative cost is exactly
    m * L * (L + 1) / 2 = N * (L + 1) / 2.
    """
    layer_count = g.max_layer + 1
    sizes = [len(g.layer_nodes(layer)) for layer in range(layer_count)]
    if not sizes or sizes[0] == 0 or min(sizes) != max(sizes):
        raise ValueError("layers must be nonempty and equally sized")
    for u, v in g.dag.edges:
        if g.layers[u] >= g.layers[v]:
            raise ValueError(f"edge ({u}, {v}) does not strictly increase layers")
    have: set[int] = set()
    rounds = []
    for layer in range(layer_count):
        have |= set(g.layer_nodes(layer))
        rounds.append(frozenset(have))
    return AttackResult(Transcript(rounds), tuple([NATURAL] * layer_count))
