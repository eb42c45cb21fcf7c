"""Layered graph encoding of a Unique Games instance, and its surgeries.

The full construction has L+1 layers of *bit* vertices indexed by
(layer, w, x) for w on the W side and x an R-vector over the alphabet, and
L layers of *test* vertices indexed by (layer, x, S, v, w-sequence) where S
is a sequence of coordinate indices and the w-sequence lists 2t neighbors
of v.  Membership of a vector z in the permuted subcube determined by
(x, S, v, w) decides the edges:

  * bit (layer l) -> test (layer l') exists for l <= l' when z lies in the
    subcube;
  * test (layer l') -> bit (layer l) exists for l > l' when z lies in the
    shifted subcube (every coordinate advanced by one modulo the alphabet).

``sparsify`` thins the layer pairs down to the edges of a backbone DAG on
the layer indices, ``simplify`` projects onto test vertices by contracting
two-step paths through a bit vertex, and ``layered_matching_graph`` builds
the synthetic all-pairs-matched layered instances used by the exact cost
experiments.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graph import ROLE_BIT, ROLE_TEST, Dag, LayeredDag
from .unique_games import UniqueGamesInstance

BitKey = tuple[int, tuple[int, ...]]  # (w, x)
TestKey = tuple[tuple[int, ...], tuple[int, ...], int, tuple[int, ...]]  # (x, S, v, ws)


@dataclass(frozen=True)
class SvenssonParams:
    """Sizing knobs: alphabet k, repetition t, subcube fraction, slack, layers."""

    alphabet: int
    repetitions: int
    subcube_fraction: Fraction
    slack: float = 0.1
    layer_count: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "subcube_fraction", Fraction(self.subcube_fraction)
        )
        if self.alphabet < 2:
            raise ValueError("alphabet must be >= 2")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if not (0 < self.slack < 1):
            raise ValueError("slack must be in (0, 1)")
        if self.layer_count is not None and self.layer_count < 1:
            raise ValueError("layer_count must be >= 1")

    def index_length(self, label_count: int) -> int:
        """Length of the index sequences S; the fraction times R must be integral."""
        s = self.subcube_fraction * label_count
        if s.denominator != 1:
            raise ValueError(
                f"subcube_fraction * R = {s} is not an integer"
            )
        return int(s)


def auto_layer_count(per_layer: int, slack: float) -> int:
    """Smallest L with slack^2 * L >= (per_layer * L)^(1 - slack).

    The left side grows linearly in L while the right side is sublinear, so
    the scan terminates; sizes explode quickly, which is why tests pass an
    explicit layer count instead.
    """
    if per_layer < 1:
        raise ValueError("per_layer must be >= 1")
    L = 1
    while slack * slack * L < (per_layer * L) ** (1.0 - slack):
        L += 1
    return L


def _subcube(
    x: tuple[int, ...], s: tuple[int, ...], pi: tuple[int, ...], k: int
) -> list[tuple[int, ...]]:
    # z ranges over vectors with z_a = x_{pi(a)} whenever pi(a) is not in s
    free = [a for a in range(len(x)) if pi[a] in s]
    fixed = {a: x[pi[a]] for a in range(len(x)) if pi[a] not in s}
    members = []
    for combo in itertools.product(range(k), repeat=len(free)):
        z = [0] * len(x)
        for a, val in fixed.items():
            z[a] = val
        for a, val in zip(free, combo):
            z[a] = val
        members.append(tuple(z))
    return members


def _shift(z: tuple[int, ...], k: int) -> tuple[int, ...]:
    return tuple((c + 1) % k for c in z)


@dataclass(frozen=True)
class SvenssonGraph:
    """The layered encoding plus the tuple <-> node id bijections."""

    layered: LayeredDag
    params: SvenssonParams
    instance: UniqueGamesInstance
    bit_ids: dict[tuple[int, int, tuple[int, ...]], int]  # (layer, w, x) -> id
    test_ids: dict[tuple[int, TestKey], int]  # (layer, key) -> id

    @property
    def layer_count(self) -> int:
        return self.layered.max_layer

    def bits_per_layer(self) -> int:
        return len(self.layered.layer_nodes(0, ROLE_BIT))

    def tests_per_layer(self) -> int:
        return len(self.layered.layer_nodes(0, ROLE_TEST))


def _enumerate_keys(
    inst: UniqueGamesInstance, params: SvenssonParams
) -> tuple[list[BitKey], list[TestKey]]:
    k = params.alphabet
    r = inst.label_count
    s_len = params.index_length(r)
    xs = list(itertools.product(range(k), repeat=r))
    bit_keys = [(w, x) for w in range(inst.w_count) for x in xs]
    test_keys = []
    for x in xs:
        for s in itertools.product(range(r), repeat=s_len):
            for v in range(inst.v_count):
                ws_choices = [w for w, _ in inst.neighbors(v)]
                for ws in itertools.product(ws_choices, repeat=2 * params.repetitions):
                    test_keys.append((x, s, v, ws))
    return bit_keys, test_keys


def build_svensson(
    inst: UniqueGamesInstance, params: SvenssonParams
) -> SvenssonGraph:
    """Build the full layered graph for an instance.

    Node ids are laid out layer by layer, bit layer l before test layer l,
    bits ordered lexicographically by (w, x) and tests by (x, S, v, ws), so
    identical inputs always produce identical graphs.
    """
    k = params.alphabet
    bit_keys, test_keys = _enumerate_keys(inst, params)
    if params.layer_count is not None:
        L = params.layer_count
    else:
        L = auto_layer_count(len(test_keys), params.slack)

    bit_ids: dict[tuple[int, int, tuple[int, ...]], int] = {}
    test_ids: dict[tuple[int, TestKey], int] = {}
    layers: list[int] = []
    roles: list[str] = []
    next_id = 0
    for layer in range(L + 1):
        for w, x in bit_keys:
            bit_ids[(layer, w, x)] = next_id
            layers.append(layer)
            roles.append(ROLE_BIT)
            next_id += 1
        if layer < L:
            for key in test_keys:
                test_ids[(layer, key)] = next_id
                layers.append(layer)
                roles.append(ROLE_TEST)
                next_id += 1

    # permutation lookup per (v, w); regularity makes the map well-defined
    perm = {(v, w): pi for v in range(inst.v_count) for w, pi in inst.neighbors(v)}

    edges: set[tuple[int, int]] = set()
    for x, s, v, ws in test_keys:
        key = (x, s, v, ws)
        in_bits: set[BitKey] = set()
        out_bits: set[BitKey] = set()
        for w in ws:
            for z in _subcube(x, s, perm[(v, w)], k):
                in_bits.add((w, z))
                out_bits.add((w, _shift(z, k)))
        for test_layer in range(L):
            t = test_ids[(test_layer, key)]
            for w, z in in_bits:
                for bit_layer in range(test_layer + 1):
                    edges.add((bit_ids[(bit_layer, w, z)], t))
            for w, z in out_bits:
                for bit_layer in range(test_layer + 1, L + 1):
                    edges.add((t, bit_ids[(bit_layer, w, z)]))

    layered = LayeredDag(
        Dag(next_id, sorted(edges)), tuple(layers), tuple(roles)
    )
    return SvenssonGraph(layered, params, inst, bit_ids, test_ids)


def sparsify(sv: SvenssonGraph, backbone: Dag) -> SvenssonGraph:
    """Keep only layer pairs present in the backbone DAG on layer indices.

    A bit->test edge across layers (i, j) survives iff i == j or (i, j) is a
    backbone edge; a test->bit edge across layers (j, i) survives iff (j, i)
    is a backbone edge.  The output edge set is a subset of the input's.
    """
    L = sv.layer_count
    if backbone.node_count != L + 1:
        raise ValueError(
            f"backbone must have {L + 1} nodes (one per bit layer), "
            f"got {backbone.node_count}"
        )
    for u, v in backbone.edges:
        if u >= v:
            raise ValueError(f"backbone edge ({u}, {v}) must go to a higher layer")
    keep = set(backbone.edges)
    ld = sv.layered
    edges = []
    for u, v in ld.dag.edges:
        lu, lv = ld.layers[u], ld.layers[v]
        if ld.roles[u] == ROLE_BIT:
            if lu == lv or (lu, lv) in keep:
                edges.append((u, v))
        else:
            if (lu, lv) in keep:
                edges.append((u, v))
    layered = LayeredDag(Dag(ld.dag.node_count, edges), ld.layers, ld.roles)
    return SvenssonGraph(layered, sv.params, sv.instance, sv.bit_ids, sv.test_ids)


@dataclass(frozen=True)
class SimplifiedSvensson:
    """Projection onto test vertices; edges are contracted two-step paths."""

    layered: LayeredDag
    node_ids: dict[tuple[int, TestKey], int]

    @property
    def layer_count(self) -> int:
        return self.layered.max_layer + 1

    def per_layer(self) -> int:
        return len(self.layered.layer_nodes(0))


def simplify(sv: SvenssonGraph) -> SimplifiedSvensson:
    """Drop bit vertices, connecting tests u -> v when some bit mediates u -> b -> v."""
    ld = sv.layered
    old_tests = sorted(sv.test_ids.values())
    relabel = {old: new for new, old in enumerate(old_tests)}
    node_ids = {key: relabel[old] for key, old in sv.test_ids.items()}
    layers = tuple(ld.layers[old] for old in old_tests)
    roles = tuple(ROLE_TEST for _ in old_tests)
    edges: set[tuple[int, int]] = set()
    for u in old_tests:
        for b in ld.dag.children(u):
            if ld.roles[b] != ROLE_BIT:
                continue
            for v in ld.dag.children(b):
                if ld.roles[v] == ROLE_TEST:
                    edges.add((relabel[u], relabel[v]))
    layered = LayeredDag(Dag(len(old_tests), sorted(edges)), layers, roles)
    return SimplifiedSvensson(layered, node_ids)


def layer_shift_invariant(sv: SvenssonGraph) -> bool:
    """True iff edge presence only depends on the endpoint keys, not layers.

    For every bit key at layer l and test key, the bit->test edge either
    exists for all test layers >= l or for none; dually a test->bit edge
    either exists for all higher bit layers or for none.
    """
    L = sv.layer_count
    edge_set = set(sv.layered.dag.edges)
    test_keys = sorted({key for (_, key) in sv.test_ids})
    bit_keys = sorted({(w, x) for (_, w, x) in sv.bit_ids})
    for (bl, w, x), b in sv.bit_ids.items():
        for key in test_keys:
            hits = {
                (b, sv.test_ids[(tl, key)]) in edge_set for tl in range(bl, L)
            }
            if len(hits) > 1:
                return False
    for (tl, key), t in sv.test_ids.items():
        for w, x in bit_keys:
            hits = {
                (t, sv.bit_ids[(bl, w, x)]) in edge_set
                for bl in range(tl + 1, L + 1)
            }
            if len(hits) > 1:
                return False
    return True


def layered_matching_graph(
    node_count: int, layer_count: int, twist: int = 1
) -> LayeredDag:
    """Synthetic layered instance with a perfect matching between every layer pair.

    node_count must split evenly into layer_count layers of m nodes; node
    (layer, a) is m*layer + a and feeds (layer', a + twist*(layer'-layer) mod m)
    for every higher layer.  The cyclic twist keeps the pairwise matchings
    distinct, mirroring the shifted-subcube structure of the real encoding.
    """
    if layer_count < 1:
        raise ValueError("layer_count must be >= 1")
    if node_count % layer_count:
        raise ValueError(
            f"{node_count} nodes do not split into {layer_count} equal layers"
        )
    m = node_count // layer_count
    edges = []
    for lo in range(layer_count):
        for hi in range(lo + 1, layer_count):
            shift = (twist * (hi - lo)) % m
            for a in range(m):
                edges.append((lo * m + a, hi * m + (a + shift) % m))
    layers = tuple(v // m for v in range(node_count))
    roles = tuple(ROLE_TEST for _ in range(node_count))
    return LayeredDag(Dag(node_count, edges), layers, roles)
