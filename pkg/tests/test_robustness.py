"""Certificates, minimum deletion sets, robustness verdicts, colorings."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from helpers import path_graph, random_dag, ref_depth, ref_min_reducing_set
from pebblekit import (
    Dag,
    LayeredDag,
    ReducibilityCertificate,
    SvenssonParams,
    build_svensson,
    coloring_to_set,
    complete_dag,
    depth,
    depth_counted,
    is_depth_robust,
    min_depth_reducing_set,
    set_to_coloring,
    toy_instance,
    verify_certificate,
)


def test_verify_certificate_examples():
    p5 = path_graph(5)
    assert verify_certificate(p5, ReducibilityCertificate(frozenset({2}), 3))
    assert not verify_certificate(p5, ReducibilityCertificate(frozenset(), 5))


def test_min_set_path6():
    res = min_depth_reducing_set(path_graph(6), 3)
    assert res.exact and res.size == 2
    assert depth(path_graph(6), res.witness) < 3
    assert len(ref_min_reducing_set(path_graph(6), 3)) == 2


def test_min_set_layered_complete_bipartite_chain():
    # three layers of two, complete bipartite between consecutive layers
    g = Dag(6, [(a, b) for a in (0, 1) for b in (2, 3)]
            + [(a, b) for a in (2, 3) for b in (4, 5)])
    res = min_depth_reducing_set(g, 2)
    assert res.exact and res.size == 2
    assert len(ref_min_reducing_set(g, 2)) == 2


def test_min_set_edgeless():
    res = min_depth_reducing_set(Dag(4), 2)
    assert res.size == 0 and res.witness == frozenset()


@pytest.mark.parametrize("seed", range(15))
def test_min_set_matches_enumeration(seed):
    rng = random.Random(seed)
    g = random_dag(rng, rng.randint(2, 7))
    d = rng.randint(2, max(2, depth(g)))
    res = min_depth_reducing_set(g, d)
    assert res.exact
    assert res.size == len(ref_min_reducing_set(g, d))
    assert ref_depth(g, res.witness) < d


def test_robustness_path5():
    assert is_depth_robust(path_graph(5), 0, 5).verdict == "depth-robust"
    rep = is_depth_robust(path_graph(5), 1, 5)
    assert rep.verdict == "reducible" and len(rep.witness) <= 1


def test_robustness_complete_dag4():
    # deleting any 2 of 4 leaves an edge, no S of size 2 gets depth < 2
    rep = is_depth_robust(complete_dag(4), 2, 2)
    assert rep.verdict == "depth-robust" and rep.method == "exact"
    for s in itertools.combinations(range(4), 2):
        assert ref_depth(complete_dag(4), frozenset(s)) >= 2


def test_robustness_bounded_search_tag():
    g = complete_dag(8)
    rep = is_depth_robust(g, 3, 3, max_expanded=2)
    assert rep.method == "bounded-search"
    assert rep.verdict == "no-witness-found"


def test_monotonicity_of_reducibility():
    rng = random.Random(42)
    for _ in range(10):
        g = random_dag(rng, rng.randint(3, 7))
        d = rng.randint(2, max(2, depth(g)))
        res = min_depth_reducing_set(g, d)
        # bigger budget, bigger depth target: still reducible
        assert verify_certificate(g, ReducibilityCertificate(res.witness, d + 1))


def _toy_layered() -> LayeredDag:
    sv = build_svensson(
        toy_instance(), SvenssonParams(2, 1, Fraction(1, 2), layer_count=2)
    )
    return sv.layered


def test_coloring_to_set_constant_coloring():
    ld = _toy_layered()
    chi = {b: 1 for b in ld.bit_vertices()}
    s = coloring_to_set(ld, chi)
    two_sided = {
        v
        for v in ld.test_vertices()
        if any(ld.roles[u] == "bit" for u in ld.dag.parents(v))
        and any(ld.roles[u] == "bit" for u in ld.dag.children(v))
    }
    assert s == frozenset(two_sided)


def test_coloring_to_set_layer_increasing_is_consistent():
    ld = _toy_layered()
    # color strictly increasing in the bit layer: every test vertex's
    # parents sit in weakly lower layers than its children, strictly so
    # across the bit hop
    chi = {b: ld.layers[b] + 1 for b in ld.bit_vertices()}
    assert coloring_to_set(ld, chi) == frozenset()


def test_coloring_single_test_between_two_bits():
    g = Dag(3, [(0, 1), (1, 2)])
    ld = LayeredDag(g, (0, 0, 1), ("bit", "test", "bit"))
    assert coloring_to_set(ld, {0: 2, 2: 1}) == frozenset({1})
    assert coloring_to_set(ld, {0: 1, 2: 2}) == frozenset()


def test_coloring_bound_guarantee():
    ld = _toy_layered()
    rng = random.Random(3)
    bits = ld.bit_vertices()
    for _ in range(20):
        chi = {b: rng.randint(1, 3) for b in bits}
        s = coloring_to_set(ld, chi)
        assert depth_counted(ld.dag, bits, s) <= max(chi.values())


def test_set_to_coloring_all_tests_deleted():
    ld = _toy_layered()
    chi = set_to_coloring(ld, ld.test_vertices())
    assert set(chi.values()) == {1}


def test_set_to_coloring_empty_set_counts_layers():
    ld = _toy_layered()
    chi = set_to_coloring(ld, frozenset())
    assert max(chi.values()) == depth_counted(ld.dag, ld.bit_vertices())
    assert min(chi.values()) == 1


def test_set_to_coloring_rejects_bits():
    ld = _toy_layered()
    b = ld.bit_vertices()[0]
    with pytest.raises(ValueError, match="bit vertex"):
        set_to_coloring(ld, {b})


def test_round_trip_inconsistencies_subset():
    ld = _toy_layered()
    rng = random.Random(9)
    tests = list(ld.test_vertices())
    for _ in range(15):
        s = frozenset(v for v in tests if rng.random() < 0.4)
        chi = set_to_coloring(ld, s)
        assert coloring_to_set(ld, chi) <= s


def _tiny_layered_instances():
    # layered bit/test instances with <= 6 bits and <= 6 tests
    rng = random.Random(2024)
    out = []
    for _ in range(6):
        bits0, tests0, bits1 = 2, rng.randint(2, 3), 2
        n = bits0 + tests0 + bits1
        roles, layers = [], []
        ids = {}
        i = 0
        for k in range(bits0):
            ids[("b0", k)] = i
            roles.append("bit")
            layers.append(0)
            i += 1
        for k in range(tests0):
            ids[("t0", k)] = i
            roles.append("test")
            layers.append(0)
            i += 1
        for k in range(bits1):
            ids[("b1", k)] = i
            roles.append("bit")
            layers.append(1)
            i += 1
        edges = set()
        for k in range(tests0):
            for b in range(bits0):
                if rng.random() < 0.7:
                    edges.add((ids[("b0", b)], ids[("t0", k)]))
            for b in range(bits1):
                if rng.random() < 0.7:
                    edges.add((ids[("t0", k)], ids[("b1", b)]))
        out.append(LayeredDag(Dag(n, sorted(edges)), tuple(layers), tuple(roles)))
    return out


@pytest.mark.parametrize("d", [1, 2])
def test_deletion_vs_coloring_equivalence(d):
    # min test-deletions achieving bit-depth <= d equals min inconsistency
    # count over d-colorings, both by brute force
    for ld in _tiny_layered_instances():
        bits = ld.bit_vertices()
        tests = list(ld.test_vertices())
        best_del = min(
            (
                len(s)
                for r in range(len(tests) + 1)
                for s in itertools.combinations(tests, r)
                if depth_counted(ld.dag, bits, frozenset(s)) <= d
            ),
        )
        best_col = min(
            len(coloring_to_set(ld, dict(zip(bits, combo))))
            for combo in itertools.product(range(1, d + 1), repeat=len(bits))
        )
        assert best_del == best_col
