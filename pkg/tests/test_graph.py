"""Graph substrate: construction validation, depth queries, deletion."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import diamond, path_graph, ref_depth, ref_depth_enum
from pebblekit import (
    CycleError,
    Dag,
    LayeredDag,
    SvenssonParams,
    build_svensson,
    delete,
    depth,
    depth_counted,
    layered_matching_graph,
    toy_instance,
)


def test_rejects_cycle_with_witness():
    with pytest.raises(CycleError) as exc:
        Dag(2, [(0, 1), (1, 0)])
    assert exc.value.cycle == [0, 1, 0]


def test_rejects_self_loop_and_duplicates():
    with pytest.raises(ValueError, match="self-loop"):
        Dag(2, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        Dag(2, [(0, 1), (0, 1)])
    with pytest.raises(ValueError, match="out of range"):
        Dag(2, [(0, 2)])


def test_adjacency_and_degrees():
    g = diamond()
    assert g.parents(3) == (1, 2)
    assert g.children(0) == (1, 2)
    assert g.indeg(3) == 2 and g.outdeg(0) == 2
    assert g.sources == (0,) and g.sinks == (3,)
    assert g.max_indegree == 2 and g.max_outdegree == 2


def test_topological_order_deterministic():
    assert path_graph(3).topological_order() == (0, 1, 2)
    assert diamond().topological_order() == (0, 1, 2, 3)
    assert Dag(3).topological_order() == (0, 1, 2)


def test_depth_path_examples():
    g = path_graph(3)
    assert depth(g) == 3
    assert depth(g, {1}) == 1
    assert depth(Dag(0)) == 0
    assert depth(g, {0, 1, 2}) == 0


def test_depth_single_test_layer_is_one():
    # a one-test-layer simplified instance has no edges at all
    inst = toy_instance()
    params = SvenssonParams(2, 1, Fraction(1, 2), layer_count=1)
    from pebblekit import simplify

    simp = simplify(build_svensson(inst, params))
    assert simp.layered.dag.edge_count == 0
    assert depth(simp.layered.dag) == 1
    assert ref_depth_enum(simp.layered.dag) == 1


def test_depth_counted_chain_examples():
    # chain b1 -> t1 -> b2, counting only the b's
    g = path_graph(3)
    assert depth_counted(g, {0, 2}) == 2
    assert depth_counted(g, {0, 2}, {1}) == 1


def test_depth_counted_toy_instance_three_bits():
    inst = toy_instance()
    sv = build_svensson(inst, SvenssonParams(2, 1, Fraction(1, 2), layer_count=2))
    bits = sv.layered.bit_vertices()
    assert depth_counted(sv.layered.dag, bits) == 3


def test_delete_examples():
    g = Dag(3, [(0, 1), (0, 2), (1, 2)])
    assert delete(g, {1}) == Dag(2, [(0, 1)])
    assert delete(g, ()) == g
    assert delete(g, {0, 1, 2}) == Dag(0)


small_dags = st.builds(
    lambda n, picks: Dag(
        n,
        [
            (u, v)
            for i, (u, v) in enumerate(
                (a, b) for a in range(n) for b in range(a + 1, n)
            )
            if i in picks
        ],
    ),
    st.integers(1, 7),
    st.sets(st.integers(0, 20)),
)


@given(small_dags, st.sets(st.integers(0, 6)), st.sets(st.integers(0, 6)))
@settings(max_examples=60, deadline=None)
def test_depth_monotone_in_deletions(g, s1, s2):
    s1 = {v for v in s1 if v < g.node_count}
    s2 = {v for v in s2 if v < g.node_count}
    assert depth(g, s1 | s2) <= depth(g, s1)


@given(small_dags, st.sets(st.integers(0, 6)))
@settings(max_examples=60, deadline=None)
def test_depth_counted_all_equals_depth(g, s):
    s = {v for v in s if v < g.node_count}
    assert depth_counted(g, g.nodes(), s) == depth(g, s)


@given(small_dags, st.sets(st.integers(0, 6)))
@settings(max_examples=60, deadline=None)
def test_delete_preserves_depth(g, s):
    s = {v for v in s if v < g.node_count}
    assert depth(delete(g, s)) == depth(g, s)


@given(small_dags, st.sets(st.integers(0, 6)))
@settings(max_examples=60, deadline=None)
def test_depth_matches_reference(g, s):
    s = {v for v in s if v < g.node_count}
    assert depth(g, s) == ref_depth(g, s)


def test_layered_dag_validation():
    g = Dag(2, [(0, 1)])
    LayeredDag(g, (0, 0), ("bit", "test"))  # same-layer bit -> test is fine
    with pytest.raises(ValueError, match="layer direction"):
        LayeredDag(g, (0, 0), ("test", "bit"))
    with pytest.raises(ValueError, match="layer direction"):
        LayeredDag(g, (1, 0), ("bit", "test"))
    with pytest.raises(ValueError, match="length"):
        LayeredDag(g, (0,), ("bit", "test"))


def test_layered_matching_graph_shape():
    ld = layered_matching_graph(6, 3)
    assert ld.dag.node_count == 6
    assert [len(ld.layer_nodes(i)) for i in range(3)] == [2, 2, 2]
    # one matching edge per node per higher layer
    assert ld.dag.edge_count == 2 * 3  # m * C(L, 2)
    with pytest.raises(ValueError, match="equal layers"):
        layered_matching_graph(7, 3)
