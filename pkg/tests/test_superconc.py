"""Superconcentrator construction, flow verification, overlay structure."""
from __future__ import annotations

import random

import pytest

from helpers import path_graph
from pebblekit import (
    Dag,
    ReducibilityCertificate,
    Superconcentrator,
    build_superconcentrator,
    complete_dag,
    delete,
    depth,
    min_depth_reducing_set,
    superconc_overlay,
    verify_certificate,
    verify_superconcentrator,
)


def k22() -> Superconcentrator:
    return Superconcentrator(
        Dag(4, [(0, 2), (0, 3), (1, 2), (1, 3)]), (0, 1), (2, 3)
    )


def test_build_n1_property():
    sc = build_superconcentrator(1)
    assert verify_superconcentrator(sc).passed


def test_k22_passes_all_k():
    rep = verify_superconcentrator(k22())
    assert rep.passed and rep.checks == 5


def test_parallel_edges_fail_crossing_pair():
    # two disjoint edges cannot connect input 0 to output 1
    sc = Superconcentrator(Dag(4, [(0, 2), (1, 3)]), (0, 1), (2, 3))
    rep = verify_superconcentrator(sc)
    assert not rep.passed
    assert rep.first_failure == (1, (0,), (3,))


def test_missing_stage_candidate_fails():
    # collector stage wired to the wrong outputs: a one-to-one shuffle that
    # drops the disjointness for crossing pairs
    dag = Dag(8, [(0, 4), (1, 5), (2, 6), (3, 7)])
    sc = Superconcentrator(dag, (0, 1, 2, 3), (4, 5, 6, 7))
    rep = verify_superconcentrator(sc)
    assert not rep.passed


@pytest.mark.parametrize("n", range(1, 9))
def test_built_superconcentrators_verify_exhaustively(n):
    sc = build_superconcentrator(n)
    assert verify_superconcentrator(sc).passed


@pytest.mark.parametrize("n", [12, 16, 24, 32])
def test_built_superconcentrators_verify_sampled(n):
    sc = build_superconcentrator(n)
    rep = verify_superconcentrator(
        sc, mode="sampled", samples=120, rng=random.Random(n)
    )
    assert rep.passed


def test_sampled_mode_needs_rng():
    with pytest.raises(ValueError, match="rng"):
        verify_superconcentrator(build_superconcentrator(2), mode="sampled")


def test_outputs_have_single_feeder():
    # one non-chain parent per output keeps the overlay walk narrow
    for n in [2, 4, 8, 16]:
        sc = build_superconcentrator(n)
        for y in sc.outputs:
            assert sc.dag.indeg(y) == 1


def test_measured_figures_reported():
    sc = build_superconcentrator(8)
    assert sc.vertex_count == sc.dag.node_count
    assert sc.depth == depth(sc.dag)
    assert sc.max_indegree == sc.dag.max_indegree
    assert sc.order == 8


def test_overlay_edgeless_base_over_k22():
    o = superconc_overlay(Dag(2), k22())
    assert o.dag.node_count == 4
    assert set(o.dag.edges) == {(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}


def test_overlay_counts():
    base = path_graph(4)
    sc = build_superconcentrator(4)
    o = superconc_overlay(base, sc)
    assert o.dag.node_count == sc.vertex_count
    assert (
        o.dag.edge_count
        == sc.dag.edge_count + base.edge_count + (base.node_count - 1)
    )


def test_overlay_single_sink_and_base_isomorphic_on_inputs():
    base = path_graph(5)
    o = superconc_overlay(base, build_superconcentrator(5))
    assert o.dag.sinks == (o.outputs[-1],)
    inputs = set(o.inputs)
    induced = [
        (o.inputs.index(u), o.inputs.index(v))
        for u, v in o.dag.edges
        if u in inputs and v in inputs
    ]
    assert sorted(induced) == list(base.edges)


def test_overlay_size_mismatch():
    with pytest.raises(ValueError, match="order"):
        superconc_overlay(path_graph(3), k22())


@pytest.mark.parametrize("seed", range(10))
def test_overlay_reducibility_transfer(seed):
    # an (e, d)-reducible base makes the overlay
    # (e + ceil(n/d), 2d + sc_depth)-reducible via S plus every d-th output
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    base = Dag(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    )
    if depth(base) < 2:
        return
    d = rng.randint(2, depth(base))
    m = min_depth_reducing_set(base, d)
    o = superconc_overlay(base, build_superconcentrator(n))
    t = {o.outputs[i] for i in range(d - 1, n, d)}
    s_in = {o.inputs[v] for v in m.witness}
    assert len(t) <= -(-n // d)
    cert = ReducibilityCertificate(frozenset(s_in | t), 2 * d + o.sc_depth)
    assert verify_certificate(o.dag, cert)


def test_delete_keeps_overlay_acyclic():
    o = superconc_overlay(path_graph(4), build_superconcentrator(4))
    delete(o.dag, set(o.outputs))  # must not raise


def test_complete_dag_base_overlay():
    base = complete_dag(3)
    o = superconc_overlay(base, build_superconcentrator(3))
    assert depth(o.dag) >= depth(base) + 2
