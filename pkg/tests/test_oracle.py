"""Exact cumulative-cost oracle against independent references."""
from __future__ import annotations

import random

import pytest

from helpers import path_graph, random_dag, random_legal_transcript, ref_pcc
from pebblekit import (
    Dag,
    cost,
    disjoint_union,
    exact_pcc,
    layered_matching_graph,
    pebble_everything,
    validate,
)


def test_single_node():
    res = exact_pcc(Dag(1))
    assert res.exact and res.value == 1
    assert [sorted(r) for r in res.transcript] == [[0]]


@pytest.mark.parametrize("n", range(1, 11))
def test_paths_cost_n(n):
    res = exact_pcc(path_graph(n))
    assert res.exact and res.value == n
    rep = validate(path_graph(n), res.transcript)
    assert rep.ok


def test_two_three_paths_additive():
    g = disjoint_union(path_graph(3), path_graph(3))
    assert exact_pcc(g).value == 6


def test_node_limit_enforced(monkeypatch):
    with pytest.raises(ValueError, match="limited"):
        exact_pcc(path_graph(13))
    monkeypatch.setenv("PEBBLEKIT_ORACLE_NODE_LIMIT", "13")
    assert exact_pcc(path_graph(13)).value == 13


def test_budget_exceeded_reports_bounds():
    g = random_dag(random.Random(5), 9, p=0.25)
    res = exact_pcc(g, max_states=3)
    assert res.status == "budget-exceeded"
    assert res.value is None and res.transcript is None
    assert 0 <= res.lower_bound <= res.upper_bound
    assert res.upper_bound == cost(pebble_everything(g)).cumulative


@pytest.mark.parametrize("seed", range(12))
def test_matches_unpruned_reference(seed):
    rng = random.Random(seed)
    g = random_dag(rng, rng.randint(1, 6), p=rng.choice([0.2, 0.4, 0.7]))
    res = exact_pcc(g)
    assert res.exact
    assert res.value == ref_pcc(g)
    rep = validate(g, res.transcript)
    assert rep.ok
    assert cost(res.transcript).cumulative == res.value


def test_layered_matching_values_cross_checked():
    # the optimum undercuts the no-deletion layer walk: final rounds may
    # drop every held pebble
    ld = layered_matching_graph(6, 3)
    res = exact_pcc(ld.dag)
    assert res.exact and res.value == ref_pcc(ld.dag) == 8
    ld = layered_matching_graph(8, 2)
    res = exact_pcc(ld.dag)
    assert res.exact and res.value == ref_pcc(ld.dag) == 8


@pytest.mark.parametrize("seed", range(10))
def test_lower_bounds_every_legal_transcript(seed):
    rng = random.Random(seed * 77 + 1)
    g = random_dag(rng, rng.randint(2, 7))
    value = exact_pcc(g).value
    for _ in range(5):
        p = random_legal_transcript(g, rng)
        assert cost(p).cumulative >= value
    assert cost(pebble_everything(g)).cumulative >= value


@pytest.mark.parametrize("seed", range(8))
def test_additivity_random_pairs(seed):
    rng = random.Random(seed + 1000)
    a = random_dag(rng, rng.randint(1, 5))
    b = random_dag(rng, rng.randint(1, 5))
    assert (
        exact_pcc(disjoint_union(a, b)).value
        == exact_pcc(a).value + exact_pcc(b).value
    )


@pytest.mark.parametrize("seed", range(8))
def test_at_most_n_squared(seed):
    rng = random.Random(seed + 2000)
    g = random_dag(rng, rng.randint(1, 7))
    assert exact_pcc(g).value <= g.node_count**2
