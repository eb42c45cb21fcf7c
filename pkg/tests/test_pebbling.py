"""Legality checking, cost accounting, and the no-deletion baseline."""
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import diamond, path_graph, random_dag, random_legal_transcript
from pebblekit import (
    Dag,
    Transcript,
    cost,
    layered_matching_graph,
    natural_svensson_pebbling,
    pebble_everything,
    validate,
)


def test_validate_path_legal_both_modes():
    g = path_graph(2)
    p = Transcript([{0}, {1}])
    assert validate(g, p, "parallel").ok
    assert validate(g, p, "sequential").ok


def test_validate_missing_parent():
    g = path_graph(2)
    rep = validate(g, Transcript([{1}]))
    assert not rep.legal
    assert rep.violation_round == 1
    assert "parents" in rep.reason


def test_validate_diamond_parallel_vs_sequential():
    g = diamond()
    p = Transcript([{0}, {0, 1, 2}, {1, 2}, {3}])
    assert validate(g, p, "parallel").ok
    seq = validate(g, p, "sequential")
    assert not seq.legal and seq.violation_round == 2


def test_validate_rejects_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        validate(path_graph(2), Transcript([{5}]))


def test_completeness_flag():
    g = path_graph(2)
    assert not validate(g, Transcript([{0}])).complete
    assert validate(g, Transcript([{0}, {1}])).complete


def test_cost_examples():
    c = cost(Transcript([{0}, {1}]))
    assert (c.cumulative, c.space, c.time) == (2, 1, 2)
    c = cost(Transcript([{0}, {0, 1}, {0, 1, 2}]))
    assert (c.cumulative, c.space, c.time, c.space_time) == (6, 3, 3, 9)
    assert cost(Transcript([])).cumulative == 0


def test_natural_layered_cost_is_formula():
    ld = layered_matching_graph(6, 3)
    res = natural_svensson_pebbling(ld)
    assert cost(res.transcript).cumulative == 12  # N(L+1)/2
    assert validate(ld.dag, res.transcript).ok


def test_pebble_everything_examples():
    assert cost(pebble_everything(path_graph(3))).cumulative == 6
    g = Dag(4)
    p = pebble_everything(g)
    assert len(p) == 1 and cost(p).cumulative == 4
    d = pebble_everything(diamond())
    assert [sorted(r) for r in d] == [[0], [0, 1, 2], [0, 1, 2, 3]]
    assert cost(d).cumulative == 8


@given(st.integers(0, 1_000_000), st.integers(2, 8))
@settings(max_examples=40, deadline=None)
def test_pebble_everything_legal_complete(seed, n):
    g = random_dag(random.Random(seed), n)
    rep = validate(g, pebble_everything(g))
    assert rep.ok


@given(st.integers(0, 1_000_000), st.integers(2, 7))
@settings(max_examples=40, deadline=None)
def test_random_transcripts_are_legal(seed, n):
    rng = random.Random(seed)
    g = random_dag(rng, n)
    p = random_legal_transcript(g, rng)
    assert validate(g, p).ok
