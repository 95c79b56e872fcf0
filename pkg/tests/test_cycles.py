from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from dissociation.cycles import (
    c1_count,
    canonical_cycle,
    enumerate_induced_cycles,
    is_cactus_forest,
    is_cycle_disjoint,
    max_disjoint_c1_packing,
)
from dissociation.errors import CycleCapExceeded, PackingLimitExceeded
from dissociation.fixtures import bowtie_with_pendants, diamond, spiked_15
from dissociation.generators import gnp, random_cactus, random_tree
from dissociation.graph import complete_graph, cycle_graph, disjoint_union
from oracles import c1_brute, induced_cycle_sets, nu1_brute
from test_graph import graphs


def vertex_sets(cs):
    return sorted(tuple(sorted(c)) for c in cs.cycles)


def test_cycle_disjoint_examples():
    assert is_cycle_disjoint(random_tree(15, random.Random(0)))
    assert not is_cycle_disjoint(bowtie_with_pendants())
    assert is_cactus_forest(bowtie_with_pendants())
    assert is_cycle_disjoint(spiked_15())
    assert not is_cycle_disjoint(diamond())
    assert not is_cactus_forest(diamond())


def test_enumeration_examples():
    k4 = enumerate_induced_cycles(complete_graph(4))
    assert len(k4) == 4 and all(len(c) == 3 for c in k4.cycles)
    assert enumerate_induced_cycles(cycle_graph(7)).cycles == ((0, 1, 2, 3, 4, 5, 6),)
    d = enumerate_induced_cycles(diamond())
    assert sorted(len(c) for c in d.cycles) == [3, 3]


def test_c1_examples():
    assert c1_count(cycle_graph(4)) == 1
    assert c1_count(spiked_15()) == 0
    assert c1_count(complete_graph(4)) == 0
    assert max_disjoint_c1_packing(cycle_graph(4)) == 1
    assert max_disjoint_c1_packing(disjoint_union(cycle_graph(4), cycle_graph(4))) == 2
    assert max_disjoint_c1_packing(complete_graph(4)) == 0


def test_canonical_rotation():
    assert canonical_cycle([3, 1, 0, 2]) == (0, 1, 3, 2)
    assert canonical_cycle([2, 0, 1]) == (0, 1, 2)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_enumeration_matches_subset_oracle(g):
    expected = sorted(tuple(sorted(c)) for c in induced_cycle_sets(g.n, g.edges()))
    assert vertex_sets(enumerate_induced_cycles(g, fast_path=False)) == expected
    assert vertex_sets(enumerate_induced_cycles(g)) == expected
    for c in enumerate_induced_cycles(g).cycles:
        assert canonical_cycle(c) == c
        for i in range(len(c)):
            assert g.has_edge(c[i], c[(i + 1) % len(c)])


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_packing_matches_oracle(g):
    assert c1_count(g) == c1_brute(g.n, g.edges())
    assert max_disjoint_c1_packing(g) == nu1_brute(g.n, g.edges())
    assert max_disjoint_c1_packing(g) <= c1_count(g)


def test_fast_path_agrees_on_cacti():
    rng = random.Random(5)
    for _ in range(100):
        g = random_cactus(rng.randint(1, 40), rng)
        assert enumerate_induced_cycles(g).cycles == enumerate_induced_cycles(g, fast_path=False).cycles
        assert max_disjoint_c1_packing(g) == c1_count(g)


def test_cap_is_enforced():
    g = complete_graph(6)
    cs = enumerate_induced_cycles(g, cap=3)
    assert cs.truncated and len(cs) == 3
    with pytest.raises(CycleCapExceeded) as info:
        c1_count(g, cap=3)
    assert "--cycle-cap" in str(info.value)
    with pytest.raises(ValueError):
        enumerate_induced_cycles(g, cap=0)


def test_packing_limit():
    g = disjoint_union(*[cycle_graph(4)] * 3)
    with pytest.raises(PackingLimitExceeded) as info:
        max_disjoint_c1_packing(g, limit=2)
    assert "--packing-limit" in str(info.value)


def test_dense_random_packing_against_oracle():
    rng = random.Random(11)
    for _ in range(40):
        g = gnp(10, 0.35, rng)
        assert max_disjoint_c1_packing(g) == nu1_brute(g.n, g.edges())
