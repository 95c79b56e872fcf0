from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from dissociation.errors import BudgetExceeded, NotApplicableError
from dissociation.fixtures import spiked_15
from dissociation.generators import gnp, random_tree
from dissociation.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph, star_graph
from dissociation.solver import (
    DissociationCertificate,
    ExactSolver,
    SearchLimits,
    diss_exact,
    diss_exact_avoiding,
    diss_forest_dp,
    is_dissociation_set,
    verify_certificate,
)
from oracles import diss_brute, diss_brute_avoiding
from test_graph import graphs


def test_examples():
    assert diss_exact(cycle_graph(5)).size == 3
    assert diss_exact(complete_graph(4)).size == 2
    assert diss_exact(spiked_15()).size == 13
    assert diss_exact(Graph(0)).size == 0


def test_avoiding_examples():
    assert diss_exact_avoiding(path_graph(3), 1).size == 2
    for u in range(4):
        assert diss_exact_avoiding(cycle_graph(4), u).size == 2
    assert diss_exact_avoiding(star_graph(3), 0).size == 3
    with pytest.raises(ValueError):
        diss_exact_avoiding(path_graph(3), 3)


def test_forest_examples():
    assert diss_forest_dp(path_graph(6)).size == 4
    assert diss_forest_dp(star_graph(3)).size == 3
    assert diss_forest_dp(disjoint_union(path_graph(3), path_graph(3))).size == 4
    with pytest.raises(NotApplicableError):
        diss_forest_dp(cycle_graph(3))


def test_verifier():
    g = path_graph(4)
    assert is_dissociation_set(g, [0, 1, 3])
    assert not is_dissociation_set(g, [0, 1, 2])
    assert not is_dissociation_set(g, [0, 0])
    assert not is_dissociation_set(g, [7])
    assert not verify_certificate(g, DissociationCertificate((0, 1), True, avoided=1))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_exact_matches_brute_force(g):
    cert = diss_exact(g)
    assert is_dissociation_set(g, cert.vertices)
    assert cert.size == diss_brute(g.n, g.edges())


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_avoiding_matches_brute_force(g):
    solver = ExactSolver(g)
    for u in range(g.n):
        cert = solver.avoiding(u)
        assert u not in cert.vertices and verify_certificate(g, cert)
        assert cert.size == diss_brute_avoiding(g.n, g.edges(), u)


def test_forest_dp_matches_exact():
    rng = random.Random(3)
    for _ in range(300):
        t = random_tree(rng.randint(1, 25), rng)
        forest = disjoint_union(t, random_tree(rng.randint(1, 5), rng))
        dp = diss_forest_dp(forest)
        assert is_dissociation_set(forest, dp.vertices)
        assert dp.size == diss_exact(forest).size


def test_budget_exceeded_carries_incumbent():
    g = gnp(40, 0.5, random.Random(1))
    with pytest.raises(BudgetExceeded) as info:
        diss_exact(g, SearchLimits(max_nodes=50))
    inc = info.value.incumbent
    assert inc is not None and not inc.optimal
    assert is_dissociation_set(g, inc.vertices)


def test_time_budget():
    g = gnp(60, 0.5, random.Random(4))
    with pytest.raises(BudgetExceeded):
        diss_exact(g, SearchLimits(max_nodes=None, max_ms=5))


def test_limits_must_be_positive():
    with pytest.raises(ValueError):
        SearchLimits(max_nodes=0)
    with pytest.raises(ValueError):
        SearchLimits(max_ms=-1)


def test_mid_size_graphs_are_fast_enough():
    rng = random.Random(8)
    for _ in range(5):
        g = gnp(30, 0.3, rng)
        assert is_dissociation_set(g, diss_exact(g).vertices)
