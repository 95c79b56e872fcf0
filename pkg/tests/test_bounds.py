from __future__ import annotations

import json
import random
from fractions import Fraction

from hypothesis import given, settings

from dissociation.bounds import (
    E0_ROWS,
    bound_e1,
    bound_e1_packing,
    bounds_report,
    check_inequality,
    e0_degree,
    e0_density,
    e0_goharasc,
    e0_inverse_degree,
    e0_tree,
    e0_two_thirds,
)
from dissociation.fixtures import bowtie_with_pendants, diamond
from dissociation.generators import random_tree
from dissociation.graph import Graph, complete_graph, cycle_graph, path_graph
from oracles import c1_brute, count_components, diss_brute, nu1_brute
from test_graph import graphs


def test_e1_examples():
    assert bound_e1(path_graph(3)) == 2
    assert bound_e1(cycle_graph(4)) == 2
    assert bound_e1(Graph(9)) == 6
    assert bound_e1(cycle_graph(6)) == Fraction(11, 3)
    assert bound_e1(Graph(0)) == 0


def test_e0_examples():
    assert e0_goharasc(complete_graph(2)) == 2
    c6 = cycle_graph(6)
    assert e0_degree(c6) == 3
    assert e0_two_thirds(c6) == 3
    assert e0_inverse_degree(path_graph(3)) == Fraction(16, 9)
    assert e0_inverse_degree(Graph(2)) is None
    assert e0_tree(c6) is None
    assert e0_tree(path_graph(3)) == 2
    assert e0_density(Graph(3)) is None


def test_check_inequality_examples():
    r = check_inequality(diamond())
    assert (r.bound, r.diss, r.tight) == (2, 2, True)
    r = check_inequality(bowtie_with_pendants())
    assert (r.bound, r.diss, r.tight) == (4, 4, True)
    r = check_inequality(cycle_graph(6))
    assert r.slack == Fraction(1, 3) and not r.tight


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_e1_against_oracles(g):
    n, edges = g.n, g.edges()
    k = count_components(n, edges)
    assert bound_e1(g) == n - Fraction(g.m + k + c1_brute(n, edges), 3)
    assert bound_e1_packing(g) == n - Fraction(g.m + k + nu1_brute(n, edges), 3)
    assert bound_e1_packing(g) >= bound_e1(g)
    d = diss_brute(n, edges)
    assert d >= bound_e1_packing(g)
    report = bounds_report(g)
    for name, value in report.applicable_e0().items():
        assert value <= d, name


def test_report_json_shape():
    rep = bounds_report(cycle_graph(6))
    out = rep.to_json()
    assert out["e1"] == {"num": 11, "den": 3}
    assert out["e0_tree"] is None and "e0_tree" in out["inapplicable"]
    assert out["e0_outerplanar"] is None
    assert json.loads(json.dumps(out)) == out
    assert set(E0_ROWS) <= set(out)


def test_report_marks_isolated_vertices():
    rep = bounds_report(Graph(3, [(0, 1)]))
    assert rep.e0_inverse_degree is None
    assert "e0_inverse_degree" in rep.inapplicable


def test_tree_row_on_random_trees():
    rng = random.Random(2)
    for _ in range(100):
        t = random_tree(rng.randint(1, 20), rng)
        assert e0_tree(t) <= check_inequality(t).diss
