from __future__ import annotations

import math
import random
import time

import pytest
from hypothesis import given, settings

from dissociation.bounds import bound_e1
from dissociation.constructive import cactus_exact, certify_bound_set, find_dense_block_vertex
from dissociation.errors import NotApplicableError
from dissociation.fixtures import bowtie_with_pendants, diamond, spiked_15
from dissociation.generators import gnp, random_cactus, random_tree
from dissociation.graph import Graph, components, cycle_graph, path_graph
from dissociation.solver import diss_exact, diss_forest_dp, is_dissociation_set
from test_graph import graphs


def test_dense_block_vertex_examples():
    g = bowtie_with_pendants()
    u = find_dense_block_vertex(g)
    assert u == 0
    assert len(components(g.remove([u])[0])) == g.degree(u) - 2
    d = diamond()
    u = find_dense_block_vertex(d)
    assert d.degree(u) == 3
    assert len(components(d.remove([u])[0])) == 1
    assert find_dense_block_vertex(random_cactus(30, random.Random(1))) is None


def test_certify_examples():
    assert certify_bound_set(cycle_graph(5)).size == 3
    assert certify_bound_set(bowtie_with_pendants()).size >= 4
    assert certify_bound_set(path_graph(6)).size == 4
    assert certify_bound_set(Graph(0)).vertices == ()


def test_cactus_examples():
    c7_pendant = cycle_graph(7).add_vertices(1, [(0, 7)])
    assert cactus_exact(c7_pendant).size == 5
    assert cactus_exact(spiked_15()).size == 13
    with pytest.raises(NotApplicableError):
        cactus_exact(diamond())


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=11))
def test_certificate_meets_bound(g):
    cert = certify_bound_set(g)
    assert is_dissociation_set(g, cert.vertices)
    assert cert.size >= math.ceil(bound_e1(g))


def test_cactus_dp_matches_exact():
    rng = random.Random(17)
    for i in range(300):
        g = random_cactus(rng.randint(1, 18), rng, disjoint=bool(i % 2))
        cert = cactus_exact(g)
        assert is_dissociation_set(g, cert.vertices)
        assert cert.size == diss_exact(g).size


def test_cactus_dp_matches_forest_dp():
    rng = random.Random(4)
    for _ in range(100):
        t = random_tree(rng.randint(1, 60), rng)
        assert cactus_exact(t).size == diss_forest_dp(t).size


def test_certify_on_dense_graphs():
    rng = random.Random(9)
    for _ in range(30):
        g = gnp(25, 0.3, rng)
        cert = certify_bound_set(g)
        assert is_dissociation_set(g, cert.vertices)
        assert cert.size >= bound_e1(g)


def test_large_cactus_is_fast():
    g = random_cactus(200, random.Random(0), disjoint=False)
    start = time.perf_counter()
    cert = certify_bound_set(g)
    assert time.perf_counter() - start < 1.0
    assert is_dissociation_set(g, cert.vertices)
