"""Graph generators for sweeps and property tests. All randomness is seeded."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, is_connected


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree via a Pruefer sequence."""
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def random_cactus(
    n: int, rng: random.Random, *, disjoint: bool = True, cycle_prob: float = 0.4,
    max_cycle: int = 9,
) -> Graph:
    """Connected cactus on n vertices grown by pendant edges and cycles.

    With ``disjoint`` a new cycle only goes through a vertex not already on
    a cycle, so the result is cycle-disjoint.
    """
    if n <= 0:
        return Graph(0)
    edges = []
    on_cycle: set[int] = set()
    cur = 1
    while cur < n:
        x = rng.randrange(cur)
        left = n - cur
        if (
            left >= 2
            and rng.random() < cycle_prob
            and not (disjoint and x in on_cycle)
        ):
            length = rng.randint(3, min(max_cycle, left + 1))
            ring = [x] + list(range(cur, cur + length - 1))
            cur += length - 1
            edges += [(ring[i], ring[(i + 1) % length]) for i in range(length)]
            on_cycle.update(ring)
        else:
            edges.append((x, cur))
            cur += 1
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[a], perm[b]) for a, b in edges])


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every graph on vertex set 0..n-1 (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for s in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if s >> i & 1])


def atlas_graphs(n: int, connected_only: bool = False) -> list[Graph]:
    """All non-isomorphic graphs on n <= 7 vertices, from the networkx graph atlas."""
    import networkx as nx

    if n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != n:
            continue
        g = Graph(n, h.edges())
        if connected_only and not is_connected(g):
            continue
        out.append(g)
    return out


def _tree_code(adj: list[list[int]], root: int) -> str:
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[w] for w in adj[v] if parent.get(w) == v)
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_canonical_form(t: Graph) -> str:
    adj = [list(a) for a in t.adj]
    return min(_tree_code(adj, c) for c in _centers(adj))


def free_trees(n: int) -> list[Graph]:
    """All non-isomorphic trees on n vertices, by leaf extension and deduplication."""
    if n <= 0:
        return []
    level = {tree_canonical_form(Graph(1)): Graph(1)}
    for size in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for t in level.values():
            for v in range(t.n):
                h = t.add_vertices(1, [(v, size - 1)])
                nxt.setdefault(tree_canonical_form(h), h)
        level = nxt
    return [level[key] for key in sorted(level)]
