"""Brute-force oracles, kept deliberately naive and independent of the package."""

from __future__ import annotations

from itertools import combinations


def adjacency(n: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_dissociation(adj: list[set[int]], subset) -> bool:
    s = set(subset)
    return all(len(adj[v] & s) <= 1 for v in s)


def diss_brute(n: int, edges) -> int:
    """Largest subset inducing max degree <= 1, trying sizes from the top."""
    adj = adjacency(n, edges)
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            if is_dissociation(adj, subset):
                return size
    return 0


def diss_brute_avoiding(n: int, edges, u: int) -> int:
    adj = adjacency(n, edges)
    others = [v for v in range(n) if v != u]
    for size in range(len(others), -1, -1):
        for subset in combinations(others, size):
            if is_dissociation(adj, subset):
                return size
    return 0


def _is_connected(adj, subset) -> bool:
    s = set(subset)
    start = next(iter(s))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] & s:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == s


def induced_cycle_sets(n: int, edges) -> list[frozenset[int]]:
    """Vertex sets of every induced cycle: connected, size >= 3, all degrees 2."""
    adj = adjacency(n, edges)
    out = []
    for size in range(3, n + 1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(len(adj[v] & s) == 2 for v in s) and _is_connected(adj, s):
                out.append(frozenset(s))
    return out


def c1_brute(n: int, edges) -> int:
    return sum(1 for c in induced_cycle_sets(n, edges) if len(c) % 3 == 1)


def nu1_brute(n: int, edges) -> int:
    """Maximum number of pairwise vertex-disjoint induced cycles of length 1 mod 3."""
    cycles = [c for c in induced_cycle_sets(n, edges) if len(c) % 3 == 1]
    best = 0

    def grow(i: int, used: frozenset, count: int) -> None:
        nonlocal best
        best = max(best, count)
        for j in range(i, len(cycles)):
            if not cycles[j] & used:
                grow(j + 1, used | cycles[j], count + 1)

    grow(0, frozenset(), 0)
    return best


def count_components(n: int, edges) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)})
