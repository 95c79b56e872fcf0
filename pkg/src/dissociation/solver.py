"""Exact maximum dissociation sets.

``ExactSolver`` is a memoised branch-and-reduce over induced subgraphs,
represented as vertex bitmasks. For a connected remainder ``R`` it either
reduces on a leaf or branches on a vertex ``v`` of maximum degree:

    diss(R) = max( diss(R - v),
                   1 + diss(R - N[v]),
                   max over w in N_R(v) of 2 + diss(R - N[v] - N[w]) )

Every decided vertex has all of its neighbours decided as well, so the
remainder is always a plain induced subgraph and memoisation on the mask is
exact. Disconnected remainders are split into components first.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from .errors import BudgetExceeded, NotApplicableError
from .graph import Graph, bits, components, is_forest


@dataclass(frozen=True)
class DissociationCertificate:
    vertices: tuple[int, ...]
    optimal: bool
    avoided: int | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "size": self.size,
            "optimal": self.optimal,
            "avoided": self.avoided,
        }


def is_dissociation_set(g: Graph, vertices) -> bool:
    """Check that ``vertices`` induces maximum degree <= 1. Independent of any solver."""
    inside = [False] * g.n
    for v in vertices:
        if not 0 <= v < g.n or inside[v]:
            return False
        inside[v] = True
    for v in range(g.n):
        if inside[v] and sum(inside[w] for w in g.adj[v]) > 1:
            return False
    return True


def verify_certificate(g: Graph, cert: DissociationCertificate) -> bool:
    if cert.avoided is not None and cert.avoided in cert.vertices:
        return False
    return is_dissociation_set(g, cert.vertices)


@dataclass(frozen=True)
class SearchLimits:
    """Budget for exact search. ``None`` disables a limit."""

    max_nodes: int | None = 1_000_000
    max_ms: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_ms is not None and self.max_ms <= 0:
            raise ValueError("max_ms must be positive")


DEFAULT_LIMITS = SearchLimits()


class ExactSolver:
    """Exact solver bound to one graph; the memo is shared across queries."""

    def __init__(self, g: Graph, limits: SearchLimits | None = None):
        self.g = g
        self.limits = limits or DEFAULT_LIMITS
        self.masks = g.masks
        self.closed = tuple(m | (1 << v) for v, m in enumerate(g.masks))
        self.memo: dict[int, tuple[int, int]] = {0: (0, 0)}
        self.nodes = 0
        self._deadline = None

    def _tick(self) -> None:
        self.nodes += 1
        lim = self.limits
        if lim.max_nodes is not None and self.nodes > lim.max_nodes:
            raise _Abort(f"node budget {lim.max_nodes} exceeded")
        if self._deadline is not None and self.nodes & 255 == 0:
            if time.perf_counter() > self._deadline:
                raise _Abort(f"time budget {lim.max_ms} ms exceeded")

    def solve_mask(self, mask: int) -> tuple[int, int]:
        """(size, witness mask) of a maximum dissociation set of G[mask]."""
        if self.limits.max_ms is not None:
            self._deadline = time.perf_counter() + self.limits.max_ms / 1000.0
        old = sys.getrecursionlimit()
        need = 4 * self.g.n + 200
        if old < need:
            sys.setrecursionlimit(need)
        try:
            return self._solve(mask)
        except _Abort as exc:
            raise BudgetExceeded(str(exc), incumbent=self._incumbent(mask)) from None
        finally:
            self._deadline = None
            if old < need:
                sys.setrecursionlimit(old)

    def _incumbent(self, mask: int) -> DissociationCertificate:
        from .constructive import certify_bound_set

        sub, keep = self.g.induced(bits(mask))
        cert = certify_bound_set(sub)
        return DissociationCertificate(tuple(keep[v] for v in cert.vertices), optimal=False)

    def _solve(self, R: int) -> tuple[int, int]:
        hit = self.memo.get(R)
        if hit is not None:
            return hit
        self._tick()
        masks = self.masks
        comp = frontier = R & -R
        while frontier:
            nb = 0
            for v in bits(frontier):
                nb |= masks[v]
            frontier = nb & R & ~comp
            comp |= frontier
        if comp != R:
            a = self._solve(comp)
            b = self._solve(R & ~comp)
            res = (a[0] + b[0], a[1] | b[1])
        else:
            res = self._solve_connected(R)
        self.memo[R] = res
        return res

    def _solve_connected(self, R: int) -> tuple[int, int]:
        verts = bits(R)
        if len(verts) <= 2:
            return len(verts), R
        masks = self.masks
        closed = self.closed
        best_v, best_d = -1, -1
        for v in verts:
            d = (masks[v] & R).bit_count()
            if d == 1:
                # some optimum contains a leaf: either alone or paired with its neighbour
                u = (masks[v] & R).bit_length() - 1
                a = self._solve(R & ~(1 << v) & ~(1 << u))
                b = self._solve(R & ~closed[u] & ~(1 << v))
                if b[0] + 2 > a[0] + 1:
                    return b[0] + 2, b[1] | (1 << v) | (1 << u)
                return a[0] + 1, a[1] | (1 << v)
            if d > best_d:
                best_v, best_d = v, d
        v = best_v
        bit = 1 << v
        r = self._solve(R & ~bit)
        best = r
        r = self._solve(R & ~closed[v])
        if r[0] + 1 > best[0]:
            best = (r[0] + 1, r[1] | bit)
        for w in bits(masks[v] & R):
            r = self._solve(R & ~closed[v] & ~closed[w])
            if r[0] + 2 > best[0]:
                best = (r[0] + 2, r[1] | bit | (1 << w))
        return best

    def maximum(self) -> DissociationCertificate:
        size, wit = self.solve_mask((1 << self.g.n) - 1)
        return DissociationCertificate(tuple(bits(wit)), optimal=True)

    def avoiding(self, u: int) -> DissociationCertificate:
        if not 0 <= u < self.g.n:
            raise ValueError(f"vertex {u} not in graph")
        size, wit = self.solve_mask(((1 << self.g.n) - 1) & ~(1 << u))
        return DissociationCertificate(tuple(bits(wit)), optimal=True, avoided=u)


class _Abort(Exception):
    pass


def diss_exact(g: Graph, limits: SearchLimits | None = None) -> DissociationCertificate:
    """Maximum dissociation set. Raises BudgetExceeded instead of approximating."""
    return ExactSolver(g, limits).maximum()


def diss_exact_avoiding(
    g: Graph, u: int, limits: SearchLimits | None = None
) -> DissociationCertificate:
    """Maximum dissociation set among those that do not contain ``u``."""
    return ExactSolver(g, limits).avoiding(u)


OUT, FREE, MATCHED = 0, 1, 2
_NEG = float("-inf")


def diss_forest_dp(g: Graph) -> DissociationCertificate:
    """Linear-time rooted DP on a forest.

    Per vertex: OUT (not in D), FREE (in D, no D-neighbour among its
    children) and MATCHED (in D, partnered with exactly one child).
    """
    if not is_forest(g):
        raise NotApplicableError("diss_forest_dp needs a forest")
    n = g.n
    parent = [-1] * n
    order: list[int] = []
    for comp in components(g):
        root = comp[0]
        stack = [root]
        parent[root] = root
        while stack:
            v = stack.pop()
            order.append(v)
            for w in g.adj[v]:
                if w != parent[v]:
                    parent[w] = v
                    stack.append(w)
    dp = [[0, 1, _NEG] for _ in range(n)]
    partner = [-1] * n
    for v in reversed(order):
        out = 0
        free = 1
        gain, pick = _NEG, -1
        for c in g.adj[v]:
            if c == parent[v]:
                continue
            dc = dp[c]
            out += max(dc)
            free += dc[OUT]
            if dc[FREE] - dc[OUT] > gain:
                gain, pick = dc[FREE] - dc[OUT], c
        dp[v] = [out, free, free + gain if pick >= 0 else _NEG]
        partner[v] = pick

    state = [OUT] * n
    chosen = []
    for v in order:
        p = parent[v]
        if p == v or state[p] == OUT:
            s = max(range(3), key=lambda i: (dp[v][i], -i))
        elif state[p] == MATCHED and partner[p] == v:
            s = FREE
        else:
            s = OUT
        state[v] = s
        if s != OUT:
            chosen.append(v)
    return DissociationCertificate(tuple(sorted(chosen)), optimal=True)
