"""Polynomial-time dissociation sets that meet n - (m + k + c1)/3.

While the graph is not cycle-disjoint, a vertex whose removal leaves at most
``deg - 2`` components of its own component is deleted; each such deletion
keeps the bound. The cycle-disjoint remainder is then solved exactly by a
dynamic program over the block-cutvertex tree.
"""

from __future__ import annotations

from collections import deque

from .errors import InvariantViolation, NotApplicableError
from .graph import Graph, block_decomposition, components
from .solver import FREE, MATCHED, OUT, DissociationCertificate

_NEG = float("-inf")


def _block_excess(g: Graph) -> list[int]:
    """Per vertex: sum over blocks B containing it of (deg_B(v) - 1)."""
    bd = block_decomposition(g)
    excess = [0] * g.n
    for edges in bd.block_edges:
        if not edges:
            continue
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        for v, d in deg.items():
            excess[v] += d - 1
    return excess


def find_dense_block_vertex(g: Graph) -> int | None:
    """Smallest vertex whose deletion leaves at most ``deg - 2`` pieces of its component.

    Such a vertex exists exactly when ``g`` is not cycle-disjoint: it has
    degree >= 3 inside a 2-connected non-cycle block, or it lies on two
    2-connected blocks. Returns None for cycle-disjoint graphs.
    """
    excess = _block_excess(g)
    for u, e in enumerate(excess):
        if e >= 2:
            before = len(components(g))
            after = len(components(g.remove([u])[0]))
            pieces = after - (before - 1)
            if pieces > g.degree(u) - 2:
                raise InvariantViolation(
                    f"vertex {u}: {pieces} components after deletion, degree {g.degree(u)}"
                )
            return u
    return None


def _cycle_walk(g: Graph, verts: set[int], top: int) -> list[int]:
    """Cycle vertices in order, starting after ``top`` (towards its smaller neighbour)."""
    order = []
    prev, cur = top, min(w for w in g.adj[top] if w in verts)
    while cur != top:
        order.append(cur)
        nxt = next(w for w in g.adj[cur] if w in verts and w != prev)
        prev, cur = cur, nxt
    return order


def _cycle_table(vals: list[list[float]], v_in: bool):
    """Path DP around a cycle block with the top vertex's membership fixed.

    ``vals[i]`` is the subtree table (OUT, FREE, MATCHED) of the i-th cycle
    vertex after the top. Returns {top_load: (value, states)} where
    ``top_load`` is the number of cycle neighbours of the top vertex in D and
    ``states`` gives each cycle vertex's state.
    """
    xv = 1 if v_in else 0
    # state: (x_first, x_last, load_last) -> (value, back)
    layer: dict[tuple[int, int, int], tuple[float, tuple]] = {}
    first = vals[0]
    for x, sub, val in ((0, 0, first[OUT]), (1, 0, first[FREE]), (1, 1, first[MATCHED])):
        if val == _NEG:
            continue
        load = sub + xv if x else 0
        if load > 1:
            continue
        key = (x, x, load)
        st = OUT if not x else (FREE if sub == 0 else MATCHED)
        if key not in layer or val > layer[key][0]:
            layer[key] = (val, (None, st))
    history = [layer]
    for tab in vals[1:]:
        nxt: dict[tuple[int, int, int], tuple[float, tuple]] = {}
        for key, (acc, _) in layer.items():
            x1, xp, lp = key
            for x, sub, val in ((0, 0, tab[OUT]), (1, 0, tab[FREE]), (1, 1, tab[MATCHED])):
                if val == _NEG:
                    continue
                if x and xp:
                    if lp + 1 > 1 or sub + 1 > 1:
                        continue
                    load = sub + 1
                else:
                    load = sub if x else 0
                nk = (x1, x, load)
                tot = acc + val
                st = OUT if not x else (FREE if sub == 0 else MATCHED)
                if nk not in nxt or tot > nxt[nk][0]:
                    nxt[nk] = (tot, (key, st))
        layer = nxt
        history.append(layer)

    result: dict[int, tuple[float, list[int]]] = {}
    for key, (val, _) in layer.items():
        x1, xk, lk = key
        if xv and xk and lk + 1 > 1:
            continue
        top_load = (x1 + xk) if xv else 0
        if top_load > 1:
            continue
        if top_load not in result or val > result[top_load][0]:
            result[top_load] = (val, _trace(history, key))
    return result


def _trace(history, key) -> list[int]:
    states = []
    for layer in reversed(history):
        prev, st = layer[key][1]
        states.append(st)
        key = prev
    states.reverse()
    return states


def cactus_exact(g: Graph) -> DissociationCertificate:
    """Exact maximum dissociation set when every block is K1, K2 or a cycle."""
    bd = block_decomposition(g)
    for i, vs in enumerate(bd.blocks):
        if len(vs) > 2 and not bd.is_cycle(i):
            raise NotApplicableError(f"block {list(vs)} is neither K2 nor a cycle")
    at = bd.blocks_at(g.n)
    n = g.n

    # Root every component at its smallest vertex and orient the block tree.
    order: list[int] = []
    child_blocks: list[list[int]] = [[] for _ in range(n)]
    block_members: dict[int, list[int]] = {}
    seen_block = [False] * len(bd.blocks)
    for comp in components(g):
        root = comp[0]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for b in at[v]:
                if seen_block[b] or len(bd.blocks[b]) == 1:
                    continue
                seen_block[b] = True
                child_blocks[v].append(b)
                verts = set(bd.blocks[b])
                members = (
                    _cycle_walk(g, verts, v) if bd.is_cycle(b) else [w for w in verts if w != v]
                )
                block_members[b] = members
                for w in members:
                    queue.append(w)

    dp: list[list[float]] = [[0.0, 1.0, _NEG] for _ in range(n)]
    block_sol: dict[int, dict] = {}
    matched_block = [-1] * n
    for v in reversed(order):
        out = 0.0
        in0 = 0.0
        gain, pick = _NEG, -1
        for b in child_blocks[v]:
            members = block_members[b]
            if len(members) == 1:
                c = members[0]
                dc = dp[c]
                s_out = max(range(3), key=lambda i: (dc[i], -i))
                sol = {
                    "out": (dc[s_out], [s_out]),
                    0: (dc[OUT], [OUT]),
                    1: (dc[FREE], [FREE]),
                }
            else:
                tabs = [dp[c] for c in members]
                t_out = _cycle_table(tabs, False)
                t_in = _cycle_table(tabs, True)
                sol = {"out": t_out[0]}
                for load in (0, 1):
                    sol[load] = t_in.get(load, (_NEG, None))
            block_sol[b] = sol
            out += sol["out"][0]
            in0 += sol[0][0]
            if sol[1][0] - sol[0][0] > gain:
                gain, pick = sol[1][0] - sol[0][0], b
        matched_block[v] = pick
        dp[v] = [out, 1 + in0, 1 + in0 + gain if pick >= 0 else _NEG]

    state = [OUT] * n
    assigned = [False] * n
    for v in order:
        if not assigned[v]:
            state[v] = max(range(3), key=lambda i: (dp[v][i], -i))
            assigned[v] = True
        s = state[v]
        for b in child_blocks[v]:
            sol = block_sol[b]
            if s == OUT:
                states = sol["out"][1]
            elif s == MATCHED and matched_block[v] == b:
                states = sol[1][1]
            else:
                states = sol[0][1]
            for c, st in zip(block_members[b], states):
                state[c] = st
                assigned[c] = True
    chosen = tuple(v for v in range(n) if state[v] != OUT)
    return DissociationCertificate(chosen, optimal=True)


def certify_bound_set(g: Graph) -> DissociationCertificate:
    """A dissociation set of size at least n - (m + k + c1)/3, in polynomial time."""
    keep = list(range(g.n))
    h = g
    while True:
        u = find_dense_block_vertex(h)
        if u is None:
            break
        h, sub = h.remove([u])
        keep = [keep[i] for i in sub]
    cert = cactus_exact(h)
    return DissociationCertificate(tuple(sorted(keep[v] for v in cert.vertices)), optimal=False)
