"""Cycle structure: cycle-disjointness, chordless cycles, c1 and its packing variant."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CycleCapExceeded, PackingLimitExceeded
from .graph import Graph, bits, block_decomposition

DEFAULT_CYCLE_CAP = 10**6
DEFAULT_PACKING_LIMIT = 5000


@dataclass(frozen=True)
class InducedCycleSet:
    """Chordless cycles in canonical rotation.

    Each cycle starts at its smallest vertex and continues towards the
    smaller of that vertex's two cycle neighbours. ``truncated`` means the
    enumeration stopped at the cap and ``cycles`` is incomplete.
    """

    cycles: tuple[tuple[int, ...], ...]
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.cycles)


def canonical_cycle(seq) -> tuple[int, ...]:
    seq = list(seq)
    i = seq.index(min(seq))
    seq = seq[i:] + seq[:i]
    if len(seq) > 2 and seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


def _cycle_blocks(g: Graph):
    bd = block_decomposition(g)
    return bd, [i for i in range(len(bd.blocks)) if bd.is_cycle(i)]


def is_cycle_disjoint(g: Graph) -> bool:
    """True iff every block is K1/K2 or a cycle and no vertex is on two cycles."""
    bd, cyc = _cycle_blocks(g)
    for i, vs in enumerate(bd.blocks):
        if len(vs) > 2 and not bd.is_cycle(i):
            return False
    used: set[int] = set()
    for i in cyc:
        for v in bd.blocks[i]:
            if v in used:
                return False
            used.add(v)
    return True


def is_cactus_forest(g: Graph) -> bool:
    """Every block is K1, K2 or a cycle (cycles may share cut vertices)."""
    bd = block_decomposition(g)
    return all(len(vs) <= 2 or bd.is_cycle(i) for i, vs in enumerate(bd.blocks))


def cycle_order(g: Graph, vertices) -> list[int]:
    """Walk a cycle block starting at its smallest vertex."""
    vs = set(vertices)
    start = min(vs)
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [w for w in g.adj[cur] if w in vs and w != prev]
        if cur == start:
            nxt = nxt[:1]
        w = nxt[0]
        if w == start:
            break
        order.append(w)
        prev, cur = cur, w
        if len(order) > len(vs):
            raise ValueError("vertex set is not a cycle")
    return order


def _block_cycles(g: Graph) -> list[tuple[int, ...]]:
    bd, cyc = _cycle_blocks(g)
    return sorted(canonical_cycle(cycle_order(g, bd.blocks[i])) for i in cyc)


def enumerate_induced_cycles(
    g: Graph, cap: int = DEFAULT_CYCLE_CAP, *, fast_path: bool = True
) -> InducedCycleSet:
    """All chordless cycles of length >= 3, up to ``cap`` of them.

    Paths are grown from their smallest vertex ``s`` through larger ids only;
    a vertex adjacent to an interior path vertex would create a chord and is
    rejected at extension time. A cycle is reported once, in the direction
    where the second vertex is smaller than the last.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if fast_path and is_cycle_disjoint(g):
        found = _block_cycles(g)
        if len(found) > cap:
            return InducedCycleSet(tuple(found[:cap]), truncated=True)
        return InducedCycleSet(tuple(found))

    masks = g.masks
    found: list[tuple[int, ...]] = []
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        ms = masks[s]
        for p1 in g.adj[s]:
            if p1 < s:
                continue
            # blocked = path vertices plus neighbours of interior path vertices
            stack = [((s, p1), (1 << s) | (1 << p1))]
            while stack:
                path, blocked = stack.pop()
                last = path[-1]
                grown = blocked | masks[last]
                for x in bits(masks[last] & above & ~blocked):
                    if ms >> x & 1:
                        if x > p1:
                            found.append(path + (x,))
                            if len(found) > cap:
                                return InducedCycleSet(
                                    tuple(sorted(found[:cap])), truncated=True
                                )
                    else:
                        stack.append((path + (x,), grown | (1 << x)))
    found.sort()
    return InducedCycleSet(tuple(found))


def c1_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[tuple[int, ...]]:
    """Induced cycles of length 1 mod 3. Raises CycleCapExceeded on truncation."""
    cs = enumerate_induced_cycles(g, cap)
    if cs.truncated:
        raise CycleCapExceeded(cap)
    return [c for c in cs.cycles if len(c) % 3 == 1]


def c1_count(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> int:
    """Number of induced cycles whose length is 1 mod 3."""
    return len(c1_cycles(g, cap))


def max_disjoint_c1_packing(
    g: Graph, cap: int = DEFAULT_CYCLE_CAP, limit: int = DEFAULT_PACKING_LIMIT
) -> int:
    """Largest number of pairwise vertex-disjoint induced cycles of length 1 mod 3."""
    cycles = c1_cycles(g, cap)
    if len(cycles) > limit:
        raise PackingLimitExceeded(len(cycles), limit)
    if not cycles:
        return 0
    vmask = [sum(1 << v for v in c) for c in cycles]
    k = len(cycles)
    conflict = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if vmask[i] & vmask[j]:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    if not any(conflict):
        return k
    best = 0

    # cycles have length >= 4, so free vertices // 4 bounds what is left
    def search(cand: int, taken: int, used: int) -> None:
        nonlocal best
        if taken > best:
            best = taken
        if not cand:
            return
        free = g.n - bin(used).count("1")
        if taken + min(bin(cand).count("1"), free // 4) <= best:
            return
        low = cand & -cand
        i = low.bit_length() - 1
        search(cand & ~conflict[i] & ~low, taken + 1, used | vmask[i])
        search(cand & ~low, taken, used)

    search((1 << k) - 1, 0, 0)
    return best
