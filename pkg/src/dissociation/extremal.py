"""Extremal graphs: spiked cycles, extremal trees and the family built by O1-O4.

Every member of the family starts from a base graph (P3, a cycle of length
not divisible by 3, or a very good spiked cycle) and grows by attaching a new
piece through a single bridge:

    O1  path u-v-w, bridge w-x
    O2  cherry with centre v and leaves u, u', bridge v-x
    O3  cycle C_l with l not divisible by 3, bridge from one cycle vertex
    O4  very good spiked cycle, bridge from any of its vertices

Recognition runs the construction backwards: it peels pendant pieces off
across bridges, depth first, and remembers remainders that failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cycles import is_cycle_disjoint
from .errors import InvariantViolation, NotApplicableError
from .graph import Graph, block_decomposition, cycle_graph, is_connected, is_tree, path_graph
from .solver import ExactSolver, SearchLimits

# ---------------------------------------------------------------------------
# spiked cycles


@dataclass(frozen=True)
class SpikedCycleSpec:
    """Cycle u_1..u_ell with a pendant leaf at each (1-based) position in ``spikes``."""

    ell: int
    spikes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "spikes", tuple(self.spikes))
        k = len(self.spikes)
        if self.ell < 3:
            raise ValueError("spiked cycle needs ell >= 3")
        if k < 1 or k > self.ell:
            raise ValueError(f"need 1 <= k <= ell, got k={k}, ell={self.ell}")
        if any(b <= a for a, b in zip(self.spikes, self.spikes[1:])):
            raise ValueError("spike positions must be strictly increasing")
        if self.spikes[0] < 1 or self.spikes[-1] > self.ell:
            raise ValueError(f"spike positions must lie in 1..{self.ell}")

    @property
    def k(self) -> int:
        return len(self.spikes)

    @property
    def order(self) -> int:
        return self.ell + self.k

    def gaps(self) -> list[int]:
        """Lengths of the k cycle paths between consecutive spiked vertices, wrap last."""
        s = self.spikes
        return [b - a for a, b in zip(s, s[1:])] + [self.ell + s[0] - s[-1]]

    def to_json(self) -> dict:
        return {"ell": self.ell, "spikes": list(self.spikes)}


def build_spiked_cycle(spec: SpikedCycleSpec) -> Graph:
    """Cycle vertices 0..ell-1 in order, then one leaf per spike in position order."""
    ell = spec.ell
    edges = [(i, (i + 1) % ell) for i in range(ell)]
    edges += [(pos - 1, ell + j) for j, pos in enumerate(spec.spikes)]
    return Graph(ell + spec.k, edges)


def is_good(spec: SpikedCycleSpec) -> bool:
    """k=1 and ell = 1 mod 3, or the cyclic gaps are 2,...,2 and one 1 (mod 3).

    The test is invariant under rotating the labels, so a spiked cycle is
    judged by its shape; with the ``1 mod 3`` gap in the wrap-around slot it
    is the usual position-wise condition.
    """
    residues = sorted(g % 3 for g in spec.gaps())
    return residues == [1] + [2] * (spec.k - 1)


def is_very_good(spec: SpikedCycleSpec) -> bool:
    return is_good(spec) and spec.ell % 3 != 1


# ---------------------------------------------------------------------------
# extremal trees


def is_extremal_tree(t: Graph) -> bool:
    """n = 0 mod 3 and no vertex leaves three or more components of order != 0 mod 3."""
    if not is_tree(t):
        raise NotApplicableError("is_extremal_tree needs a tree")
    n = t.n
    if n % 3:
        return False
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for v in order:
        for w in t.adj[v]:
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    for y in range(n):
        # pieces of T - y: each child subtree, plus the part above y
        bad = sum(size[c] % 3 != 0 for c in t.adj[y] if c != 0 and parent[c] == y)
        if y != 0:
            bad += (n - size[y]) % 3 != 0
        if bad > 2:
            return False
    return True


# ---------------------------------------------------------------------------
# construction traces

P3, CYCLE, SPIKED = "P3", "cycle", "spiked"


@dataclass(frozen=True)
class Base:
    kind: str
    ell: int | None = None
    spikes: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.ell is not None:
            d["ell"] = self.ell
        if self.spikes is not None:
            d["spikes"] = list(self.spikes)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Base":
        sp = d.get("spikes")
        return cls(d["kind"], d.get("ell"), tuple(sp) if sp is not None else None)

    def spec(self) -> SpikedCycleSpec:
        return SpikedCycleSpec(self.ell, self.spikes)


@dataclass(frozen=True)
class Step:
    """One operation. ``attach`` is the existing vertex x that receives the bridge;
    ``anchor`` is the piece's own (local) vertex at the other end, for O3/O4."""

    op: str
    attach: int
    ell: int | None = None
    spikes: tuple[int, ...] | None = None
    anchor: int = 0

    def to_json(self) -> dict:
        params: dict = {}
        if self.op in ("O3", "O4"):
            params["ell"] = self.ell
            params["anchor"] = self.anchor
        if self.op == "O4":
            params["spikes"] = list(self.spikes)
        return {"op": self.op, "params": params, "attach": self.attach}

    @classmethod
    def from_json(cls, d: dict) -> "Step":
        p = d.get("params", {})
        sp = p.get("spikes")
        return cls(
            d["op"],
            d["attach"],
            p.get("ell"),
            tuple(sp) if sp is not None else None,
            p.get("anchor", 0),
        )


@dataclass(frozen=True)
class ConstructionTrace:
    """Base plus operations. Replaying yields vertex ids in order of creation.

    ``labels`` (set by recognition) maps each replayed vertex to the vertex of
    the recognised graph it stands for.
    """

    base: Base
    steps: tuple[Step, ...] = ()
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        d = {"base": self.base.to_json(), "steps": [s.to_json() for s in self.steps]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "ConstructionTrace":
        labels = d.get("labels")
        return cls(
            Base.from_json(d["base"]),
            tuple(Step.from_json(s) for s in d.get("steps", [])),
            tuple(labels) if labels is not None else None,
        )

    def is_tree_trace(self) -> bool:
        return self.base.kind == P3 and all(s.op in ("O1", "O2") for s in self.steps)


def base_graph(base: Base) -> Graph:
    if base.kind == P3:
        return path_graph(3)
    if base.kind == CYCLE:
        if base.ell is None or base.ell < 3 or base.ell % 3 == 0:
            raise ValueError(f"base cycle length must be >= 3 and not 0 mod 3, got {base.ell}")
        return cycle_graph(base.ell)
    if base.kind == SPIKED:
        spec = base.spec()
        if not is_very_good(spec):
            raise ValueError(f"base spiked cycle {spec} is not very good")
        return build_spiked_cycle(spec)
    raise ValueError(f"unknown base kind {base.kind!r}")


def apply_operation(g: Graph, step: Step) -> Graph:
    """Attach the piece described by ``step``; new vertices get ids n, n+1, ..."""
    n = g.n
    x = step.attach
    if not 0 <= x < n:
        raise ValueError(f"attachment vertex {x} not in graph with n={n}")
    if step.op == "O1":
        # u=n, v=n+1, w=n+2
        return g.add_vertices(3, [(n, n + 1), (n + 1, n + 2), (n + 2, x)])
    if step.op == "O2":
        # v=n (centre), u=n+1, u'=n+2
        return g.add_vertices(3, [(n, n + 1), (n, n + 2), (n, x)])
    if step.op == "O3":
        ell = step.ell
        if ell is None or ell < 3 or ell % 3 == 0:
            raise ValueError(f"O3 needs a cycle length >= 3 not divisible by 3, got {ell}")
        piece = cycle_graph(ell)
    elif step.op == "O4":
        spec = SpikedCycleSpec(step.ell, step.spikes)
        if not is_very_good(spec):
            raise ValueError(f"O4 needs a very good spiked cycle, got {spec}")
        piece = build_spiked_cycle(spec)
    else:
        raise ValueError(f"unknown operation {step.op!r}")
    if not 0 <= step.anchor < piece.n:
        raise ValueError(f"anchor {step.anchor} outside piece of order {piece.n}")
    edges = [(a + n, b + n) for a, b in piece.edges()] + [(n + step.anchor, x)]
    return g.add_vertices(piece.n, edges)


def generate_member(trace: ConstructionTrace) -> Graph:
    g = base_graph(trace.base)
    for step in trace.steps:
        g = apply_operation(g, step)
    return g


# ---------------------------------------------------------------------------
# random members


def _random_very_good(rng: random.Random, max_order: int) -> SpikedCycleSpec | None:
    # gaps 2 (mod 3) except one 1 (mod 3) give ell = 2k - 1 (mod 3),
    # which avoids 1 mod 3 exactly when k is not 1 mod 3
    ks = [k for k in range(2, max_order) if k % 3 != 1 and 3 * k - 1 <= max_order]
    if not ks:
        return None
    k = rng.choice(ks)
    gaps = [2] * (k - 1) + [1]
    room = max_order - (3 * k - 1)
    while room >= 3 and rng.random() < 0.5:
        gaps[rng.randrange(k)] += 3
        room -= 3
    ell = sum(gaps)
    first = rng.randint(1, gaps[-1])
    spikes = [first]
    for gap in gaps[:-1]:
        spikes.append(spikes[-1] + gap)
    return SpikedCycleSpec(ell, tuple(spikes))


def _random_cycle_length(rng: random.Random, max_len: int) -> int | None:
    options = [ell for ell in range(4, max_len + 1) if ell % 3]
    return rng.choice(options) if options else None


def random_member(
    family: str, size_budget: int, seed: int
) -> tuple[Graph, ConstructionTrace]:
    """Random member of the tree family ("T") or the cycle-disjoint family ("C").

    Operations are added until none fits in ``size_budget`` vertices.
    """
    if size_budget < 3:
        raise ValueError("size_budget must be at least 3")
    family = family.upper()
    if family not in ("T", "C"):
        raise ValueError(f"family must be 'T' or 'C', got {family!r}")
    rng = random.Random(seed)
    if family == "T":
        base = Base(P3)
    else:
        kinds = [P3]
        if _random_cycle_length(rng, size_budget) is not None:
            kinds.append(CYCLE)
        if size_budget >= 5:
            kinds.append(SPIKED)
        kind = rng.choice(kinds)
        if kind == P3:
            base = Base(P3)
        elif kind == CYCLE:
            base = Base(CYCLE, _random_cycle_length(rng, size_budget))
        else:
            spec = _random_very_good(rng, size_budget)
            base = Base(SPIKED, spec.ell, spec.spikes)
    g = base_graph(base)
    steps: list[Step] = []
    while True:
        room = size_budget - g.n
        ops = []
        if room >= 3:
            ops += ["O1", "O2"]
        if family == "C":
            if room >= 4:
                ops.append("O3")
            if room >= 5:
                ops.append("O4")
        if not ops:
            break
        op = rng.choice(ops)
        x = rng.randrange(g.n)
        if op in ("O1", "O2"):
            step = Step(op, x)
        elif op == "O3":
            ell = _random_cycle_length(rng, room)
            step = Step(op, x, ell, None, rng.randrange(ell))
        else:
            spec = _random_very_good(rng, room)
            step = Step(op, x, spec.ell, spec.spikes, rng.randrange(spec.order))
        g = apply_operation(g, step)
        steps.append(step)
    return g, ConstructionTrace(base, tuple(steps))


# ---------------------------------------------------------------------------
# recognition


def _inner_degrees(g: Graph, S: frozenset[int]) -> dict[int, int]:
    return {v: sum(1 for w in g.adj[v] if w in S) for v in S}


def _cycle_from(g: Graph, S, start: int) -> list[int]:
    """Walk the cycle G[S] from ``start`` towards its smaller neighbour."""
    order = [start]
    prev, cur = start, min(w for w in g.adj[start] if w in S)
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(w for w in g.adj[cur] if w in S and w != prev)
    return order


def _as_cycle(g: Graph, S: frozenset[int], deg) -> bool:
    return len(S) >= 3 and all(d == 2 for d in deg.values())


def spiked_cycle_layout(g: Graph, S) -> tuple[SpikedCycleSpec, list[int]] | None:
    """Recognise a connected G[S] as a spiked cycle.

    Returns the spec (rotated so that a good shape satisfies the
    position-wise condition) and the list mapping local ids of
    ``build_spiked_cycle(spec)`` to vertices of ``g``.
    """
    S = frozenset(S)
    deg = _inner_degrees(g, S)
    if sum(deg.values()) != 2 * len(S):
        return None
    leaves = [v for v in S if deg[v] == 1]
    if not leaves:
        return None
    hosts = {}
    for leaf in leaves:
        h = next(w for w in g.adj[leaf] if w in S)
        if deg[h] != 3 or h in hosts:
            return None
        hosts[h] = leaf
    ring = S - set(leaves)
    for v in ring:
        if deg[v] != (3 if v in hosts else 2):
            return None
    if len(ring) < 3:
        return None
    order = _cycle_from(g, ring, min(ring))
    if len(order) != len(ring):
        return None
    ell = len(order)
    pos = [i for i, v in enumerate(order) if v in hosts]
    k = len(pos)
    gaps = [pos[j + 1] - pos[j] for j in range(k - 1)] + [ell + pos[0] - pos[-1]]
    # keep the walk as is if the wrap gap is already 1 mod 3, otherwise
    # restart it at the spike that follows the first such gap
    shift = 0
    if gaps[-1] % 3 != 1:
        for j, gap in enumerate(gaps):
            if gap % 3 == 1:
                shift = pos[(j + 1) % k]
                break
    order = order[shift:] + order[:shift]
    spikes = tuple(sorted((p - shift) % ell + 1 for p in pos))
    spec = SpikedCycleSpec(ell, spikes)
    local = order + [hosts[order[p - 1]] for p in spikes]
    return spec, local


def _recognize_base(g: Graph, S: frozenset[int]):
    deg = _inner_degrees(g, S)
    m = sum(deg.values()) // 2
    if len(S) == 3 and m == 2:
        centre = next(v for v in S if deg[v] == 2)
        ends = sorted(v for v in S if v != centre)
        return Base(P3), [ends[0], centre, ends[1]]
    if m == len(S) and _as_cycle(g, S, deg):
        if len(S) % 3 == 0:
            return None
        order = _cycle_from(g, S, min(S))
        return Base(CYCLE, len(S)), order
    lay = spiked_cycle_layout(g, S)
    if lay is not None and is_very_good(lay[0]):
        spec, local = lay
        return Base(SPIKED, spec.ell, spec.spikes), local
    return None


def _recognize_piece(g: Graph, piece: frozenset[int], root: int):
    """Piece hanging off a bridge at ``root``: (op, ell, spikes, anchor, local order)."""
    deg = _inner_degrees(g, piece)
    m = sum(deg.values()) // 2
    if len(piece) == 3 and m == 2:
        centre = next(v for v in piece if deg[v] == 2)
        if root == centre:
            leaves = sorted(v for v in piece if v != centre)
            return "O2", None, None, 0, [centre] + leaves
        other = next(v for v in piece if v not in (centre, root))
        return "O1", None, None, 0, [other, centre, root]
    if m == len(piece) and _as_cycle(g, piece, deg):
        if len(piece) % 3 == 0:
            return None
        return "O3", len(piece), None, 0, _cycle_from(g, piece, root)
    lay = spiked_cycle_layout(g, piece)
    if lay is not None and is_very_good(lay[0]):
        spec, local = lay
        return "O4", spec.ell, spec.spikes, local.index(root), local
    return None


def _bridges(g: Graph, S: frozenset[int]) -> list[tuple[int, int]]:
    sub, keep = g.induced(S)
    bd = block_decomposition(sub)
    out = []
    for i, vs in enumerate(bd.blocks):
        if len(vs) == 2:
            out.append((keep[vs[0]], keep[vs[1]]))
    out.sort()
    return out


def _side(g: Graph, S: frozenset[int], start: int, cut: tuple[int, int]) -> frozenset[int]:
    a, b = cut
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w in S and w not in seen and {v, w} != {a, b}:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def membership_in_C(g: Graph) -> ConstructionTrace | None:
    """A construction trace for ``g`` if it belongs to the family, else None.

    Requires a connected cycle-disjoint graph. The returned trace carries
    ``labels`` so that replaying it reproduces ``g`` exactly.
    """
    if not is_connected(g):
        raise NotApplicableError("membership test needs a connected graph")
    if not is_cycle_disjoint(g):
        raise NotApplicableError("membership test needs a cycle-disjoint graph")
    failed: set[frozenset[int]] = set()

    def peel(S: frozenset[int]):
        base = _recognize_base(g, S)
        if base is not None:
            return base, []
        if S in failed or len(S) < 6:
            return None
        for a, b in _bridges(g, S):
            for root, x in ((a, b), (b, a)):
                piece = _side(g, S, root, (a, b))
                if len(piece) < 3 or len(S) - len(piece) < 3:
                    continue
                desc = _recognize_piece(g, piece, root)
                if desc is None:
                    continue
                found = peel(S - piece)
                if found is not None:
                    found[1].append((desc, x))
                    return found
        failed.add(S)
        return None

    result = peel(frozenset(range(g.n)))
    if result is None:
        return None
    (base, base_local), pieces = result
    labels = list(base_local)
    replay_id = {v: i for i, v in enumerate(labels)}
    steps = []
    for (op, ell, spikes, anchor, local), x in pieces:
        steps.append(Step(op, replay_id[x], ell, spikes, anchor))
        for v in local:
            replay_id[v] = len(labels)
            labels.append(v)
    trace = ConstructionTrace(base, tuple(steps), tuple(labels))
    _check_replay(g, trace)
    return trace


def _check_replay(g: Graph, trace: ConstructionTrace) -> None:
    h = generate_member(trace)
    lab = trace.labels
    mapped = sorted((min(lab[a], lab[b]), max(lab[a], lab[b])) for a, b in h.edges())
    if h.n != g.n or mapped != g.edges():
        raise InvariantViolation("replayed trace does not reproduce the input graph")


def membership_in_T(t: Graph) -> ConstructionTrace | None:
    """Trace using only P3, O1 and O2 if ``t`` is an extremal tree."""
    if not is_tree(t):
        raise NotApplicableError("membership_in_T needs a tree")
    trace = membership_in_C(t)
    if trace is not None and not trace.is_tree_trace():
        raise InvariantViolation("tree trace uses a cycle operation")
    return trace


def has_avoiding_maximum_set(
    g: Graph, u: int, limits: SearchLimits | None = None, solver: ExactSolver | None = None
) -> bool:
    """Whether some maximum dissociation set of ``g`` leaves out ``u``."""
    s = solver if solver is not None else ExactSolver(g, limits)
    return s.avoiding(u).size == s.maximum().size
