"""Simple undirected graphs on vertices 0..n-1, I/O and structural primitives."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphFormatError

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph with dense vertex ids ``0..n-1``.

    Neighbor lists are sorted ascending. ``masks[v]`` is the neighborhood of
    ``v`` as an int bitmask, which the exact solvers use heavily.
    """

    __slots__ = ("n", "adj", "m", "masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        masks = []
        for s in adj:
            x = 0
            for w in s:
                x |= 1 << w
            masks.append(x)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "masks", tuple(masks))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.edges()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` in ascending id order.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph(len(keep), edges), keep

    def remove(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def add_vertices(self, count: int, edges: Iterable[Sequence[int]] = ()) -> "Graph":
        """A new graph with ``count`` extra vertices and the extra ``edges``."""
        return Graph(self.n + count, self.edges() + [tuple(e) for e in edges])


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def mask_of(vertices: Iterable[int]) -> int:
    x = 0
    for v in vertices:
        x |= 1 << v
    return x


def bits(mask: int) -> list[int]:
    """Ascending list of set bit positions."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# connectivity


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and the block-cutvertex tree of a graph.

    ``blocks[i]`` is a sorted vertex tuple and ``block_edges[i]`` its edges.
    Isolated vertices appear as single-vertex pseudo-blocks with no edges.
    ``block_tree`` lists the tree's edges as ``(block index, cut vertex)``.
    """

    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[tuple[Edge, ...], ...]
    cut_vertices: frozenset[int]
    block_tree: tuple[tuple[int, int], ...]

    def is_bridge(self, i: int) -> bool:
        return len(self.blocks[i]) == 2

    def is_cycle(self, i: int) -> bool:
        return len(self.blocks[i]) >= 3 and len(self.block_edges[i]) == len(self.blocks[i])

    def blocks_at(self, n: int) -> list[list[int]]:
        """For every vertex, the indices of the blocks containing it."""
        at: list[list[int]] = [[] for _ in range(n)]
        for i, vs in enumerate(self.blocks):
            for v in vs:
                at[v].append(i)
        return at


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via the iterative lowpoint DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    raw: list[list[Edge]] = []
    isolated: list[int] = []
    cut: set[int] = set()
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not g.adj[root]:
            isolated.append(root)
            continue
        root_children = 0
        stack = [(root, -1, iter(g.adj[root]))]
        estack: list[Edge] = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                edges = []
                while True:
                    e = estack.pop()
                    edges.append(e)
                    if e == (p, v):
                        break
                raw.append(edges)
                if p == root:
                    root_children += 1
                else:
                    cut.add(p)
        if root_children >= 2:
            cut.add(root)

    entries = []
    for edges in raw:
        canon = tuple(sorted((min(e), max(e)) for e in edges))
        verts = tuple(sorted({x for e in canon for x in e}))
        entries.append((verts, canon))
    entries.extend(((v,), ()) for v in isolated)
    entries.sort()
    blocks = tuple(e[0] for e in entries)
    block_edges = tuple(e[1] for e in entries)
    tree = tuple(
        (i, v) for i, vs in enumerate(blocks) for v in vs if v in cut
    )
    return BlockDecomposition(blocks, block_edges, frozenset(cut), tree)


# ---------------------------------------------------------------------------
# I/O

EDGE_LIST = "edge-list"
GRAPH6 = "graph6"
DOT = "dot"

_FORMAT_ALIASES = {
    "edge-list": EDGE_LIST,
    "edgelist": EDGE_LIST,
    "edges": EDGE_LIST,
    "graph6": GRAPH6,
    "g6": GRAPH6,
    "dot": DOT,
}


def _normalize_format(fmt: str) -> str:
    try:
        return _FORMAT_ALIASES[fmt.lower()]
    except KeyError:
        raise ValueError(f"unknown graph format {fmt!r}") from None


def parse_graph(text: str, format: str = EDGE_LIST) -> Graph:
    """Parse a single graph from graph6 or edge-list text."""
    fmt = _normalize_format(format)
    if fmt == GRAPH6:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, found {len(lines)}")
        return _parse_graph6(lines[0])
    if fmt == EDGE_LIST:
        return _parse_edge_list(text)
    raise ValueError("dot is an export-only format")


def parse_graph6_lines(text: str) -> list[Graph]:
    """One graph per non-blank line (batch input)."""
    out = []
    for i, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(_parse_graph6(line))
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc), line=i) from None
    return out


def _parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = []
    for pos, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r} at offset {pos}")
        data.append(c - 63)
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    else:
        raise GraphFormatError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(rest) != need:
        raise GraphFormatError(
            f"graph6 body has {len(rest)} bytes, expected {need} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def _parse_edge_list(text: str) -> Graph:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise GraphFormatError("empty edge-list input")

    def as_int(tok: str, lineno: int) -> int:
        try:
            val = int(tok)
        except ValueError:
            raise GraphFormatError(f"not an integer: {tok!r}", line=lineno) from None
        if val < 0:
            raise GraphFormatError(f"negative vertex id {val}", line=lineno)
        return val

    header_line, first = rows[0]
    if len(first) == 1:
        n = as_int(first[0], header_line)
        body_rows = rows[1:]
        header = True
    else:
        n = -1
        body_rows = rows
        header = False

    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, toks in body_rows:
        if len(toks) != 2:
            raise GraphFormatError(f"expected 'u v', got {' '.join(toks)!r}", line=lineno)
        u, v = as_int(toks[0], lineno), as_int(toks[1], lineno)
        if header and (u >= n or v >= n):
            raise GraphFormatError(f"vertex id {max(u, v)} >= n={n}", line=lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}", line=lineno)
        seen.add(key)
        edges.append(key)
    if not header:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def write_graph(g: Graph, format: str = EDGE_LIST) -> str:
    """Serialize ``g``. Edge lists are canonical: ``u < v``, lexicographic order."""
    fmt = _normalize_format(format)
    if fmt == EDGE_LIST:
        return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])
    if fmt == GRAPH6:
        return _write_graph6(g)
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines)


def _write_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        head = [63, 63] + [n >> s & 63 for s in range(30, -1, -6)]
    body = []
    acc = 0
    k = 0
    for j in range(1, n):
        mj = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (mj >> i & 1)
            k += 1
            if k == 6:
                body.append(acc)
                acc = k = 0
    if k:
        body.append(acc << (6 - k))
    return "".join(chr(63 + d) for d in head + body)
