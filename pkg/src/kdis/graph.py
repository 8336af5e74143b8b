"""Simple undirected graphs with bitset adjacency rows, plus graph6 and edge-list I/O.

A vertex set is passed around either as a Python ``int`` bitmask (internally)
or as any iterable of vertex indices (public API).  Rows are Python integers,
so the same code path serves 8-vertex search graphs and 546-vertex incidence
graphs.
"""
from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 1024


class GraphError(ValueError):
    """Raised for malformed graph input."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph, relabelled in increasing order of the kept vertices."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(sum(1 << index[u] for u in bits(self.adj[v]) if u in index))
        return Graph(len(keep), rows), index

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.all_vertices

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} not in graph on {G.n} vertices")


def neighborhood_query(G: Graph, v: int) -> tuple[int, frozenset[int], frozenset[int]]:
    """Return ``(degree, open neighbourhood, closed neighbourhood)`` of ``v``."""
    _check_vertex(G, v)
    open_ = frozenset(bits(G.adj[v]))
    return len(open_), open_, open_ | {v}


def delete_closed_neighborhoods(G: Graph, S: Iterable[int] | int) -> tuple[Graph, dict[int, int]]:
    """Remove ``N[v]`` for every ``v`` in ``S``; returns the rest and an old->new index map."""
    removed = 0
    for v in bits(to_mask(S)):
        _check_vertex(G, v)
        removed |= G.adj[v] | (1 << v)
    return G.induced(bits(G.all_vertices & ~removed))


# graph6 ---------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _size_field(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(G: Graph) -> str:
    out = [_size_field(G.n)]
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    offset = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        offset = len(_G6_HEADER)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6: character {ch!r} out of range at byte {pos + offset}")
    if not s:
        raise GraphError(f"graph6: missing size header at byte {offset}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, body = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphError(f"graph6: truncated size header at byte {offset}")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = 4
        if n <= 62:
            raise GraphError(f"graph6: non-canonical size header at byte {offset}")
    else:
        if len(vals) < 8:
            raise GraphError(f"graph6: truncated size header at byte {offset}")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        body = 8
        if n <= 258047:
            raise GraphError(f"graph6: non-canonical size header at byte {offset}")
    if n > MAX_VERTICES:
        raise GraphError(f"graph6: {n} vertices exceeds the cap of {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(vals) - body != nchars:
        raise GraphError(
            f"graph6: expected {nchars} data bytes after header, got {len(vals) - body} "
            f"(byte {offset + body})"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            c, r = divmod(k, 6)
            if vals[body + c] >> (5 - r) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nchars:
        pad = nchars * 6 - nbits
        if vals[-1] & ((1 << pad) - 1):
            raise GraphError(f"graph6: nonzero padding bits at byte {offset + len(vals) - 1}")
    return Graph(n, adj)


# edge lists -----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("edge list: empty input")
    try:
        head = [int(x) for x in lines[0].split()]
        edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"edge list: {exc}") from None
    if len(head) != 2:
        raise GraphError("edge list: header must be 'n m'")
    n, m = head
    if len(edges) != m:
        raise GraphError(f"edge list: header announces {m} edges, found {len(edges)}")
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge list: bad edge line {e}")
    return Graph.from_edges(n, edges)


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    return "\n".join([f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"
