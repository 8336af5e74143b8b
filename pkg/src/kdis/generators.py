"""Graph families and combinators.

Labeling conventions (golden values depend on them):

* ``cartesian_product(G, H)``: vertex ``(a, x)`` gets index ``a * |V(H)| + x``.
* ``disjoint_union(G, H)``: vertices of ``H`` are shifted by ``|V(G)|``.
* ``cone(G)``: the apex is the last vertex, index ``n``.
* ``complete_multipartite``/``turan``: parts are consecutive index blocks.
* ``kneser(n, t)``: ``t``-subsets in colexicographic order.
"""
from __future__ import annotations

import heapq
import re
from itertools import combinations
from math import comb
from typing import Sequence

from .graph import Graph, GraphError, bits

COMBINATOR_CAP = 256


def _positive(name: str, *values: int) -> None:
    for x in values:
        if not isinstance(x, int) or x < 1:
            raise GraphError(f"{name}: parameters must be positive integers, got {values}")


def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError("empty: n must be >= 0")
    return Graph.empty(n)


def complete(n: int) -> Graph:
    _positive("complete", n)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path(n: int) -> Graph:
    _positive("path", n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if not isinstance(n, int) or n < 3:
        raise GraphError("cycle: n must be >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(t: int) -> Graph:
    """K_{1,t}: centre 0 and leaves 1..t."""
    _positive("star", t)
    return Graph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


def complete_multipartite(*sizes: int) -> Graph:
    _positive("complete_multipartite", *sizes)
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        block = ((1 << s) - 1) << start
        rows.extend([full & ~block] * s)
        start += s
    return Graph(n, rows)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with balanced parts (larger parts first)."""
    _positive("turan", n, r)
    if r > n:
        raise GraphError("turan: r must not exceed n")
    q, extra = divmod(n, r)
    return complete_multipartite(*([q + 1] * extra + [q] * (r - extra)))


def kneser_subsets(n: int, t: int) -> list[tuple[int, ...]]:
    """The vertex labels of ``kneser(n, t)``, in colexicographic order."""
    return sorted(combinations(range(n), t), key=lambda s: s[::-1])


def kneser(n: int, t: int) -> Graph:
    _positive("kneser", n, t)
    if not 2 * t < n:
        raise GraphError("kneser: requires t < n/2")
    subsets = kneser_subsets(n, t)
    masks = [sum(1 << i for i in s) for s in subsets]
    rows = [sum(1 << j for j, b in enumerate(masks) if not a & b) for a in masks]
    assert len(rows) == comb(n, t)
    return Graph(len(rows), rows)


def petersen() -> Graph:
    return kneser(5, 2)


def _cap(n: int, what: str) -> None:
    if n > COMBINATOR_CAP:
        raise GraphError(f"{what}: result would have {n} vertices (cap {COMBINATOR_CAP})")


def cartesian_product(G: Graph, H: Graph) -> Graph:
    if G.n == 0 or H.n == 0:
        raise GraphError("cartesian_product: both factors must be nonempty")
    m = H.n
    _cap(G.n * m, "cartesian_product")
    rows = []
    for a in range(G.n):
        for x in range(m):
            row = H.adj[x] << (a * m)
            for b in bits(G.adj[a]):
                row |= 1 << (b * m + x)
            rows.append(row)
    return Graph(G.n * m, rows)


def power(G: Graph, t: int) -> Graph:
    """G□G□...□G with ``t`` factors; digit ``i`` of the mixed-radix index is factor ``i``."""
    _positive("power", t)
    out = G
    for _ in range(t - 1):
        out = cartesian_product(G, out)
    return out


def disjoint_union(G: Graph, H: Graph) -> Graph:
    _cap(G.n + H.n, "disjoint_union")
    return Graph(G.n + H.n, list(G.adj) + [row << G.n for row in H.adj])


def copies(t: int, G: Graph) -> Graph:
    if t < 0:
        raise GraphError("copies: t must be >= 0")
    out = Graph.empty(0)
    for _ in range(t):
        out = disjoint_union(out, G)
    return out


def cone(G: Graph) -> Graph:
    _cap(G.n + 1, "cone")
    apex = 1 << G.n
    return Graph(G.n + 1, [row | apex for row in G.adj] + [G.all_vertices])


def product_split(n: int) -> tuple[int, int, int]:
    """``(a, b, pad)`` with ``9a + 16b + pad = n``, ``b <= 8``, maximising ``6**a * 24**b``.

    For ``n >= 120`` the pad is zero and the split is the unique one with
    ``b <= 8``.
    """
    if n < 0:
        raise GraphError("n must be >= 0")
    best = None
    for b in range(min(8, n // 16) + 1):
        a = (n - 16 * b) // 9
        key = (6**a * 24**b, -b)
        if best is None or key > best[0]:
            best = (key, (a, b, n - 9 * a - 16 * b))
    return best[1]


def product_construction(n: int) -> Graph:
    """``a`` copies of K3xK3, then ``b`` copies of K4xK4, then isolated vertices (see :func:`product_split`).

    Isolated vertices lie in every k-DIS, so the padding leaves counts unchanged.
    """
    a, b, pad = product_split(n)
    G = disjoint_union(copies(a, cartesian_product(complete(3), complete(3))),
                       copies(b, cartesian_product(complete(4), complete(4))))
    return disjoint_union(G, empty(pad))


def pruefer_tree(seq: Sequence[int], n: int | None = None) -> Graph:
    """Decode a Prüfer sequence into a labelled tree on ``len(seq) + 2`` vertices."""
    if n is None:
        n = len(seq) + 2
    if n < 2 or len(seq) != n - 2:
        raise GraphError(f"pruefer_tree: need n >= 2 and a sequence of length n-2 (n={n})")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise GraphError(f"pruefer_tree: label {x} outside 0..{n - 1}")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def construction1_assemble(
    stars: Sequence[int],
    identifications: Sequence[tuple[tuple[int, int], tuple[int, int]]] = (),
    center_edges: Sequence[tuple[int, int]] = (),
    k: int = 1,
) -> tuple[Graph, tuple[int, ...]]:
    """Glue stars along leaves and join centres; the leaves form a k-DIS.

    Star ``i`` has ``stars[i] >= k`` leaves addressed as ``(i, 0..stars[i]-1)``.
    Each identification merges two leaves of distinct stars; ``center_edges``
    join distinct centres.  Centres get indices ``0..len(stars)-1`` and the
    merged leaf classes follow in order of first appearance.  Returns the graph
    and the leaf vertex tuple.
    """
    from .search import is_kdis

    for t in stars:
        if t < k:
            raise GraphError(f"construction1: star with {t} leaves is smaller than k={k}")
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for x, y in identifications:
        for i, a in (x, y):
            if not (0 <= i < len(stars) and 0 <= a < stars[i]):
                raise GraphError(f"construction1: no leaf {(i, a)}")
        if x[0] == y[0]:
            raise GraphError("construction1: identifications must merge leaves of distinct stars")
        rx, ry = find(tuple(x)), find(tuple(y))
        if rx != ry:
            parent[ry] = rx
    classes: dict[tuple[int, int], int] = {}
    members: dict[int, set[int]] = {}
    s = len(stars)
    edges = set()
    for i, t in enumerate(stars):
        for a in range(t):
            r = find((i, a))
            idx = classes.setdefault(r, s + len(classes))
            owners = members.setdefault(idx, set())
            if i in owners:
                raise GraphError("construction1: a merged leaf class contains two leaves of one star")
            owners.add(i)
            edges.add((i, idx))
    for i, j in center_edges:
        if i == j or not (0 <= i < s and 0 <= j < s):
            raise GraphError(f"construction1: bad centre edge {(i, j)}")
        edges.add((min(i, j), max(i, j)))
    G = Graph.from_edges(s + len(classes), sorted(edges))
    leaves = tuple(range(s, G.n))
    if not is_kdis(G, leaves, k):
        raise AssertionError("construction1 produced a leaf set that is not a k-DIS")
    return G, leaves


# expression language --------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[str | int]:
    out: list[str | int] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(int(num))
        elif name is not None:
            out.append(name)
        elif sym is not None and not sym.isspace():
            out.append(sym)
        pos = m.end()
    return out


def _shorthand(name: str) -> Graph | None:
    m = re.fullmatch(r"([KPC])(\d+)", name)
    if not m:
        return None
    kind, n = m.group(1), int(m.group(2))
    return {"K": complete, "P": path, "C": cycle}[kind](n)


_FAMILIES = {
    "K": complete,
    "complete": complete,
    "Kb": complete_multipartite,
    "multipartite": complete_multipartite,
    "turan": turan,
    "kneser": kneser,
    "path": path,
    "cycle": cycle,
    "star": star,
    "empty": empty,
}
_COMBINATORS = {
    "cart": cartesian_product,
    "union": disjoint_union,
    "cone": cone,
}


def parse_graph_expr(text: str) -> Graph:
    """Build a graph from expressions like ``cart(K3,K3)``, ``pow(K3,4)`` or ``union(Kb(2,2),cone(C5))``.

    Also accepted: ``copies(t, G)``, ``petersen``, and the shorthands
    ``Kn``, ``Pn``, ``Cn``.  Whitespace is ignored.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def expect(tok):
        nonlocal pos
        if peek() != tok:
            raise GraphError(f"graph expression {text!r}: expected {tok!r} at token {pos}")
        pos += 1

    def arg():
        nonlocal pos
        tok = peek()
        if isinstance(tok, int):
            pos += 1
            return tok
        return expr()

    def expr() -> Graph:
        nonlocal pos
        tok = peek()
        if not isinstance(tok, str) or not (tok[0].isalpha() or tok[0] == "_"):
            raise GraphError(f"graph expression {text!r}: unexpected token {tok!r}")
        pos += 1
        if peek() != "(":
            if tok == "petersen":
                return petersen()
            g = _shorthand(tok)
            if g is None:
                raise GraphError(f"graph expression {text!r}: unknown graph {tok!r}")
            return g
        expect("(")
        args = [arg()]
        while peek() == ",":
            pos += 1
            args.append(arg())
        expect(")")
        try:
            if tok in _FAMILIES:
                if not all(isinstance(a, int) for a in args):
                    raise GraphError(f"{tok} takes integer arguments")
                return _FAMILIES[tok](*args)
            if tok in _COMBINATORS:
                if not all(isinstance(a, Graph) for a in args):
                    raise GraphError(f"{tok} takes graph arguments")
                return _COMBINATORS[tok](*args)
            if tok == "pow" and len(args) == 2:
                return power(args[0], args[1])
            if tok == "copies" and len(args) == 2:
                return copies(args[0], args[1])
        except TypeError as exc:
            raise GraphError(f"graph expression {text!r}: {exc}") from None
        raise GraphError(f"graph expression {text!r}: unknown constructor {tok!r}")

    g = expr()
    if pos != len(tokens):
        raise GraphError(f"graph expression {text!r}: trailing input at token {pos}")
    return g
