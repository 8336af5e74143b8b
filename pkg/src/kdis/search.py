"""Decision, enumeration and counting of k-dominating independent sets (k-DISes)."""
from __future__ import annotations

from typing import Callable, Iterable

import numpy as np

from .graph import Graph, GraphError, bits, popcount, to_mask

BRUTEFORCE_MAX_N = 25


def _valid_mask(G: Graph, S) -> int:
    m = to_mask(S)
    if m < 0 or m >> G.n:
        raise GraphError(f"vertex set {S!r} is not a subset of 0..{G.n - 1}")
    return m


def is_independent(G: Graph, S) -> bool:
    m = _valid_mask(G, S)
    return all(not (G.adj[v] & m) for v in bits(m))


def is_k_dominating(G: Graph, S, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    m = _valid_mask(G, S)
    return all(popcount(G.adj[v] & m) >= k for v in bits(G.all_vertices & ~m))


def is_kdis(G: Graph, S, k: int) -> bool:
    return is_independent(G, S) and is_k_dominating(G, S, k)


def _branch_and_bound(G: Graph, k: int, emit: Callable[[int], None]) -> None:
    """Call ``emit(mask)`` once per k-DIS of ``G``.

    A node is ``(D, X, U)``: vertices chosen, excluded, undecided.  Invariant:
    no vertex of ``U`` has a neighbour in ``D`` (entering ``D`` pushes the
    neighbours into ``X``).  Propagation forces an undecided vertex into ``D``
    when it cannot collect ``k`` dominators, and forces all remaining candidate
    neighbours of an excluded vertex into ``D`` when its demand equals supply.
    """
    adj = G.adj

    def add(v, D, X, U):
        # v in U; returns the new triple or None on conflict
        nb = adj[v]
        return D | (1 << v), X | (nb & U), U & ~nb & ~(1 << v)

    def propagate(D, X, U):
        changed = True
        while changed:
            changed = False
            for x in bits(X):
                need = k - popcount(adj[x] & D)
                if need <= 0:
                    continue
                avail = adj[x] & U
                c = popcount(avail)
                if c < need:
                    return None
                if c == need:
                    for u in bits(avail):
                        if not U >> u & 1:
                            return None
                        D, X, U = add(u, D, X, U)
                    changed = True
            for u in bits(U):
                if U >> u & 1 and popcount(adj[u] & U) < k:
                    # u cannot be dominated from D (invariant) plus U: force it in
                    D, X, U = add(u, D, X, U)
                    changed = True
        return D, X, U

    def rec(D, X, U):
        state = propagate(D, X, U)
        if state is None:
            return
        D, X, U = state
        if not U:
            emit(D)
            return
        v = min(bits(U), key=lambda u: (popcount(adj[u] & U), u))
        rec(*add(v, D, X, U))
        rec(D, X | (1 << v), U & ~(1 << v))

    rec(0, 0, G.all_vertices)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError("k must be a positive integer")


def enumerate_kdis_masks(G: Graph, k: int) -> list[int]:
    _check_k(k)
    found: list[int] = []
    _branch_and_bound(G, k, found.append)
    found.sort(key=lambda m: list(bits(m)))
    return found


def enumerate_kdis(G: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-DISes of ``G`` as sorted vertex tuples, in lexicographic order."""
    return [tuple(bits(m)) for m in enumerate_kdis_masks(G, k)]


def count_kdis(G: Graph, k: int) -> int:
    _check_k(k)
    total = 0

    def emit(_):
        nonlocal total
        total += 1

    _branch_and_bound(G, k, emit)
    return total


def count_kdis_bruteforce(G: Graph, k: int) -> int:
    """Count k-DISes by testing all ``2**n`` subsets (vectorised, ``n <= 25``)."""
    _check_k(k)
    if G.n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_MAX_N}, got {G.n}")
    total = 0
    block = 1 << min(G.n, 20)
    for start in range(0, 1 << G.n, block):
        S = np.arange(start, start + block, dtype=np.uint32)
        ok = np.ones(block, dtype=bool)
        for v in range(G.n):
            inside = ((S >> np.uint32(v)) & np.uint32(1)).astype(bool)
            hits = np.bitwise_count(S & np.uint32(G.adj[v]))
            ok &= np.where(inside, hits == 0, hits >= k)
        total += int(ok.sum())
    return total


def max_independent_set_size(G: Graph) -> int:
    best = 0

    def rec(P, size):
        nonlocal best
        if size + popcount(P) <= best:
            return
        if not P:
            best = size
            return
        v = min(bits(P), key=lambda u: popcount(G.adj[u] & P))
        # some maximum independent set contains v or one of its neighbours in P
        for u in [v] + list(bits(G.adj[v] & P)):
            rec(P & ~G.adj[u] & ~(1 << u), size + 1)
            P &= ~(1 << u)

    rec(G.all_vertices, 0)
    return best


def star_witness(G: Graph, D: Iterable[int] | int, k: int) -> list[tuple[int, frozenset[int]]]:
    """Star decomposition certificate: for each ``v`` outside ``D``, the pair ``(v, N(v) & D)``.

    Deleting the edges inside ``V \\ D`` leaves exactly these stars glued along
    their leaves, each with at least ``k`` leaves.
    """
    m = _valid_mask(G, D)
    if not is_kdis(G, m, k):
        raise ValueError("the given set is not a k-DIS of the graph")
    return [(v, frozenset(bits(G.adj[v] & m))) for v in bits(G.all_vertices & ~m)]
