"""Unique k-DIS of a forest (k >= 2) by repeated leaf stripping.

The working forest lives in flat arrays so the same compiled routine serves
single calls on million-vertex trees and the exhaustive sweep over all
labelled trees.  Each working vertex carries ``origin`` (the input vertex it
stands for); a vertex that must join the k-DIS but still has several
neighbours is split into one pendant copy per remaining edge.
"""
from __future__ import annotations

import heapq

import numpy as np
from numba import njit

from .graph import Graph

FOUND = 1
NONE = 0


class NotAForestError(ValueError):
    def __init__(self, cycle: list[int]):
        super().__init__(f"input graph is not a forest; cycle through vertices {cycle}")
        self.cycle = cycle


@njit(cache=True)
def _other(ea, eb, e, v):
    return eb[e] if ea[e] == v else ea[e]


@njit(cache=True)
def _sole_neighbor(v, n, start, inc, copy_edge, alive, ea, eb):
    if v >= n:
        e = copy_edge[v - n]
        return _other(ea, eb, e, v)
    for i in range(start[v], start[v + 1]):
        e = inc[i]
        if alive[e] and (ea[e] == v or eb[e] == v):
            return _other(ea, eb, e, v)
    return -1


@njit(cache=True)
def _solve_kernel(n, ea_in, eb_in, k, in_d):
    """Run the leaf-stripping algorithm; fills ``in_d`` and returns FOUND or NONE.

    ``in_d`` must be a zeroed bool array of length ``n``.
    """
    m = ea_in.shape[0]
    ea = ea_in.copy()
    eb = eb_in.copy()
    cap = n + 2 * m
    deg = np.zeros(cap, np.int64)
    leafcount = np.zeros(cap, np.int64)
    origin = np.empty(cap, np.int64)
    dead = np.zeros(cap, np.bool_)
    is_copy = np.zeros(cap, np.bool_)
    copy_edge = np.empty(2 * m + 1, np.int64)
    alive = np.ones(m, np.bool_)
    in_dprime = np.zeros(n, np.bool_)
    for v in range(n):
        origin[v] = v
    start = np.zeros(n + 1, np.int64)
    for e in range(m):
        start[ea[e] + 1] += 1
        start[eb[e] + 1] += 1
    for v in range(n):
        start[v + 1] += start[v]
    fill = start[:n].copy()
    inc = np.empty(2 * m, np.int64)
    for e in range(m):
        inc[fill[ea[e]]] = e
        fill[ea[e]] += 1
        inc[fill[eb[e]]] = e
        fill[eb[e]] += 1
    for e in range(m):
        deg[ea[e]] += 1
        deg[eb[e]] += 1
    for v in range(n):
        if deg[v] == 1:
            u = _sole_neighbor(v, n, start, inc, copy_edge, alive, ea, eb)
            leafcount[u] += 1
    n_work = n
    live_edges = m

    heap = [np.int64(0)]
    heap.pop()
    for v in range(n):
        if deg[v] == 0:
            in_d[v] = True
            dead[v] = True
        elif deg[v] >= 2 and leafcount[v] >= 1 and deg[v] - leafcount[v] <= 1:
            heap.append(np.int64(v))
    heapq.heapify(heap)

    while len(heap) > 0:
        q = heapq.heappop(heap)
        if dead[q] or deg[q] < 2 or leafcount[q] < 1 or deg[q] - leafcount[q] > 1:
            continue
        nleaf = leafcount[q]
        nonleaf = deg[q] - nleaf
        if not (nleaf >= k or (nleaf == k - 1 and nonleaf == 1)):
            return NONE
        in_dprime[origin[q]] = True
        w = -1
        # walk q's alive edges: leaves go to D, the single non-leaf neighbour is w
        if q >= n:
            lo, hi = 0, 1
        else:
            lo, hi = start[q], start[q + 1]
        for i in range(lo, hi):
            e = copy_edge[q - n] if q >= n else inc[i]
            if not alive[e] or (ea[e] != q and eb[e] != q):
                continue
            x = _other(ea, eb, e, q)
            alive[e] = False
            live_edges -= 1
            if deg[x] == 1:
                in_d[origin[x]] = True
                dead[x] = True
                deg[x] = 0
            else:
                w = x
                deg[w] -= 1
        dead[q] = True
        deg[q] = 0
        if w < 0:
            continue
        if deg[w] == 0:
            in_d[origin[w]] = True
            dead[w] = True
            continue
        if nleaf >= k or deg[w] == 1:
            if deg[w] == 1:
                # w just became a leaf
                y = _sole_neighbor(w, n, start, inc, copy_edge, alive, ea, eb)
                leafcount[y] += 1
                heapq.heappush(heap, y)
            else:
                heapq.heappush(heap, w)
            continue
        # w must join D: hang one pendant copy of w on each remaining edge
        lo, hi = (0, 1) if w >= n else (start[w], start[w + 1])
        for i in range(lo, hi):
            e = copy_edge[w - n] if w >= n else inc[i]
            if not alive[e] or (ea[e] != w and eb[e] != w):
                continue
            c = n_work
            n_work += 1
            origin[c] = origin[w]
            is_copy[c] = True
            copy_edge[c - n] = e
            if ea[e] == w:
                ea[e] = c
            else:
                eb[e] = c
            deg[c] = 1
            y = _other(ea, eb, e, c)
            leafcount[y] += 1
            heapq.heappush(heap, y)
        dead[w] = True
        deg[w] = 0

    if live_edges > 0:
        # only K2 components are left, and K2 has no k-DIS for k >= 2
        return NONE
    for v in range(n_work):
        if is_copy[v] and not dead[v]:
            raise AssertionError("a pendant copy survived the sweep")
    for v in range(n):
        if in_d[v] and in_dprime[v]:
            raise AssertionError("a vertex landed in both D and D'")
    return FOUND


def _find_cycle(n: int, edges: np.ndarray) -> list[int] | None:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj: dict[int, list[int]] = {}
    for u, v in edges.tolist():
        ru, rv = find(u), find(v)
        if ru == rv:
            # the tree path from v to u closes the cycle
            prev = {v: None}
            stack = [v]
            while stack:
                x = stack.pop()
                if x == u:
                    break
                for y in adj.get(x, ()):
                    if y not in prev:
                        prev[y] = x
                        stack.append(y)
            cyc = [u]
            while prev[cyc[-1]] is not None:
                cyc.append(prev[cyc[-1]])
            return cyc
        parent[ru] = rv
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return None


def _as_edge_array(forest, edges) -> tuple[int, np.ndarray]:
    if isinstance(forest, Graph):
        n = forest.n
        arr = np.array(forest.edges(), dtype=np.int64).reshape(-1, 2)
    else:
        n = int(forest)
        arr = np.asarray(edges if edges is not None else [], dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise ValueError("edge endpoint out of range")
        if np.any(arr[:, 0] == arr[:, 1]):
            raise ValueError("self-loop in forest input")
    return n, arr


def is_kdis_arrays(n: int, edges: np.ndarray, in_d: np.ndarray, k: int) -> bool:
    """Edge-array version of the k-DIS test, for forests too large for bitset rows."""
    a, b = edges[:, 0], edges[:, 1]
    if np.any(in_d[a] & in_d[b]):
        return False
    hits = np.bincount(a[in_d[b]], minlength=n) + np.bincount(b[in_d[a]], minlength=n)
    return bool(np.all(in_d | (hits >= k)))


def solve_tree_kdis(forest: Graph | int, k: int, edges=None) -> frozenset[int] | None:
    """Return the unique k-DIS of a forest, or ``None`` when there is none.

    ``forest`` is a :class:`Graph`, or a vertex count together with an
    ``edges`` array of shape ``(m, 2)`` for inputs too large for a Graph.
    """
    if k == 1:
        raise ValueError(
            "k=1 asks for maximal independent sets, which are not unique in trees; "
            "use enumerate_kdis(G, 1) instead"
        )
    if k < 2:
        raise ValueError("k must be >= 2")
    n, arr = _as_edge_array(forest, edges)
    cyc = _find_cycle(n, arr)
    if cyc is not None:
        raise NotAForestError(cyc)
    in_d = np.zeros(n, dtype=np.bool_)
    status = _solve_kernel(n, arr[:, 0].copy(), arr[:, 1].copy(), k, in_d)
    if status == NONE:
        return None
    if not is_kdis_arrays(n, arr, in_d, k):
        raise AssertionError("tree solver returned a set that is not a k-DIS")
    return frozenset(np.flatnonzero(in_d).tolist())
