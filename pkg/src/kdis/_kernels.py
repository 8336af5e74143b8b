"""Compiled inner loops for the exhaustive searches (graphs of at most 62 vertices).

Graphs here are ``int64`` arrays of adjacency bitmasks.  Graph indices follow
graph6 bit order: the pair ``(i, j)`` with ``i < j`` is bit ``j*(j-1)/2 + i``.
"""
from __future__ import annotations

import numpy as np
from numba import njit

from .trees import FOUND, _solve_kernel


@njit(cache=True)
def popcount64(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56 & 0xFF


@njit(cache=True)
def count_kdis_small(adj, n, k):
    """Return ``(count, first_mask)`` over all k-DISes, enumerating independent sets depth-first."""
    count = 0
    first = -1
    st_i = np.empty(2 * n + 2, np.int64)
    st_d = np.empty(2 * n + 2, np.int64)
    st_f = np.empty(2 * n + 2, np.int64)
    top = 0
    st_i[0] = 0
    st_d[0] = 0
    st_f[0] = 0
    top = 1
    while top > 0:
        top -= 1
        i = st_i[top]
        D = st_d[top]
        F = st_f[top]
        if i == n:
            ok = True
            for v in range(n):
                if not (D >> v) & 1 and popcount64(adj[v] & D) < k:
                    ok = False
                    break
            if ok:
                if first < 0:
                    first = D
                count += 1
            continue
        # push "exclude" first so "include" is explored first
        st_i[top] = i + 1
        st_d[top] = D
        st_f[top] = F
        top += 1
        if not (F >> i) & 1:
            st_i[top] = i + 1
            st_d[top] = D | (1 << i)
            st_f[top] = F | adj[i]
            top += 1
    return count, first


@njit(cache=True)
def decode_index(g, n, adj):
    """Fill ``adj`` with the graph whose graph6-order edge bits are ``g``."""
    for v in range(n):
        adj[v] = 0
    p = 0
    for j in range(1, n):
        for i in range(j):
            if (g >> p) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            p += 1


@njit(cache=True)
def scan_graph_block(n, k, h_lo, h_hi, cap, wit_out):
    """Maximum k-DIS count over labelled graphs on ``n`` vertices in a block.

    The block is all graphs whose restriction to vertices ``0..n-2`` has index
    in ``[h_lo, h_hi)``; vertex ``n-1`` ranges over every neighbourhood ``S``.
    For a fixed base graph ``H`` the k-DISes of ``H + v`` split into
      * k-DISes ``D`` of ``H`` with ``|S & D| >= k`` (``v`` outside), and
      * ``D | {v}`` where ``D`` is independent in ``H``, misses ``S``, every
        vertex outside ``D`` has at least ``k-1`` neighbours in ``D``, and the
        vertices with exactly ``k-1`` all lie in ``S``.
    So ``H`` is analysed once and each of its ``2**(n-1)`` extensions costs a
    few mask tests.  Returns ``(best, n_witnesses)``; witnesses are the first
    ``cap`` graph indices attaining ``best`` in scan order ``(h, S)``.
    """
    m = n - 1
    low_bits = m * (m - 1) // 2
    n_sub = 1 << m
    pc = np.empty(n_sub, np.int64)
    for x in range(n_sub):
        pc[x] = popcount64(x)
    adj = np.zeros(max(m, 1), np.int64)
    kd = np.empty(n_sub, np.int64)
    nd = np.empty(n_sub, np.int64)
    nf = np.empty(n_sub, np.int64)
    best = -1
    nwit = 0
    for h in range(h_lo, h_hi):
        decode_index(h, m, adj)
        nk = 0
        nn = 0
        for D in range(n_sub):
            indep = True
            for v in range(m):
                if (D >> v) & 1 and adj[v] & D:
                    indep = False
                    break
            if not indep:
                continue
            F = 0
            bad = False
            allk = True
            for u in range(m):
                if not (D >> u) & 1:
                    c = pc[adj[u] & D]
                    if c < k:
                        allk = False
                        if c == k - 1:
                            F |= 1 << u
                        else:
                            bad = True
                            break
            if bad:
                continue
            if allk:
                kd[nk] = D
                nk += 1
            nd[nn] = D
            nf[nn] = F
            nn += 1
        if nn == 0 and best > 0:
            continue
        for S in range(n_sub):
            cnt = 0
            for a in range(nk):
                if pc[S & kd[a]] >= k:
                    cnt += 1
            notS = ~S
            for b in range(nn):
                if (nd[b] & S) == 0 and (nf[b] & notS) == 0:
                    cnt += 1
            if cnt > best:
                best = cnt
                nwit = 0
            if cnt == best and nwit < cap:
                wit_out[nwit] = h | (S << low_bits)
                nwit += 1
    return best, nwit


@njit(cache=True)
def pruefer_decode(seq, n, ea, eb):
    """Standard Prüfer decoding into edge arrays of length ``n-1``."""
    degree = np.ones(n, np.int64)
    for x in seq:
        degree[x] += 1
    e = 0
    for x in seq:
        leaf = 0
        while degree[leaf] != 1:
            leaf += 1
        ea[e] = leaf
        eb[e] = x
        e += 1
        degree[leaf] = 0
        degree[x] -= 1
    u = -1
    for v in range(n):
        if degree[v] == 1:
            if u < 0:
                u = v
            else:
                ea[e] = u
                eb[e] = v


@njit(cache=True)
def sweep_trees(n, k, check_solver, cap, wit_out):
    """Scan every labelled tree on ``n`` vertices.

    Returns ``(best, n_witnesses, trees, trees_with_kdis, disagreements)``.
    With ``check_solver`` set, each tree's enumeration result is compared with
    the leaf-stripping solver: a disagreement is any tree where the solver's
    answer differs from the enumerated set, or where more than one k-DIS exists.
    """
    total = 1
    for _ in range(n - 2):
        total *= n
    seq = np.zeros(max(n - 2, 0), np.int64)
    ea = np.empty(n - 1, np.int64)
    eb = np.empty(n - 1, np.int64)
    adj = np.zeros(n, np.int64)
    in_d = np.zeros(n, np.bool_)
    best = -1
    nwit = 0
    with_kdis = 0
    bad = 0
    for code in range(total):
        c = code
        for i in range(n - 2):
            seq[n - 3 - i] = c % n
            c //= n
        pruefer_decode(seq, n, ea, eb)
        for v in range(n):
            adj[v] = 0
        for e in range(n - 1):
            adj[ea[e]] |= 1 << eb[e]
            adj[eb[e]] |= 1 << ea[e]
        cnt, first = count_kdis_small(adj, n, k)
        if cnt > 0:
            with_kdis += 1
        if check_solver:
            if cnt > 1:
                bad += 1
            else:
                for v in range(n):
                    in_d[v] = False
                status = _solve_kernel(n, ea, eb, k, in_d)
                if cnt == 0:
                    if status == FOUND:
                        bad += 1
                else:
                    mask = 0
                    for v in range(n):
                        if in_d[v]:
                            mask |= 1 << v
                    if status != FOUND or mask != first:
                        bad += 1
        if cnt > best:
            best = cnt
            nwit = 0
        if cnt == best and nwit < cap:
            wit_out[nwit] = code
            nwit += 1
    return best, nwit, total, with_kdis, bad


def adjacency_array(G) -> np.ndarray:
    if G.n > 62:
        raise ValueError("compiled kernels handle at most 62 vertices")
    return np.array(G.adj, dtype=np.int64)
