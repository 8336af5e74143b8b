"""Reference computations written independently of the package internals."""
from __future__ import annotations

import random
from itertools import combinations, product
from math import comb

import networkx as nx

from kdis.graph import Graph


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def naive_count(n: int, edges, k: int) -> int:
    """Every subset, checked against plain neighbour lists."""
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    total = 0
    for r in range(n + 1):
        for D in combinations(range(n), r):
            Ds = set(D)
            if any(nbrs[v] & Ds for v in D):
                continue
            if all(len(nbrs[v] & Ds) >= k for v in range(n) if v not in Ds):
                total += 1
    return total


def maximal_independent_sets(G: Graph) -> int:
    """Maximal independent sets are the maximal cliques of the complement."""
    if G.n == 0:
        return 1
    return sum(1 for _ in nx.find_cliques(nx.complement(G.to_networkx())))


def moon_moser(n: int) -> int:
    r = n % 3
    if r == 0:
        return 3 ** (n // 3)
    if r == 1:
        return 4 * 3 ** ((n - 4) // 3)
    return 2 * 3 ** ((n - 2) // 3)


def tree_mis_max(n: int) -> int:
    """Largest number of maximal independent sets in an n-vertex tree, n >= 2."""
    if n % 2 == 0:
        return 2 ** (n // 2 - 1) + 1
    return 2 ** ((n - 1) // 2)


def exact_expectation(n: int, t: int, k: int, p: float) -> float:
    """Sum over every labelled graph of P(G) times its number of size-t k-DISes."""
    pairs = list(combinations(range(n), 2))
    total = 0.0
    for mask in range(1 << len(pairs)):
        edges = [e for i, e in enumerate(pairs) if mask >> i & 1]
        w = p ** len(edges) * (1 - p) ** (len(pairs) - len(edges))
        if w == 0:
            continue
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        c = 0
        for D in combinations(range(n), t):
            Ds = set(D)
            if any(nbrs[v] & Ds for v in D):
                continue
            if all(len(nbrs[v] & Ds) >= k for v in range(n) if v not in Ds):
                c += 1
        total += w * c
    return total


def gf_mul(a: int, b: int, p: int, modulus: list[int]) -> int:
    """Schoolbook product of digit vectors reduced by a monic modulus (low degree first)."""
    m = len(modulus) - 1
    da = [(a // p**i) % p for i in range(m)]
    db = [(b // p**i) % p for i in range(m)]
    prod = [0] * (2 * m)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] += x * y
    for d in range(2 * m - 1, m - 1, -1):
        c = prod[d] % p
        for i in range(m + 1):
            prod[d - m + i] -= c * modulus[i]
    return sum((prod[i] % p) * p**i for i in range(m))


def is_irreducible(modulus: list[int], p: int) -> bool:
    """No root and, for degree 4, no monic quadratic factor (enough for degree <= 4)."""
    m = len(modulus) - 1
    if m == 1:
        return True
    for x in range(p):
        if sum(c * x**i for i, c in enumerate(modulus)) % p == 0:
            return False
    if m == 4:
        for a, b in product(range(p), repeat=2):
            # long division by x^2 + a x + b
            r = list(modulus)
            for d in range(4, 1, -1):
                c = r[d] % p
                r[d] = 0
                r[d - 1] -= c * a
                r[d - 2] -= c * b
            if all(x % p == 0 for x in r):
                return False
    return True


def mds_subsets(k: int) -> int:
    """Codes of size 3^(k-1) in F3^k with minimum distance >= 2, by subset search (k <= 2)."""
    words = list(product(range(3), repeat=k))
    size = 3 ** (k - 1)
    good = 0
    for C in combinations(words, size):
        if all(sum(a != b for a, b in zip(u, v)) >= 2 for u, v in combinations(C, 2)):
            good += 1
    return good
