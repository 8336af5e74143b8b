"""Ternary (k, 3^(k-1), 2) MDS codes and their correspondence with k-DISes of (K3)^k.

A vertex of ``power(complete(3), k)`` with index ``x`` is the word of base-3
digits of ``x``, most significant digit first, so the digit of factor ``i`` is
coordinate ``i``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .generators import complete, power
from .graph import Graph
from .search import count_kdis, enumerate_kdis

Word = tuple[int, ...]


@dataclass(frozen=True)
class TernaryCode:
    k: int
    words: frozenset[Word]

    def __post_init__(self):
        for w in self.words:
            if len(w) != self.k or any(c not in (0, 1, 2) for c in w):
                raise ValueError(f"word {w} is not a length-{self.k} ternary vector")

    @classmethod
    def of(cls, words: Iterable, k: int | None = None) -> "TernaryCode":
        ws = frozenset(tuple(int(c) for c in w) for w in words)
        if k is None:
            k = len(next(iter(ws)))
        return cls(k, ws)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)

    def __len__(self):
        return len(self.words)

    def translate(self, shift: Word) -> "TernaryCode":
        return TernaryCode(self.k, frozenset(tuple((a + b) % 3 for a, b in zip(w, shift)) for w in self.words))

    def format(self) -> str:
        return "".join("".join(map(str, w)) + "\n" for w in self.sorted_words())


def hamming(a: Word, b: Word) -> int:
    return sum(x != y for x, y in zip(a, b))


def min_distance(C: TernaryCode) -> float:
    """Minimum Hamming distance; ``math.inf`` for a single word.

    The distance is the least ``d`` such that erasing some ``d`` coordinates
    makes two words collide.
    """
    if not C.words:
        raise ValueError("min_distance of an empty code")
    if len(C.words) == 1:
        return math.inf
    for d in range(1, C.k + 1):
        for erased in combinations(range(C.k), d):
            kept = [i for i in range(C.k) if i not in erased]
            if len({tuple(w[i] for i in kept) for w in C.words}) < len(C.words):
                return d
    raise AssertionError("unreachable: distinct words collide once every coordinate is erased")


def is_mds2(C: TernaryCode, k: int | None = None) -> bool:
    k = C.k if k is None else k
    return C.k == k and len(C.words) == 3 ** (k - 1) and min_distance(C) >= 2


def _check_k(k: int, hi: int) -> None:
    if not 1 <= k <= hi:
        raise ValueError(f"k must lie in 1..{hi}, got {k}")


def kdis_to_code(D: Iterable[int], k: int) -> TernaryCode:
    words = []
    for x in D:
        digits = []
        for _ in range(k):
            x, r = divmod(x, 3)
            digits.append(r)
        if x:
            raise ValueError(f"vertex index out of range for (K3)^{k}")
        words.append(tuple(reversed(digits)))
    return TernaryCode(k, frozenset(words))


def code_to_kdis(C: TernaryCode) -> tuple[int, ...]:
    out = []
    for w in C.words:
        x = 0
        for c in w:
            x = 3 * x + c
        out.append(x)
    return tuple(sorted(out))


def k3_power(k: int) -> Graph:
    return power(complete(3), k)


def mds_codes_via_kdis(k: int) -> list[TernaryCode]:
    _check_k(k, 4)
    return [kdis_to_code(D, k) for D in enumerate_kdis(k3_power(k), k)]


def count_mds_via_kdis(k: int) -> int:
    _check_k(k, 4)
    return count_kdis(k3_power(k), k)


def mds_codes_bruteforce(k: int) -> list[TernaryCode]:
    """Graphs ``{(x, f(x))}`` of maps ``f: F3^(k-1) -> F3`` that differ on every Hamming-adjacent pair."""
    _check_k(k, 3)
    domain = list(product(range(3), repeat=k - 1))
    pos = {x: i for i, x in enumerate(domain)}
    adjacent = [(pos[x], pos[y]) for x in domain for y in domain if x < y and hamming(x, y) == 1]
    codes = []
    for values in product(range(3), repeat=len(domain)):
        if all(values[i] != values[j] for i, j in adjacent):
            codes.append(TernaryCode(k, frozenset(x + (v,) for x, v in zip(domain, values))))
    return codes


def count_mds_bruteforce(k: int) -> int:
    return len(mds_codes_bruteforce(k))


def kernel_code(functional: Word) -> TernaryCode:
    k = len(functional)
    words = frozenset(w for w in product(range(3), repeat=k) if sum(a * x for a, x in zip(functional, w)) % 3 == 0)
    return TernaryCode(k, words)


def linear_mds_codes(k: int) -> list[TernaryCode]:
    """Kernels of the functionals with all coefficients nonzero, one per scalar class (leading 1)."""
    _check_k(k, 8)
    codes = []
    for tail in product((1, 2), repeat=k - 1):
        C = kernel_code((1,) + tail)
        if not is_mds2(C, k):
            raise AssertionError(f"kernel of {(1,) + tail} is not MDS")
        codes.append(C)
    return codes


def count_linear_mds_q3(k: int) -> int:
    return len(linear_mds_codes(k))


def is_linear(C: TernaryCode) -> bool:
    ws = C.words
    zero = (0,) * C.k
    if zero not in ws:
        return False
    return all(tuple((a + b) % 3 for a, b in zip(u, v)) in ws for u in ws for v in ws)


def is_translate_of_linear(C: TernaryCode) -> bool:
    some = next(iter(C.words))
    return is_linear(C.translate(tuple((-c) % 3 for c in some)))


def residual_graph(C: TernaryCode) -> Graph:
    """Words with nonzero first coordinate, truncated, joined at Hamming distance 1."""
    tails = sorted(w[1:] for w in C.words if w[0] != 0)
    edges = [(i, j) for i, j in combinations(range(len(tails)), 2) if hamming(tails[i], tails[j]) == 1]
    return Graph.from_edges(len(tails), edges)


def parse_code(text: str) -> TernaryCode:
    words = [ln.strip() for ln in text.splitlines() if ln.strip()]
    return TernaryCode.of(([int(c) for c in w] for w in words))
