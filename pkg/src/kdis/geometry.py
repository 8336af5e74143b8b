"""PG(2, q) over small fields, point-line incidence graphs and hyperovals.

Field elements are integers ``0..q-1`` read as base-``p`` digit vectors of
polynomial coefficients (digit ``i`` is the coefficient of ``x**i``) modulo
the lexicographically least monic irreducible polynomial of degree ``m``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from typing import Iterable

import numpy as np

from .graph import Graph

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)


class GeometryError(ValueError):
    pass


def _prime_power(q: int) -> tuple[int, int]:
    for p in (2, 3, 5, 7, 11, 13):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r == 1:
                return p, m
    raise GeometryError(f"q={q} is not a supported prime power")


class FiniteField:
    """Addition, negation, multiplication and inverse tables of GF(q)."""

    def __init__(self, q: int):
        if q not in SUPPORTED_Q:
            raise GeometryError(f"unsupported field order {q}; choose one of {SUPPORTED_Q}")
        self.q = q
        self.p, self.m = _prime_power(q)
        digits = np.array([[(a // self.p**i) % self.p for i in range(self.m)] for a in range(q)])
        weights = self.p ** np.arange(self.m)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % self.p) @ weights
        self.neg = ((-digits) % self.p) @ weights
        for low in range(self.p**self.m):
            # monic x^m + (low read as digits); the quotient ring is a field iff no zero divisors
            poly = [(low // self.p**i) % self.p for i in range(self.m)]
            mul = self._mul_table(digits, poly)
            if self.m == 1 or not np.any(mul[1:, 1:] == 0):
                self.modulus = poly + [1]
                self.mul = mul
                break
        self.inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv[a] = int(np.flatnonzero(self.mul[a] == 1)[0])
        self._verify()

    def _mul_table(self, digits, poly) -> np.ndarray:
        p, m, q = self.p, self.m, self.q
        table = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                prod = [0] * (2 * m - 1)
                for i in range(m):
                    for j in range(m):
                        prod[i + j] += digits[a][i] * digits[b][j]
                for d in range(2 * m - 2, m - 1, -1):
                    c = prod[d] % p
                    if c:
                        # x^d = x^(d-m) * x^m = -x^(d-m) * poly
                        for i in range(m):
                            prod[d - m + i] -= c * poly[i]
                    prod[d] = 0
                table[a, b] = sum((prod[i] % p) * p**i for i in range(m))
        return table

    def _verify(self) -> None:
        q, A, M = self.q, self.add, self.mul
        e = np.arange(q)
        checks = {
            "additive identity": np.all(A[0] == e),
            "multiplicative identity": np.all(M[1] == e),
            "commutativity": np.all(A == A.T) and np.all(M == M.T),
            "additive inverses": np.all(A[e, self.neg] == 0),
            "multiplicative inverses": np.all(M[e[1:], self.inv[1:]] == 1),
            "additive associativity": np.all(A[A[:, :, None], e] == A[e[:, None, None], A[None, :, :]]),
            "multiplicative associativity": np.all(M[M[:, :, None], e] == M[e[:, None, None], M[None, :, :]]),
            "distributivity": np.all(
                M[e[:, None, None], A[None, :, :]] == A[M[:, :, None], M[:, None, :]]
            ),
        }
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            raise AssertionError(f"GF({q}) tables violate: {', '.join(failed)}")

    def dot(self, x, y) -> int:
        s = 0
        for a, b in zip(x, y):
            s = self.add[s, self.mul[a, b]]
        return int(s)


def _normalize(field_: FiniteField, v: tuple[int, int, int]) -> tuple[int, int, int]:
    for c in v:
        if c:
            inv = field_.inv[c]
            return tuple(int(field_.mul[inv, x]) for x in v)
    raise GeometryError("the zero vector is not a projective point")


@dataclass(frozen=True, eq=False)
class ProjectivePlane:
    """PG(2, q): normalised homogeneous points and dual line coordinates, sorted lexicographically."""

    q: int
    gf: FiniteField = dc_field(repr=False)
    points: tuple[tuple[int, int, int], ...] = dc_field(repr=False)
    lines: tuple[tuple[int, int, int], ...] = dc_field(repr=False)
    incidence: np.ndarray = dc_field(repr=False)  # [point, line] -> bool
    index: dict = dc_field(repr=False)  # normalised triple -> point (or line) index

    @property
    def order(self) -> int:
        return len(self.points)

    def point_index(self, v) -> int:
        return self.index[_normalize(self.gf, tuple(v))]

    def points_on(self, line: int) -> list[int]:
        return np.flatnonzero(self.incidence[:, line]).tolist()

    def lines_through(self, point: int) -> list[int]:
        return np.flatnonzero(self.incidence[point]).tolist()


@lru_cache(maxsize=None)
def build_pg2(q: int) -> ProjectivePlane:
    F = FiniteField(q)
    vecs = sorted({_normalize(F, v) for v in product(range(q), repeat=3) if any(v)})
    P = np.array(vecs)
    terms = [F.mul[P[:, i][:, None], P[:, i][None, :]] for i in range(3)]
    dot = F.add[F.add[terms[0], terms[1]], terms[2]]
    inc = dot == 0
    plane = ProjectivePlane(q, F, tuple(vecs), tuple(vecs), inc, {v: i for i, v in enumerate(vecs)})
    N = q * q + q + 1
    if len(vecs) != N:
        raise AssertionError(f"PG(2,{q}) has {len(vecs)} points, expected {N}")
    if not (np.all(inc.sum(axis=0) == q + 1) and np.all(inc.sum(axis=1) == q + 1)):
        raise AssertionError("incidence is not (q+1)-regular")
    common = inc.astype(np.int64) @ inc.T.astype(np.int64)
    if not np.all(common[~np.eye(N, dtype=bool)] == 1):
        raise AssertionError("two points do not span exactly one line")
    return plane


def incidence_graph(plane: ProjectivePlane) -> Graph:
    """Bipartite point-line graph: points ``0..N-1``, then lines ``N..2N-1``."""
    N = plane.order
    rows = [0] * (2 * N)
    for p, l in zip(*np.nonzero(plane.incidence)):
        rows[p] |= 1 << (N + int(l))
        rows[N + int(l)] |= 1 << int(p)
    return Graph(2 * N, rows)


def line_intersections(plane: ProjectivePlane, Q: Iterable[int]) -> np.ndarray:
    """Number of points of ``Q`` on each line."""
    sel = np.zeros(plane.order, dtype=bool)
    sel[list(Q)] = True
    return plane.incidence[sel].sum(axis=0)


def skew_lines(plane: ProjectivePlane, Q: Iterable[int]) -> frozenset[int]:
    return frozenset(np.flatnonzero(line_intersections(plane, Q) == 0).tolist())


def regular_hyperoval(plane: ProjectivePlane) -> frozenset[int]:
    """The conic ``{(1,t,t^2)} + {(0,0,1)}`` together with its nucleus ``(0,1,0)``."""
    q, F = plane.q, plane.gf
    if q % 2 or q <= 2:
        raise GeometryError("regular hyperovals are generated only for even q > 2")
    pts = [(1, t, int(F.mul[t, t])) for t in range(q)] + [(0, 0, 1), (0, 1, 0)]
    H = frozenset(plane.point_index(v) for v in pts)
    meets = line_intersections(plane, H)
    if len(H) != q + 2 or not np.all((meets == 0) | (meets == 2)):
        raise AssertionError("generated point set is not a hyperoval")
    return H


def hyperoval_dis(plane: ProjectivePlane, hyperoval: Iterable[int]) -> frozenset[int]:
    """Points of the set plus its skew lines, as vertices of :func:`incidence_graph`."""
    H = frozenset(hyperoval)
    N = plane.order
    return H | {N + l for l in skew_lines(plane, H)}


@dataclass(frozen=True)
class ArcViolation:
    kind: str  # "line": meets Q in 1..k-1 points; "point": outside Q on fewer than k skew lines
    index: int
    count: int


def check_arc_conditions(plane: ProjectivePlane, Q: Iterable[int], k: int) -> tuple[bool, list[ArcViolation]]:
    """Test whether ``Q`` plus its skew lines is a k-DIS of the incidence graph.

    Equivalent to: every line meets ``Q`` in 0 or at least ``k`` points, and
    every point outside ``Q`` lies on at least ``k`` lines skew to ``Q``.
    """
    Q = frozenset(Q)
    meets = line_intersections(plane, Q)
    violations = [ArcViolation("line", int(l), int(meets[l])) for l in np.flatnonzero((meets > 0) & (meets < k))]
    skew = meets == 0
    through = plane.incidence[:, skew].sum(axis=1)
    for p in range(plane.order):
        if p not in Q and through[p] < k:
            violations.append(ArcViolation("point", p, int(through[p])))
    return not violations, violations


def is_tangent_free(plane: ProjectivePlane, Q: Iterable[int]) -> bool:
    return not np.any(line_intersections(plane, Q) == 1)


# point-set files: one "x:y:z" per line --------------------------------------


def parse_point_set(plane: ProjectivePlane, text: str) -> frozenset[int]:
    out = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        try:
            coords = tuple(int(c) for c in s.split(":"))
        except ValueError:
            raise GeometryError(f"line {lineno}: expected x:y:z, got {s!r}") from None
        if len(coords) != 3 or not all(0 <= c < plane.q for c in coords):
            raise GeometryError(f"line {lineno}: {s!r} is not a point over GF({plane.q})")
        out.add(plane.point_index(coords))
    return frozenset(out)


def format_point_set(plane: ProjectivePlane, Q: Iterable[int]) -> str:
    return "".join(":".join(map(str, plane.points[i])) + "\n" for i in sorted(Q))
