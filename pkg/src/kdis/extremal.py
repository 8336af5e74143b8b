"""Extremal search over labelled graphs and trees, bound constants and the random-graph model."""
from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Sequence

import numpy as np

from . import _kernels
from .graph import Graph, graph6_encode, popcount
from .search import count_kdis, enumerate_kdis_masks

WITNESS_CAP = 100
MAX_N = 9
LONG_RUN_N = 9
TAU = 3 ** (1 / 5)


@dataclass
class SearchReport:
    n: int
    k: int
    max_count: int
    witnesses: list[str]
    graphs_scanned: int
    elapsed: float
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        out = {
            "n": self.n,
            "k": self.k,
            "max": self.max_count,
            "witnesses": self.witnesses,
            "scanned": self.graphs_scanned,
            "seconds": round(self.elapsed, 6),
        }
        out.update(self.extra)
        return json.dumps(out)

    @property
    def zeta(self) -> float:
        return self.max_count ** (1 / self.n) if self.n else 1.0


def default_shards() -> int:
    return max(1, int(os.environ.get("KDIS_THREADS", "1")))


def _index_to_graph(g: int, n: int) -> Graph:
    adj = np.zeros(max(n, 1), np.int64)
    _kernels.decode_index(g, n, adj)
    return Graph(n, [int(x) for x in adj[:n]])


def _scan_shard(args):
    n, k, lo, hi = args
    wit = np.empty(WITNESS_CAP, np.int64)
    best, nwit = _kernels.scan_graph_block(n, k, lo, hi, WITNESS_CAP, wit)
    return int(best), [int(x) for x in wit[:nwit]]


def _shard_bounds(total: int, shards: int) -> list[tuple[int, int]]:
    shards = max(1, min(shards, total))
    step, extra = divmod(total, shards)
    out, lo = [], 0
    for i in range(shards):
        hi = lo + step + (i < extra)
        out.append((lo, hi))
        lo = hi
    return out


def _read_checkpoint(path: Path) -> dict[int, int]:
    done = {}
    if path.exists():
        for line in path.read_text().splitlines():
            if line.strip():
                sid, best = line.split()
                done[int(sid)] = int(best)
    return done


def max_kdis_count(
    n: int,
    k: int,
    shards: int | None = None,
    workers: int | None = None,
    long_run: bool = False,
    checkpoint: str | os.PathLike | None = None,
) -> SearchReport:
    """Exact maximum number of k-DISes over all labelled graphs on ``n`` vertices.

    The space of base graphs on the first ``n-1`` vertices is cut into
    ``shards`` contiguous blocks; block maxima are merged by ``max`` and the
    witnesses (first 100 in scan order) are taken block by block in index
    order, so the report does not depend on ``shards`` or ``workers``.
    ``n = 9`` needs ``long_run=True`` and may be resumed through a checkpoint
    file holding one ``"shard_id max_in_shard"`` line per finished shard.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not 0 <= n <= MAX_N:
        raise ValueError(f"exhaustive search supports 0 <= n <= {MAX_N}, got {n}")
    if n >= LONG_RUN_N and not long_run:
        raise ValueError(f"n={n} scans 2^{comb(n, 2)} graphs; pass long_run=True to proceed")
    t0 = time.perf_counter()
    if n == 0:
        return SearchReport(0, k, 1, [graph6_encode(Graph.empty(0))], 1, time.perf_counter() - t0)
    shards = default_shards() if shards is None else shards
    bounds = _shard_bounds(1 << comb(n - 1, 2), shards)
    ckpt = Path(checkpoint) if checkpoint is not None else None
    done = _read_checkpoint(ckpt) if ckpt else {}
    todo = [i for i in range(len(bounds)) if i not in done]
    results: dict[int, tuple[int, list[int]]] = {}
    jobs = [(n, k, *bounds[i]) for i in todo]
    workers = 1 if workers is None else workers

    def record(i, res):
        results[i] = res
        done[i] = res[0]
        if ckpt:
            with ckpt.open("a") as fh:
                fh.write(f"{i} {res[0]}\n")

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for i, res in zip(todo, pool.map(_scan_shard, jobs)):
                record(i, res)
    else:
        for i, job in zip(todo, jobs):
            record(i, _scan_shard(job))

    best = max(done.values())
    witnesses: list[int] = []
    for i in range(len(bounds)):
        if len(witnesses) >= WITNESS_CAP:
            break
        if done[i] != best:
            continue
        if i not in results:
            # shard finished in an earlier run: rescan to recover its witnesses
            results[i] = _scan_shard((n, k, *bounds[i]))
        witnesses.extend(results[i][1][: WITNESS_CAP - len(witnesses)])
    graphs = [_index_to_graph(g, n) for g in witnesses]
    for G in graphs:
        if count_kdis(G, k) != best:
            raise AssertionError(f"witness {graph6_encode(G)} does not attain {best}")
    return SearchReport(
        n, k, best, [graph6_encode(G) for G in graphs], 1 << comb(n, 2), time.perf_counter() - t0
    )


def _pruefer_code_to_seq(code: int, n: int) -> list[int]:
    seq = []
    for _ in range(n - 2):
        code, r = divmod(code, n)
        seq.append(r)
    return seq[::-1]


def max_kdis_count_trees(n: int, k: int) -> SearchReport:
    """Exact maximum over all ``n**(n-2)`` labelled trees.

    For ``k >= 2`` every tree is also run through the leaf-stripping solver and
    compared with enumeration; ``extra["solver_disagreements"]`` counts trees
    where the two differ or where a second k-DIS exists.
    """
    from .generators import pruefer_tree

    if not 2 <= n <= 9:
        raise ValueError(f"tree search supports 2 <= n <= 9, got {n}")
    if k < 1:
        raise ValueError("k must be positive")
    t0 = time.perf_counter()
    wit = np.empty(WITNESS_CAP, np.int64)
    best, nwit, total, with_kdis, bad = _kernels.sweep_trees(n, k, k >= 2, WITNESS_CAP, wit)
    graphs = [pruefer_tree(_pruefer_code_to_seq(int(c), n)) for c in wit[:nwit]]
    for G in graphs:
        if count_kdis(G, k) != best:
            raise AssertionError("tree witness does not attain the maximum")
    extra = {"trees_with_kdis": int(with_kdis)}
    if k >= 2:
        extra["solver_disagreements"] = int(bad)
    return SearchReport(
        n, k, int(best), [graph6_encode(G) for G in graphs], int(total), time.perf_counter() - t0, extra
    )


# bound constants ------------------------------------------------------------


def alpha_bound(k: int, min_degree: int | None = None) -> tuple[float, int]:
    """Largest per-vertex growth factor ``((k+d)/k) ** (1/(d+1))`` over ``d >= min_degree``.

    Branching on a minimum-degree vertex ``v`` of degree ``d`` gives
    ``mi_k(n) <= (1 + d/k) mi_k(n-d-1)``.  A vertex of degree below ``k``
    must lie in every k-DIS, so only ``d >= k`` costs anything; for ``k = 2``
    the degree 2 and 3 cases are settled by the recurrences with roots
    ``tau_1``, ``tau_2``, ``tau_3`` (all below ``3**(1/5)``), leaving
    ``d >= 4``.  The default ``min_degree`` follows this; pass ``1`` for the
    plain maximum over all positive ``d``.  The function decreases from
    ``d = k`` on, so the scan stops at ``8k + 8``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if min_degree is None:
        min_degree = 4 if k == 2 else k
    if min_degree < 1:
        raise ValueError("min_degree must be positive")
    best_d = max(range(min_degree, max(8 * k + 8, min_degree) + 1), key=lambda d: ((k + d) / k) ** (1 / (d + 1)))
    return round(((k + best_d) / k) ** (1 / (best_d + 1)), 12), best_d


def poly_root(coefficients: Sequence[float], bracket: tuple[float, float] = (1.0, 2.0), tol: float = 1e-12) -> float:
    """Real root by bisection; ``coefficients`` are highest degree first."""

    def P(x):
        v = 0.0
        for c in coefficients:
            v = v * x + c
        return v

    lo, hi = bracket
    flo, fhi = P(lo), P(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change of the polynomial on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = P(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def upper_bound_roots() -> dict[str, float]:
    """Roots of the degree-2 and degree-3 branching recurrences for 2-DISes."""
    return {
        "tau1": poly_root([1, 0, 0, -1, -1]),
        "tau2": poly_root([1, 0, 0, 0, -1, 0, 0, -1, -2]),
        "tau3": poly_root([1, 0, 0, 0, -1, 0, 0, -2]),
        "tau": TAU,
    }


def envelope(n: int, k: int) -> float:
    """Proven upper bound ``alpha_k ** n`` on the number of k-DISes of an n-vertex graph."""
    return alpha_bound(k)[0] ** n


# random graphs --------------------------------------------------------------


@dataclass(frozen=True)
class RandomModelParams:
    n: int
    t: int
    k: int
    p: float
    samples: int = 1000
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")
        if not 0 <= self.t <= self.n:
            raise ValueError("t must lie in 0..n")
        if self.k < 1:
            raise ValueError("k must be positive")


def expected_kdis_count(params: RandomModelParams) -> float:
    """Expected number of size-``t`` k-DISes in G(n, p)."""
    n, t, k, p = params.n, params.t, params.k, params.p
    miss = sum(comb(t, j) * p**j * (1 - p) ** (t - j) for j in range(min(k, t + 1)))
    return comb(n, t) * (1 - p) ** comb(t, 2) * (1 - miss) ** (n - t)


def rng_for(seed: int) -> np.random.Generator:
    """Philox4x64 counter-based stream keyed by ``SeedSequence(seed)``; split with ``SeedSequence.spawn``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def monte_carlo_expected(params: RandomModelParams) -> tuple[float, float]:
    """Sample mean and standard error of the size-``t`` k-DIS count over G(n, p) draws."""
    if params.samples < 1000:
        raise ValueError("at least 1000 samples are required")
    n, t, k = params.n, params.t, params.k
    rng = rng_for(params.seed)
    iu, ju = np.triu_indices(n, 1)
    draws = rng.random((params.samples, len(iu))) < params.p
    cache: dict[bytes, int] = {}
    values = np.empty(params.samples)
    for s, row in enumerate(draws):
        key = np.packbits(row).tobytes()
        if key not in cache:
            adj = [0] * n
            for u, v in zip(iu[row].tolist(), ju[row].tolist()):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            G = Graph(n, adj)
            cache[key] = sum(1 for m in enumerate_kdis_masks(G, k) if popcount(m) == t)
        values[s] = cache[key]
    mean = float(values.mean())
    stderr = float(values.std(ddof=1) / math.sqrt(params.samples))
    return mean, stderr
