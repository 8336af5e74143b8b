import random

import numpy as np
import pytest

from kdis.geometry import (
    SUPPORTED_Q,
    FiniteField,
    GeometryError,
    build_pg2,
    check_arc_conditions,
    format_point_set,
    hyperoval_dis,
    incidence_graph,
    is_tangent_free,
    parse_point_set,
    regular_hyperoval,
    skew_lines,
)
from kdis.search import is_kdis
from oracles import gf_mul, is_irreducible


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_field_tables_match_schoolbook_product(q):
    F = FiniteField(q)
    assert is_irreducible(F.modulus, F.p)
    for a in range(q):
        for b in range(q):
            assert F.mul[a, b] == gf_mul(a, b, F.p, F.modulus)


def test_moduli_are_lexicographically_least():
    assert FiniteField(4).modulus == [1, 1, 1]
    assert FiniteField(8).modulus == [1, 1, 0, 1]
    assert FiniteField(9).modulus == [1, 0, 1]
    assert FiniteField(16).modulus == [1, 1, 0, 0, 1]


def test_unsupported_order():
    with pytest.raises(GeometryError):
        build_pg2(6)


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_plane_shape(q):
    P = build_pg2(q)
    N = q * q + q + 1
    assert P.order == N
    assert all(p[next(i for i, c in enumerate(p) if c)] == 1 for p in P.points)
    assert list(P.points) == sorted(P.points)
    G = incidence_graph(P)
    assert G.n == 2 * N and G.num_edges == N * (q + 1)
    assert set(G.degrees()) == {q + 1}


@pytest.mark.parametrize("q,skew", [(4, 6), (8, 28), (16, 120)])
def test_hyperoval(q, skew):
    P = build_pg2(q)
    H = regular_hyperoval(P)
    assert len(H) == q + 2
    assert len(skew_lines(P, H)) == skew == q * (q - 1) // 2
    assert is_tangent_free(P, H)
    D = hyperoval_dis(P, H)
    assert is_kdis(incidence_graph(P), D, 2)
    assert check_arc_conditions(P, H, 2) == (True, [])


def test_no_hyperoval_for_odd_q():
    with pytest.raises(GeometryError):
        regular_hyperoval(build_pg2(5))


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_conditions_equal_kdis_on_random_sets(q):
    rng = random.Random(q)
    P = build_pg2(q)
    G = incidence_graph(P)
    agree = {True: 0, False: 0}
    for _ in range(300):
        Q = {p for p in range(P.order) if rng.random() < rng.choice((0.1, 0.3, 0.5))}
        for k in (1, 2, 3):
            ok, violations = check_arc_conditions(P, Q, k)
            D = set(Q) | {P.order + l for l in skew_lines(P, Q)}
            assert ok == is_kdis(G, D, k)
            assert ok == (not violations)
            agree[ok] += 1
    assert agree[True] and agree[False]


def test_point_set_io(tmp_path):
    P = build_pg2(4)
    H = regular_hyperoval(P)
    text = format_point_set(P, H)
    assert parse_point_set(P, text) == H
    # non-normalised coordinates are accepted
    assert parse_point_set(P, "2:2:2\n") == frozenset({P.point_index((1, 1, 1))})
    with pytest.raises(GeometryError):
        parse_point_set(P, "1:2\n")
    with pytest.raises(GeometryError):
        parse_point_set(P, "0:0:0\n")
