import random

import networkx as nx
import pytest

from kdis.graph import (
    Graph,
    GraphError,
    delete_closed_neighborhoods,
    format_edge_list,
    from_edges,
    graph6_decode,
    graph6_encode,
    neighborhood_query,
    parse_edge_list,
)
from oracles import random_graph


def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphError):
        from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])  # asymmetric


def test_isolated_vertices_survive():
    G = from_edges(5, [(0, 1)])
    assert G.n == 5 and G.degrees() == [1, 1, 0, 0, 0]


def test_neighborhood_query():
    G = from_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert neighborhood_query(G, 1) == (3, frozenset({0, 2, 3}), frozenset({0, 1, 2, 3}))
    with pytest.raises(GraphError):
        neighborhood_query(G, 9)


def test_delete_closed_neighborhoods(rng):
    for _ in range(200):
        G = random_graph(rng, rng.randrange(1, 14))
        S = {v for v in range(G.n) if rng.random() < 0.3}
        H, remap = delete_closed_neighborhoods(G, S)
        gone = set(S).union(*(G.neighbors(v) for v in S)) if S else set()
        assert not gone & set(remap)
        assert sorted(remap) == [v for v in range(G.n) if v not in gone]
        for u, v in H.edges():
            inv = {b: a for a, b in remap.items()}
            assert G.has_edge(inv[u], inv[v])
        assert H.num_edges == sum(1 for u, v in G.edges() if u in remap and v in remap)


def test_graph6_known_strings():
    assert graph6_encode(Graph.empty(0)) == "?"
    assert graph6_encode(from_edges(4, [(0, 1), (1, 2), (2, 3)])) == "Ch"
    assert graph6_decode(">>graph6<<Ch").edges() == [(0, 1), (1, 2), (2, 3)]


def test_graph6_roundtrip_against_networkx():
    rng = random.Random(7)
    for _ in range(10_000):
        n = rng.randrange(0, 31)
        G = random_graph(rng, n)
        text = graph6_encode(G)
        assert graph6_decode(text) == G
        ref = nx.to_graph6_bytes(G.to_networkx(), header=False).decode().strip()
        assert text == ref


def test_graph6_large_header():
    G = from_edges(100, [(0, 99), (5, 6)])
    text = graph6_encode(G)
    assert text.startswith("~")
    assert graph6_decode(text) == G
    back = nx.from_graph6_bytes(text.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == [(0, 99), (5, 6)]


@pytest.mark.parametrize(
    "bad",
    ["", "C", "Chh", "C\x7f", "AO", "~??"],
)
def test_graph6_errors_report_offsets(bad):
    with pytest.raises(GraphError) as exc:
        graph6_decode(bad)
    assert "byte" in str(exc.value)


def test_edge_list_roundtrip(rng):
    for _ in range(50):
        G = random_graph(rng, rng.randrange(0, 12))
        assert parse_edge_list(format_edge_list(G)) == G
    G = parse_edge_list("# path\n3 2\n0 1\n1 2\n")
    assert G.edges() == [(0, 1), (1, 2)]
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
