"""graph6 codec and edge-list text format."""

from random import Random

import pytest

from drgcert.graph import Graph
from drgcert.io import (
    from_edge_text,
    from_graph6,
    read_graph,
    to_edge_text,
    to_graph6,
    write_graph,
)
from oracles import random_connected_graph


def test_graph6_known_strings():
    # reference encodings from the format definition
    assert to_graph6(Graph(0)) == "?"
    assert to_graph6(Graph(1)) == "@"
    k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert to_graph6(k3) == "Bw"
    assert from_graph6("Bw").num_edges == 3
    # complete graph on 4 vertices
    k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert to_graph6(k4) == "C~"


def test_graph6_roundtrip_random():
    rng = Random(515001)
    for _ in range(80):
        n = rng.randint(0, 40)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3
        ]
        g = Graph(n, edges)
        h = from_graph6(to_graph6(g))
        assert h.n == g.n
        assert set(h.edges) == set(g.edges)


def test_graph6_large_order_header():
    # orders above 62 use the multi-byte length prefix
    g = Graph(63, [(0, 62)])
    s = to_graph6(g)
    assert s.startswith("~")
    h = from_graph6(s)
    assert h.n == 63 and h.adjacent(0, 62)


def test_graph6_rejects_garbage():
    with pytest.raises(ValueError):
        from_graph6("")
    with pytest.raises(ValueError):
        from_graph6("C")  # truncated bit data for n=4


def test_edge_text_roundtrip():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    text = to_edge_text(g, comment="test graph")
    assert text.startswith("# test graph\n5 3\n")
    h = from_edge_text(text)
    assert h.n == 5 and set(h.edges) == set(g.edges)


def test_edge_text_isolated_vertices():
    g = Graph(4, [(0, 1)])
    h = from_edge_text(to_edge_text(g))
    assert h.n == 4 and h.num_edges == 1


def test_edge_text_rejects_malformed():
    with pytest.raises(ValueError):
        from_edge_text("3\n0 1\n")  # header needs n and edge count
    with pytest.raises(ValueError):
        from_edge_text("3 2\n0 1\n")  # fewer edges than promised


def test_file_roundtrip(tmp_path):
    rng = Random(515002)
    g = random_connected_graph(rng, 9)
    p6 = tmp_path / "g.g6"
    pe = tmp_path / "g.edges"
    write_graph(g, str(p6), "graph6")
    write_graph(g, str(pe), "edges")
    assert set(read_graph(str(p6), "graph6").edges) == set(g.edges)
    assert set(read_graph(str(pe), "edges").edges) == set(g.edges)


def test_read_graph_unknown_format(tmp_path):
    p = tmp_path / "g"
    p.write_text("?")
    with pytest.raises(ValueError):
        read_graph(str(p), "dot")
