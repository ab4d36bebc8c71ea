"""Graph container, distances, girth, cliques, derived constructions."""

from random import Random

import pytest

from drgcert.graph import (
    DisconnectedGraphError,
    Graph,
    bipartite_complement,
    cartesian_product,
    clique_number,
    common_neighbors,
    complement,
    distances,
    from_edge_list,
    girth,
    is_connected,
    line_graph,
)
from oracles import enumerate_girth, floyd_warshall, random_connected_graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_basics():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.num_edges == 4
    assert g.degree(0) == 2
    assert g.adjacent(0, 1) and not g.adjacent(0, 2)
    assert g.neighbors(1) == frozenset({0, 2})
    assert g.degrees() == (2, 2, 2, 2)
    assert g.regular_degree() == 2
    assert sorted(g.sorted_edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 1), (1, 0)])


def test_from_edge_list_accepts_generator():
    g = from_edge_list(3, ((i, i + 1) for i in range(2)))
    assert g.num_edges == 2


def test_irregular_degree():
    assert path(3).regular_degree() is None


def test_distances_path():
    dd = distances(path(4))
    assert dd.connected
    assert dd.diameter == 3
    assert dd.d(0, 3) == 3
    assert dd.at_distance(0, 2) == (2,)
    assert dd.pairs_at_distance(3) == [(0, 3), (3, 0)]
    assert dd.kseq[0] == (1, 1, 1, 1)
    assert dd.kseq[1] == (1, 2, 1, 0)


def test_distances_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    dd = distances(g)
    assert not dd.connected
    assert not is_connected(g)


def test_distances_match_floyd_warshall():
    rng = Random(414001)
    for _ in range(60):
        n = rng.randint(2, 11)
        g = random_connected_graph(rng, n)
        dd = distances(g)
        fw = floyd_warshall(g)
        for u in range(n):
            for v in range(n):
                assert dd.d(u, v) == fw[u][v]


def test_girth_known_values():
    assert girth(path(5)) is None
    assert girth(cycle(3)) == 3
    assert girth(cycle(9)) == 9
    assert girth(Graph(1)) is None
    # two triangles sharing a vertex
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert girth(g) == 3


def test_girth_matches_cycle_enumeration():
    rng = Random(414002)
    for _ in range(120):
        n = rng.randint(3, 11)
        p = rng.uniform(0.15, 0.6)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph(n, edges)
        assert girth(g) == enumerate_girth(g)


def test_clique_number_known():
    assert clique_number(Graph(1)) == 1
    assert clique_number(cycle(5)) == 2
    assert clique_number(cycle(3)) == 3
    k5 = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert clique_number(k5) == 5
    assert clique_number(complement(k5)) == 1


def test_clique_number_random_vs_brute():
    from itertools import combinations

    rng = Random(414003)
    for _ in range(40):
        n = rng.randint(2, 9)
        p = rng.uniform(0.2, 0.8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph(n, edges)
        brute = 1
        for size in range(2, n + 1):
            for sub in combinations(range(n), size):
                if all(g.adjacent(a, b) for a, b in combinations(sub, 2)):
                    brute = size
                    break
        assert clique_number(g) == brute


def test_common_neighbors():
    g = cycle(4)
    assert common_neighbors(g, 0, 2) == frozenset({1, 3})
    with pytest.raises(ValueError):
        common_neighbors(g, 1, 1)


def test_complement_involution():
    rng = Random(414004)
    for _ in range(20):
        n = rng.randint(1, 10)
        g = random_connected_graph(rng, n)
        cc = complement(complement(g))
        assert set(cc.edges) == set(g.edges)
        assert g.num_edges + complement(g).num_edges == n * (n - 1) // 2


def test_line_graph_of_triangle_is_triangle():
    lg = line_graph(cycle(3))
    assert lg.n == 3 and lg.num_edges == 3


def test_line_graph_handshake():
    # number of edges in L(G) is sum of C(deg, 2)
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    lg = line_graph(g)
    assert lg.n == 4
    assert lg.num_edges == 3 + 1


def test_cartesian_product_grid():
    g = cartesian_product(path(2), path(3))
    assert g.n == 6
    assert g.num_edges == 3 + 4
    dd = distances(g)
    assert dd.diameter == 3


def test_cartesian_product_cube():
    k2 = path(2)
    q3 = cartesian_product(cartesian_product(k2, k2), k2)
    assert q3.n == 8
    assert q3.regular_degree() == 3
    assert girth(q3) == 4


def test_bipartite_complement_crown():
    # K_{3,3} minus a perfect matching is the 6-cycle
    k33 = Graph(6, [(a, b + 3) for a in range(3) for b in range(3)])
    crown = bipartite_complement(
        Graph(6, [(i, i + 3) for i in range(3)]), range(3), range(3, 6)
    )
    assert crown.regular_degree() == 2
    assert girth(crown) == 6
    assert distances(crown).diameter == 3
    assert k33.num_edges - 3 == crown.num_edges


def test_disconnected_error_type():
    assert issubclass(DisconnectedGraphError, ValueError)
