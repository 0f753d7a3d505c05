from __future__ import annotations

import networkx as nx
import pytest

import oracles
from clawstem.graph import (
    UNREACHABLE,
    Graph,
    GraphInputError,
    all_pairs_distances,
    bfs_distances,
    complete_graph,
    cycle_graph,
    degree,
    induced_subgraph,
    is_claw_free,
    is_connected,
    line_graph,
    path_graph,
    require_connected,
    star_graph,
)


class TestGraph:
    def test_edges_are_normalised_and_sorted(self):
        g = Graph(4, [(3, 1), (0, 2), (2, 1)])
        assert g.edges == ((0, 2), (1, 2), (1, 3))
        assert g.adj[1] == (2, 3)
        assert g.m == 3
        assert g.has_edge(1, 3) and g.has_edge(3, 1)
        assert not g.has_edge(0, 1)

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 4)], [(-1, 0)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(GraphInputError):
            Graph(4, edges)

    def test_negative_order(self):
        with pytest.raises(GraphInputError):
            Graph(-1)

    def test_equality_and_hash(self):
        assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
        assert len({Graph(3, [(0, 1)]), Graph(3, [(1, 0)])}) == 1


def test_degree_examples(sharp):
    assert degree(complete_graph(4), 0) == 3
    g11 = sharp(1, 1)
    assert degree(g11.graph, g11.vertex("V", 1)) == 1
    g21 = sharp(2, 1)
    assert degree(g21.graph, g21.vertex("Z", 1)) == 5


def test_degree_out_of_range():
    with pytest.raises(GraphInputError):
        degree(complete_graph(3), 3)


def test_connectivity(sharp):
    assert is_connected(path_graph(5))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(sharp(1, 0).graph)
    assert is_connected(Graph(1))
    with pytest.raises(GraphInputError):
        require_connected(Graph(2))


def test_distances_path_and_unreachable():
    d = all_pairs_distances(path_graph(7))
    assert d(0, 6) == 6
    assert d(3, 3) == 0
    d2 = all_pairs_distances(Graph(3, [(0, 1)]))
    assert d2(0, 2) == UNREACHABLE
    assert not d2.reachable(0, 2)
    assert d2.at_least(0, 2, 100)


def test_sharp_distances(sharp):
    lg = sharp(1, 1)
    d = lg.graph.distances
    v1, v2, y2 = lg.vertex("V", 1), lg.vertex("V", 2), lg.vertex("D", 2, 1)
    assert d(v1, v2) == 5
    assert d(v1, y2) == 4


def test_distances_match_networkx(rng):
    for _ in range(30):
        h = nx.gnp_random_graph(rng.randint(1, 14), 0.25, seed=rng.randrange(10**6))
        g = Graph(h.number_of_nodes(), h.edges())
        ref = oracles.nx_distances(g.n, g.edges)
        d = all_pairs_distances(g)
        for u in range(g.n):
            assert bfs_distances(g, u) == [ref[u].get(v, UNREACHABLE) for v in range(g.n)]
            assert list(d.rows[u]) == [ref[u].get(v, UNREACHABLE) for v in range(g.n)]


class TestClawFree:
    def test_star(self):
        ok, witness = is_claw_free(star_graph(3))
        assert not ok
        assert witness == (0, 1, 2, 3)

    def test_cycle_and_line_graph(self):
        assert is_claw_free(cycle_graph(5)) == (True, None)
        assert is_claw_free(line_graph(complete_graph(4)))[0]

    def test_witness_is_an_induced_claw(self, rng):
        for _ in range(60):
            h = nx.gnp_random_graph(rng.randint(4, 10), 0.4, seed=rng.randrange(10**6))
            g = Graph(h.number_of_nodes(), h.edges())
            ok, w = is_claw_free(g)
            assert ok == (not oracles.has_induced_claw(g.n, g.edges))
            if not ok:
                c, *rest = w
                assert all(g.has_edge(c, x) for x in rest)
                assert not any(g.has_edge(a, b) for a, b in [(rest[0], rest[1]), (rest[0], rest[2]), (rest[1], rest[2])])


def test_induced_subgraph(sharp):
    h, relabel = induced_subgraph(complete_graph(4), {0, 1, 2})
    assert h == complete_graph(3)
    assert sorted(relabel.values()) == [0, 1, 2]
    h, _ = induced_subgraph(cycle_graph(5), {2, 3})
    assert h.n == 2 and h.edges == ((0, 1),)
    lg = sharp(1, 1)
    zs = [lg.vertex("Z", i) for i in range(1, 5)]
    assert induced_subgraph(lg.graph, zs)[0] == complete_graph(4)


def test_line_graph_matches_networkx(rng):
    for _ in range(20):
        h = nx.gnp_random_graph(rng.randint(2, 9), 0.4, seed=rng.randrange(10**6))
        g = Graph(h.number_of_nodes(), h.edges())
        lg = line_graph(g)
        assert lg.n == g.m
        ref = nx.line_graph(h)
        assert lg.m == ref.number_of_edges()
        assert sorted(d for _, d in ref.degree()) == sorted(lg.degree(v) for v in range(lg.n))


def test_small_constructors():
    assert path_graph(1).m == 0
    assert cycle_graph(6).m == 6
    assert complete_graph(5).m == 10
    assert star_graph(4).degree(0) == 4
