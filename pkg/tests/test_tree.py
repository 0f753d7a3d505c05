from __future__ import annotations

import pytest

import oracles
from clawstem.graph import Graph, GraphInputError, complete_graph, cycle_graph, path_graph, star_graph
from clawstem.tree import (
    InvalidTree,
    TreeSubgraph,
    count_leaves_by_formula,
    leaves,
    objective_key,
    spanning_tree_from_stem,
    stem_profile,
    tree_metrics,
)
from conftest import spider


def path_tree(n: int) -> TreeSubgraph:
    g = path_graph(n)
    return TreeSubgraph(g, g.edges)


def star_tree(k: int) -> TreeSubgraph:
    g = star_graph(k)
    return TreeSubgraph(g, g.edges)


class TestValidation:
    def test_cycle_rejected(self):
        g = cycle_graph(4)
        with pytest.raises(InvalidTree):
            TreeSubgraph(g, g.edges)

    def test_foreign_edge_rejected(self):
        with pytest.raises(InvalidTree):
            TreeSubgraph(path_graph(4), [(0, 2), (2, 3), (1, 2)])

    def test_disconnected_rejected(self):
        g = Graph(4, [(0, 1), (2, 3), (1, 2)])
        with pytest.raises(InvalidTree):
            TreeSubgraph(g, [(0, 1), (2, 3)], vertices=[0, 1, 2, 3])

    def test_empty_rejected(self):
        with pytest.raises(InvalidTree):
            TreeSubgraph(path_graph(2))

    def test_singleton(self):
        t = TreeSubgraph(Graph(3, [(0, 1), (1, 2)]), vertices=[1])
        assert leaves(t) == frozenset()
        assert tree_metrics(t) == (1, 0, 1)
        assert not t.is_spanning


def test_leaves_examples():
    assert leaves(path_tree(5)) == {0, 4}
    assert leaves(star_tree(4)) == {1, 2, 3, 4}
    g, edges = spider()
    assert leaves(TreeSubgraph(g, edges)) == {2, 4, 6}


def test_profile_of_path():
    p = stem_profile(path_tree(5))
    assert p.stem_vertices == {1, 2, 3}
    assert p.branch_count == 0
    assert p.stem_leaves == {1, 3}
    assert p.degree_two_stem == {2}


def test_profile_of_spider():
    g, edges = spider()
    p = stem_profile(TreeSubgraph(g, edges))
    assert p.stem_vertices == {0, 1, 3, 5}
    assert p.stem_branch_vertices == {0}
    assert p.is_spider_stem
    assert p.stem_max_degree == 3


def test_formula_examples():
    assert count_leaves_by_formula(path_tree(6)) == 2
    assert count_leaves_by_formula(star_tree(5)) == 5
    # two adjacent degree-3 vertices, two pendant leaves each
    g = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    t = TreeSubgraph(g, g.edges)
    assert count_leaves_by_formula(t) == len(leaves(t)) == 4


def test_formula_undefined_on_singleton():
    with pytest.raises(GraphInputError):
        count_leaves_by_formula(TreeSubgraph(Graph(1), vertices=[0]))


def test_metrics_examples():
    assert tree_metrics(path_tree(5)) == (5, 2, 3)
    g, edges = spider()
    assert tree_metrics(TreeSubgraph(g, edges)) == (7, 3, 4)
    assert tree_metrics(star_tree(3)) == (4, 0, 1)


def test_profile_matches_oracle(rng):
    for _ in range(200):
        n = rng.randint(2, 30)
        edges = oracles.prufer_tree(rng, n)
        p = stem_profile(TreeSubgraph(Graph(n, edges), edges))
        ref = oracles.stem_stats(range(n), edges)
        assert p.leaves == ref["leaves"]
        assert p.stem_vertices == ref["stem"]
        assert p.stem_branch_vertices == ref["branch"]
        assert p.stem_leaves == ref["stem_leaves"]
        assert p.metrics == ref["metrics"]


def test_objective_order():
    # bigger tree wins; then fewer stem leaves; then smaller stem
    assert objective_key((5, 3, 3)) > objective_key((4, 0, 1))
    assert objective_key((5, 2, 3)) > objective_key((5, 3, 2))
    assert objective_key((5, 2, 3)) > objective_key((5, 2, 4))


def test_with_changes():
    g = complete_graph(4)
    t = TreeSubgraph(g, [(0, 1), (1, 2), (2, 3)])
    t2 = t.with_changes(removed=[(2, 3)], added=[(0, 3)])
    assert t2.edges == {(0, 1), (1, 2), (0, 3)}
    with pytest.raises(InvalidTree):
        t.with_changes(removed=[(2, 3)], added=[(0, 2)])


def test_spanning_tree_from_stem():
    g = complete_graph(5)
    t = spanning_tree_from_stem(g, [(1, 2)], [1, 2])
    assert t.is_spanning
    assert t.edges == {(1, 2), (0, 1), (1, 3), (1, 4)}
    with pytest.raises(GraphInputError):
        spanning_tree_from_stem(path_graph(4), [], [0])
