from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

import oracles
from clawstem.graph import Graph, GraphInputError, complete_graph, path_graph, star_graph
from clawstem.invariants import (
    INFINITE,
    THEOREMS,
    WorkLimitExceeded,
    check_hypothesis,
    conclusion_satisfied,
    distance_independence_number,
    resolve_theorem,
    sigma,
)
from clawstem.tree import TreeSubgraph


def test_alpha_examples(sharp):
    assert distance_independence_number(complete_graph(5), 2)[0] == 1
    alpha, witness = distance_independence_number(path_graph(7), 4)
    assert alpha == 2
    assert abs(witness[0] - witness[1]) >= 4


@pytest.mark.parametrize("m,k", [(1, 0), (1, 1), (2, 0), (2, 1)])
def test_alpha_of_sharp_graphs(sharp, m, k):
    lg = sharp(m, k)
    assert distance_independence_number(lg.graph, 4)[0] == k + 3
    assert oracles.brute_alpha(lg.graph.n, lg.graph.edges, 4) == k + 3


def test_sigma_examples(sharp):
    lg = sharp(2, 1)
    res = sigma(lg.graph, 4, 4)
    assert res.value == 8 == lg.graph.n - 2 - 6
    for m, k in [(1, 0), (1, 1), (1, 2)]:
        assert sigma(sharp(m, k).graph, 5, 2).value == 2
    assert sigma(complete_graph(4), 2, 2).value == INFINITE
    assert sigma(complete_graph(4), 2, 2).witness_set is None


def test_invariants_match_brute_force(rng):
    for _ in range(40):
        n = rng.randint(2, 11)
        h = nx.connected_watts_strogatz_graph(n, 2, 0.3, seed=rng.randrange(10**6)) if n > 3 else nx.path_graph(n)
        g = Graph(n, h.edges())
        for l in (2, 3, 4, 5):
            alpha, w = distance_independence_number(g, l)
            assert alpha == oracles.brute_alpha(n, g.edges, l)
            d = g.distances
            assert all(d.at_least(a, b, l) for a, b in combinations(w, 2))
            for k in (1, 2, 3):
                res = sigma(g, l, k)
                assert res.value == oracles.brute_sigma(n, g.edges, l, k)
                if res.witness_set is not None:
                    assert sum(g.degree(v) for v in res.witness_set) == res.value


def test_disconnected_input_rejected():
    with pytest.raises(GraphInputError):
        distance_independence_number(Graph(3, [(0, 1)]), 2)
    with pytest.raises(GraphInputError):
        sigma(Graph(3, [(0, 1)]), 2, 2)


def test_work_limit():
    g = path_graph(40)
    with pytest.raises(WorkLimitExceeded):
        distance_independence_number(g, 2, work_limit=10)


class TestHypothesis:
    def test_sharp_t17(self, sharp):
        v = check_hypothesis(sharp(2, 1).graph, "T1.7", 1)
        assert (v.holds, v.lhs, v.rhs) == (False, 8, 9)
        assert v.invariant == "sigma^4_4"

    def test_sharp_t18(self, sharp):
        v = check_hypothesis(sharp(1, 1).graph, "T1.8", 1)
        assert (v.holds, v.lhs, v.rhs) == (False, 2, 3)

    def test_complete_graph_holds(self):
        v = check_hypothesis(complete_graph(6), "T1.7", 0)
        assert v.holds and v.lhs == INFINITE
        assert v.applicable

    def test_unknown_id(self):
        with pytest.raises(GraphInputError):
            check_hypothesis(complete_graph(3), "T9.9", 0)

    def test_aliases(self):
        assert resolve_theorem("Yan-alpha") == "Yan-α"
        assert resolve_theorem("KY-sigma") == "KY-σ"

    def test_spider_corollary_fixes_k(self, sharp):
        v = check_hypothesis(sharp(1, 1).graph, "T1.9-b", 5)
        assert v.k == 1 and v.rhs == sharp(1, 1).graph.n - 9

    def test_prior_results_need_k_at_least_two(self):
        for tid in ("KTY", "TZ", "KY-σ", "KY-clawfree"):
            with pytest.raises(GraphInputError):
                check_hypothesis(complete_graph(4), tid, 1)
            assert check_hypothesis(complete_graph(4), tid, 2).holds

    def test_claw_requirement_reported(self):
        v = check_hypothesis(star_graph(3), "T1.7", 0)
        assert not v.claw_free and v.requires_claw_free
        assert not v.applicable

    def test_every_theorem_evaluates(self):
        g = path_graph(8)
        for tid in THEOREMS:
            v = check_hypothesis(g, tid, 2)
            assert v.theorem_id == tid


def test_conclusion_satisfied():
    g = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    p = TreeSubgraph(g, g.edges).profile
    assert conclusion_satisfied("T1.7", 1, p)
    assert not conclusion_satisfied("T1.7", 0, p)
    assert conclusion_satisfied("T1.9-a", 0, p)
    assert conclusion_satisfied("KTY", 3, p) and not conclusion_satisfied("KTY", 2, p)
    assert conclusion_satisfied("TZ", 3, p) and not conclusion_satisfied("TZ", 2, p)
