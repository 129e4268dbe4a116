import itertools
import math

import numpy as np
import pytest

from netclass.cliques import (degeneracy_ordering, degree_orientation,
                              enumerate_all_cliques,
                              enumerate_maximal_cliques,
                              enumerate_maximal_cliques_backtracking,
                              maximum_clique)
from netclass.closure import weak_closure_number
from netclass.errors import BudgetExceededError
from netclass.generators import (complete_graph, complete_multipartite,
                                 cycle_graph, moon_moser, path_graph,
                                 petersen_graph, random_tree, star_graph)
from netclass.graph import Graph

from conftest import (adjacency_sets, brute_all_cliques,
                      brute_maximal_cliques, random_graph_stream)


def as_sets(clique_set):
    return {frozenset(c) for c in clique_set}


class TestBacktrackingEnumerator:
    def test_triangle(self):
        cs = enumerate_maximal_cliques_backtracking(complete_graph(3))
        assert cs.cliques == [(0, 1, 2)]

    def test_square_has_four_edge_cliques(self):
        cs = enumerate_maximal_cliques_backtracking(cycle_graph(4))
        assert len(cs) == 4
        assert all(len(c) == 2 for c in cs)

    def test_moon_moser_12(self):
        cs = enumerate_maximal_cliques_backtracking(moon_moser(12))
        assert len(cs) == 3 ** 4
        assert all(len(c) == 4 for c in cs)

    def test_isolated_vertices_are_singleton_cliques(self):
        g = Graph.from_edges([(0, 1)], n=3)
        cs = enumerate_maximal_cliques_backtracking(g)
        assert cs.cliques == [(0, 1), (2,)]


class TestGeneralEnumerator:
    def test_k5(self):
        cs = enumerate_maximal_cliques(complete_graph(5))
        assert cs.cliques == [(0, 1, 2, 3, 4)]

    def test_moon_moser_9(self):
        assert len(enumerate_maximal_cliques(moon_moser(9))) == 27

    def test_petersen_all_edges(self):
        g = petersen_graph()
        cs = enumerate_maximal_cliques(g)
        assert len(cs) == 15
        assert as_sets(cs) == {frozenset(e) for e in map(tuple, g.edge_array().tolist())}

    def test_budget_exceeded_names_budget(self):
        with pytest.raises(BudgetExceededError, match="17"):
            enumerate_maximal_cliques(moon_moser(12), budget=17)
        with pytest.raises(BudgetExceededError, match="11"):
            enumerate_maximal_cliques_backtracking(moon_moser(12), budget=11)


class TestEnumeratorAgreement:
    def test_enumerators_agree_on_random_graphs(self):
        # the backtracking procedure is exponential in the closure
        # parameter, so the n<=40 instances stay sparse (small c) and
        # dense instances stay small
        rng = np.random.default_rng(71)
        graphs = []
        for _ in range(25):
            n = int(rng.integers(2, 41))
            p = float(rng.choice([0.03, 0.06, 0.1]))
            iu = np.triu_indices(n, k=1)
            mask = rng.random(len(iu[0])) < p
            graphs.append(Graph.from_edges(
                np.column_stack([iu[0][mask], iu[1][mask]]), n=n))
        graphs.extend(random_graph_stream(25, 13, seed=72))
        for g in graphs:
            a = enumerate_maximal_cliques_backtracking(g)
            b = enumerate_maximal_cliques(g)
            assert a.cliques == b.cliques

    def test_enumerators_match_subset_oracle(self):
        for g in random_graph_stream(30, 13, seed=73):
            expected = brute_maximal_cliques(g)
            assert as_sets(enumerate_maximal_cliques(g)) == expected
            assert as_sets(enumerate_maximal_cliques_backtracking(g)) == expected

    def test_output_cliques_are_complete_and_maximal(self):
        for g in random_graph_stream(25, 30, seed=79):
            adj = adjacency_sets(g)
            cs = enumerate_maximal_cliques(g)
            seen = set()
            for clique in cs:
                members = set(clique)
                assert frozenset(members) not in seen
                seen.add(frozenset(members))
                for a, b in itertools.combinations(clique, 2):
                    assert b in adj[a]
                for v in set(range(g.n)) - members:
                    assert not members <= adj[v]


class TestMaximumClique:
    def test_examples(self):
        assert len(maximum_clique(moon_moser(12))) == 4
        assert maximum_clique(complete_graph(5)) == (0, 1, 2, 3, 4)
        assert len(maximum_clique(petersen_graph())) == 2

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            maximum_clique(Graph.from_edges([], n=0))

    def test_matches_oracle_max(self):
        for g in random_graph_stream(20, 14, seed=83):
            oracle = max((len(c) for c in brute_maximal_cliques(g)), default=0)
            assert len(maximum_clique(g)) == oracle


class TestDegeneracy:
    def test_trees_have_degeneracy_1(self):
        for seed in range(5):
            g = random_tree(30, seed=seed)
            assert degeneracy_ordering(g).degeneracy == 1

    def test_complete_graph(self):
        assert degeneracy_ordering(complete_graph(7)).degeneracy == 6

    def test_square(self):
        assert degeneracy_ordering(cycle_graph(4)).degeneracy == 2

    def test_sqrt_2m_bound(self):
        for g in random_graph_stream(40, 40, seed=89):
            alpha = degeneracy_ordering(g).degeneracy
            assert alpha <= math.sqrt(2 * g.m) or g.m == 0

    def test_out_degrees_bounded_by_degeneracy(self):
        for g in random_graph_stream(20, 35, seed=97):
            og = degeneracy_ordering(g)
            assert int(og.out_degrees.max(initial=0)) <= og.degeneracy
            assert int(og.out_degrees.sum()) == g.m

    def test_min_degree_greedy_witness(self):
        # degree at removal really is the min over the surviving subgraph
        for g in random_graph_stream(10, 20, seed=101):
            og = degeneracy_ordering(g)
            adj = adjacency_sets(g)
            surviving = set(range(g.n))
            for v, d in zip(og.order.tolist(), og.removal_degrees.tolist()):
                degrees = {u: len(adj[u] & surviving) for u in surviving}
                assert degrees[v] == min(degrees.values())
                assert d == degrees[v]
                surviving.remove(v)


class TestDegreeOrientation:
    def test_star(self):
        og = degree_orientation(star_graph(4))
        assert og.out_degrees.tolist() == [0, 1, 1, 1, 1]

    def test_k4_tie_break_by_index(self):
        og = degree_orientation(complete_graph(4))
        assert og.out_degrees.tolist() == [3, 2, 1, 0]

    def test_regular_graph_orients_by_index(self):
        g = cycle_graph(6)
        og = degree_orientation(g)
        for u, v in map(tuple, g.edge_array().tolist()):
            assert v in og.out_neighbors(u).tolist()
        assert int(og.out_degrees.sum()) == g.m

    def test_every_edge_oriented_low_degree_to_high(self):
        for g in random_graph_stream(20, 30, seed=103):
            og = degree_orientation(g)
            degs = g.degrees
            for u in range(g.n):
                for v in og.out_neighbors(u).tolist():
                    assert (degs[u], u) < (degs[v], v)


class TestEnumerateAllCliques:
    def test_triangle(self):
        assert enumerate_all_cliques(complete_graph(3)) == 7

    def test_path_3(self):
        assert enumerate_all_cliques(path_graph(3)) == 5

    def test_octahedron(self):
        # 6 vertices + 12 edges + 8 triangles, via subset enumeration
        octa = complete_multipartite([2, 2, 2])
        assert len(brute_all_cliques(octa)) == 26
        assert enumerate_all_cliques(octa) == 26

    def test_matches_subset_oracle(self):
        for g in random_graph_stream(25, 14, seed=107):
            assert enumerate_all_cliques(g) == len(brute_all_cliques(g))

    def test_sink_receives_each_clique_once(self):
        got = []
        enumerate_all_cliques(complete_graph(3), sink=got.append)
        assert sorted(got) == [(0,), (0, 1), (0, 1, 2), (0, 2), (1,), (1, 2), (2,)]

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_all_cliques(complete_graph(10), budget=100)


class TestCountBounds:
    def test_moon_moser_extremal_3_pow_n_over_3(self):
        for n in (6, 9, 12):
            assert len(enumerate_maximal_cliques(moon_moser(n))) == 3 ** (n // 3)

    def test_weakly_closed_clique_bound_spot_check(self):
        for g in random_graph_stream(30, 15, seed=109):
            count = len(enumerate_maximal_cliques(g))
            assert count <= 3 ** (g.n / 3)
            weak = weak_closure_number(g).weak_closure
            assert count <= 3 ** ((weak - 1) / 3) * g.n ** 2
