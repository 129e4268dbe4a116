import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netclass.errors import ParseError
from netclass.generators import (complete_graph, cycle_graph, disjoint_union,
                                 path_graph, petersen_graph, star_graph)
from netclass.graph import (Graph, bfs_levels, closure_rate_curve,
                            common_neighbors, connected_components,
                            jaccard_similarity, largest_component,
                            load_edge_list, wedge_count)

from conftest import (adjacency_sets, brute_common_neighbors, brute_wedges,
                      random_graph_stream)


class TestLoadEdgeList:
    def test_two_edge_path(self):
        g = load_edge_list("0 1\n1 2")
        assert (g.n, g.m) == (3, 2)

    def test_self_loop_and_duplicate_dropped(self):
        g, stats = load_edge_list("0 0\n0 1\n1 0", return_stats=True)
        assert (g.n, g.m) == (2, 1)
        assert stats.self_loops == 1
        assert stats.duplicates == 1
        assert stats.raw_lines == 3

    def test_comments_and_blank_lines(self):
        g = load_edge_list("# header\n\n0 1\n# trailing\n2 3\n")
        assert (g.n, g.m) == (4, 2)

    def test_empty_input_is_valid_empty_graph(self):
        g = load_edge_list("# nothing\n")
        assert (g.n, g.m) == (0, 0)

    def test_malformed_arity_reports_line(self):
        with pytest.raises(ParseError, match="line 2"):
            load_edge_list("0 1\n1 2 3")

    def test_non_integer_token_reports_line(self):
        with pytest.raises(ParseError, match="line 1"):
            load_edge_list("zero 1\n")

    def test_self_loop_rejected_when_disallowed(self):
        with pytest.raises(ParseError, match="self-loop"):
            load_edge_list("3 3\n", allow_self_loops=False)

    def test_original_ids_preserved(self):
        g = load_edge_list("100 7\n7 42\n")
        assert sorted(g.labels.tolist()) == [7, 42, 100]
        u, v = g.index_of(100), g.index_of(7)
        assert g.has_edge(u, v)
        assert g.label_of(g.index_of(42)) == 42

    def test_self_loop_only_vertex_still_counted(self):
        # SNAP node counts include ids that only ever appear in loops
        g = load_edge_list("5 5\n0 1\n")
        assert (g.n, g.m) == (3, 1)

    def test_symmetrize_false_requires_both_orientations(self):
        load_edge_list("0 1\n1 0\n", symmetrize=False)
        with pytest.raises(ParseError, match="reverse"):
            load_edge_list("0 1\n1 2\n2 1\n", symmetrize=False)

    def test_loading_from_file(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("# c\n1 2\n2 3\n")
        g = load_edge_list(str(f))
        assert (g.n, g.m) == (3, 2)

    def test_loaded_graphs_validate(self):
        for g in random_graph_stream(15, 30, seed=11):
            g.validate()


class TestCommonNeighbors:
    def test_path_endpoints_share_center(self):
        g = path_graph(3)
        assert common_neighbors(g, 0, 2) == 1

    def test_diamond(self):
        g = Graph.from_edges([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        assert common_neighbors(g, 0, 1) == 2

    def test_petersen_matches_brute_force(self):
        g = petersen_graph()
        for u, v in itertools.combinations(range(10), 2):
            assert common_neighbors(g, u, v) == brute_common_neighbors(g, u, v)
            if not g.has_edge(u, v):
                assert common_neighbors(g, u, v) == 1

    def test_same_vertex_rejected(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            common_neighbors(g, 1, 1)
        with pytest.raises(ValueError):
            common_neighbors(g, 0, 99)


class TestJaccard:
    def test_triangle_edge(self):
        assert jaccard_similarity(complete_graph(3), 0, 1) == 1.0

    def test_path_edge(self):
        assert jaccard_similarity(path_graph(3), 0, 1) == 0.0

    def test_isolated_edge_degenerate_denominator(self):
        assert jaccard_similarity(path_graph(2), 0, 1) == 0.0

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError, match="not an edge"):
            jaccard_similarity(path_graph(3), 0, 2)

    def test_unit_similarity_iff_equal_punctured_neighborhoods(self):
        for g in random_graph_stream(25, 12, seed=3):
            adj = adjacency_sets(g)
            for u, v in map(tuple, g.edge_array().tolist()):
                punctured_equal = adj[u] - {v} == adj[v] - {u}
                expected = punctured_equal and len(adj[u] - {v}) > 0
                assert (jaccard_similarity(g, u, v) == 1.0) == expected


class TestWedges:
    def test_examples(self):
        assert wedge_count(complete_graph(3)) == 3
        assert wedge_count(star_graph(3)) == 3
        assert wedge_count(path_graph(4)) == 2

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2 ** 31 - 1))
    def test_matches_two_hop_enumeration(self, seed):
        g = next(random_graph_stream(1, 50, seed=seed))
        assert wedge_count(g) == brute_wedges(g)


class TestClosureRateCurve:
    def test_union_of_cliques_fully_closed(self):
        g = disjoint_union(complete_graph(4), complete_graph(3),
                           complete_graph(5))
        curve = closure_rate_curve(g)
        for k in curve.ks.tolist():
            assert curve.rate(k) == 1.0

    def test_square_has_two_open_pairs(self):
        curve = closure_rate_curve(cycle_graph(4))
        assert curve.ks.tolist() == [2]
        assert curve.pair_counts.tolist() == [2]
        assert curve.closed_counts.tolist() == [0]
        assert curve.rate(2) == 0.0

    def test_pair_totals_match_brute_force(self):
        for g in random_graph_stream(20, 50, seed=5):
            adj = adjacency_sets(g)
            expected = sum(
                1 for u, v in itertools.combinations(range(g.n), 2)
                if adj[u] & adj[v])
            curve = closure_rate_curve(g)
            assert int(curve.pair_counts.sum()) == expected
            assert np.all(curve.closed_counts <= curve.pair_counts)

    def test_edge_density(self):
        g = complete_graph(5)
        assert closure_rate_curve(g).edge_density == 1.0
        assert closure_rate_curve(path_graph(3)).edge_density == pytest.approx(2 / 3)

    def test_csv_format(self):
        csv = closure_rate_curve(complete_graph(3)).to_csv()
        lines = csv.strip().split("\n")
        assert lines[0] == "k,pairs,closed,rate"
        assert lines[1] == "1,3,3,1"


class TestBfs:
    def test_path_distances(self):
        levels = bfs_levels(path_graph(3), 0)
        assert levels.dist.tolist() == [0, 1, 2]
        assert levels.level_sizes.tolist() == [1, 1, 1]

    def test_star_levels(self):
        levels = bfs_levels(star_graph(4), 0)
        assert levels.dist.tolist() == [0, 1, 1, 1, 1]
        assert levels.level_sizes.tolist() == [1, 4]

    def test_disconnected_marked_infinite(self):
        g = Graph.from_edges([(0, 1)], n=3)
        levels = bfs_levels(g, 0)
        assert levels.distance(2) == math.inf
        assert levels.dist[2] == -1

    def test_invalid_source(self):
        with pytest.raises(ValueError):
            bfs_levels(path_graph(2), 5)

    def test_matches_brute_force_bfs(self):
        from conftest import brute_all_pairs_dist
        for g in random_graph_stream(10, 40, seed=9):
            oracle = brute_all_pairs_dist(g)
            for s in range(g.n):
                assert bfs_levels(g, s).dist.tolist() == oracle[s].tolist()


class TestInducedSubgraph:
    def test_k4_minus_vertex(self):
        sub = complete_graph(4).induced_subgraph([0, 1, 3])
        assert (sub.n, sub.m) == (3, 3)

    def test_adjacent_pair_of_cycle(self):
        sub = cycle_graph(5).induced_subgraph([1, 2])
        assert (sub.n, sub.m) == (2, 1)

    def test_empty_selection(self):
        sub = complete_graph(4).induced_subgraph([])
        assert (sub.n, sub.m) == (0, 0)

    def test_label_composition(self):
        g = load_edge_list("10 20\n20 30\n30 10\n")
        sub = g.induced_subgraph([g.index_of(10), g.index_of(30)])
        assert sorted(sub.labels.tolist()) == [10, 30]
        assert sub.m == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            complete_graph(3).induced_subgraph([0, 7])


class TestDegreeDistribution:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2 ** 31 - 1))
    def test_mass_identities(self, seed):
        g = next(random_graph_stream(1, 40, seed=seed))
        dd = g.degree_distribution()
        counts = dd.counts
        assert int(counts.sum()) == g.n
        assert int((np.arange(len(counts)) * counts).sum()) == 2 * g.m
        if g.n:
            assert dd.count(dd.d_max) >= 1


class TestComponents:
    def test_components_and_largest(self):
        g = disjoint_union(path_graph(4), complete_graph(3), path_graph(2))
        comp = connected_components(g)
        assert len(set(comp.tolist())) == 3
        assert largest_component(g).n == 4
