#!/usr/bin/env python3
"""Tests for graphs, distances and rooted neighborhoods."""

import sys
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings

# Add the scripts directory to the path
sys.path.insert(0, str(Path(__file__).parent.parent / "scripts"))

from strategies import featured_graphs, to_networkx  # noqa: E402
from wllab.core.errors import InputError  # noqa: E402
from wllab.graph_core import (  # noqa: E402
    UNREACHABLE,
    FeaturedGraph,
    all_pairs_distances,
    extract_rooted_subgraph,
    k_hop_neighborhood,
)
from wllab.synth import cycle_graph  # noqa: E402


def path_graph(n):
    return FeaturedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


class TestFeaturedGraph:
    """Test cases for graph construction and derived graphs."""

    def test_from_edges_normalizes(self):
        """Test edges are stored with the smaller endpoint first."""
        g = FeaturedGraph.from_edges(3, [(2, 1), (0, 1)])
        assert g.edges == frozenset({(0, 1), (1, 2)})
        assert g.features == ((0.0,), (0.0,), (0.0,))
        assert g.m == 1
        assert g.adjacency == ((1,), (0, 2), (1,))

    def test_duplicate_edge_rejected(self):
        """Test an edge given in both directions is a duplicate."""
        with pytest.raises(InputError, match="duplicate"):
            FeaturedGraph.from_edges(3, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self):
        """Test self-loops are not graphs we accept."""
        with pytest.raises(InputError, match="self-loop"):
            FeaturedGraph.from_edges(2, [(1, 1)])

    def test_mixed_feature_dimensions_rejected(self):
        """Test all feature vectors share one dimension."""
        with pytest.raises(InputError, match="mixed"):
            FeaturedGraph.from_edges(2, [(0, 1)], [(1.0,), (1.0, 2.0)])

    def test_empty_graph_rejected(self):
        """Test a graph needs at least one vertex."""
        with pytest.raises(InputError):
            FeaturedGraph.from_edges(0, [])

    def test_feature_key_is_bit_exact(self):
        """Test 0.1 + 0.2 and 0.3 get different keys."""
        g = FeaturedGraph.from_edges(2, [], [(0.1 + 0.2,), (0.3,)])
        assert g.feature_key(0) != g.feature_key(1)
        assert len(g.feature_key(0)) == 8

    def test_permuted_moves_vertices(self):
        """Test vertex i of g becomes vertex sigma[i]."""
        g = FeaturedGraph.from_edges(3, [(0, 1)], [(1.0,), (2.0,), (3.0,)])
        h = g.permuted([2, 0, 1])
        assert h.edges == frozenset({(0, 2)})
        assert h.features == ((2.0,), (3.0,), (1.0,))

    def test_permuted_rejects_non_permutation(self):
        """Test sigma must be a permutation."""
        with pytest.raises(InputError):
            path_graph(3).permuted([0, 0, 1])

    def test_disjoint_union(self):
        """Test the second graph is shifted past the first."""
        joined = path_graph(2).disjoint_union(path_graph(3))
        assert joined.n == 5
        assert joined.edges == frozenset({(0, 1), (2, 3), (3, 4)})

    def test_induced_subgraph(self):
        """Test the induced subgraph is re-indexed in vertex order."""
        sub = cycle_graph(6).induced_subgraph([5, 0, 1])
        assert sub.n == 3
        assert sub.edges == frozenset({(0, 1), (0, 2)})

    def test_labels_do_not_affect_equality(self):
        """Test labels are presentation only."""
        a = FeaturedGraph.from_edges(2, [(0, 1)], labels=["x", "y"])
        b = FeaturedGraph.from_edges(2, [(0, 1)])
        assert a == b
        assert a.label(0) == "x"
        assert b.label(1) == "v1"


class TestDistances:
    """Test cases for all-pairs distances and k-hop neighborhoods."""

    def test_path_distances(self):
        """Test distances along a path."""
        dm = all_pairs_distances(path_graph(4))
        assert dm.distance(0, 3) == 3
        assert dm[1, 2] == 1
        assert dm.at_distance(0, 2) == frozenset({2})

    def test_unreachable_pairs(self):
        """Test disconnected pairs are marked unreachable."""
        dm = all_pairs_distances(FeaturedGraph.from_edges(3, [(0, 1)]))
        assert dm.distance(0, 2) == UNREACHABLE
        assert dm.within(0, 5) == frozenset({0, 1})
        assert dm.set_distance(2, [0, 1]) == UNREACHABLE

    def test_neighborhood_contains_vertex(self):
        """Test N_k(v) always contains v."""
        dm = all_pairs_distances(cycle_graph(7))
        assert k_hop_neighborhood(dm, 0, 2) == frozenset({5, 6, 0, 1, 2})

    def test_neighborhood_rejects_bad_k(self):
        """Test the radius must be positive."""
        dm = all_pairs_distances(cycle_graph(4))
        with pytest.raises(InputError):
            k_hop_neighborhood(dm, 0, 0)

    @settings(max_examples=60, deadline=None)
    @given(featured_graphs(max_n=8))
    def test_distances_match_networkx(self, g):
        """Test BFS distances against networkx."""
        dm = all_pairs_distances(g)
        lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
        for u in range(g.n):
            for v in range(g.n):
                assert dm.distance(u, v) == lengths[u].get(v, UNREACHABLE)


class TestRootedSubgraph:
    """Test cases for rooted k-hop subgraph extraction."""

    def test_cycle_neighborhood(self):
        """Test the 1-hop subgraph of a cycle vertex is a path rooted at its middle."""
        rooted = extract_rooted_subgraph(cycle_graph(6), [0] * 6, 0, 1)
        assert rooted.vertex_ids == (0, 1, 5)
        assert rooted.root == 0
        assert rooted.edges == frozenset({(0, 1), (0, 2)})

    def test_colors_follow_vertices(self):
        """Test colors are taken from the parent coloring."""
        rooted = extract_rooted_subgraph(path_graph(4), [7, 8, 9, 10], 2, 1)
        assert rooted.vertex_ids == (1, 2, 3)
        assert rooted.colors == (8, 9, 10)
        assert rooted.root == 1

    def test_coloring_length_checked(self):
        """Test a coloring must cover every vertex."""
        with pytest.raises(InputError):
            extract_rooted_subgraph(path_graph(4), [0, 0], 0, 1)

    def test_relabeled_moves_root(self):
        """Test relabeling carries the root and the colors along."""
        rooted = extract_rooted_subgraph(path_graph(3), [1, 2, 3], 0, 2)
        moved = rooted.relabeled([2, 1, 0])
        assert moved.root == 2
        assert moved.colors == (3, 2, 1)
        assert moved.edges == frozenset({(1, 2), (0, 1)})


if __name__ == "__main__":
    pytest.main([__file__])
