#!/usr/bin/env python3
"""Tests for fixtures, exhaustive enumeration and random sampling."""

import sys
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

# Add the scripts directory to the path
sys.path.insert(0, str(Path(__file__).parent.parent / "scripts"))

from strategies import nx_isomorphic  # noqa: E402
from wllab.core.errors import (  # noqa: E402
    CapacityError,
    InputError,
    SamplingBudgetError,
)
from wllab.structure import circumference, is_connected  # noqa: E402
from wllab.synth import (  # noqa: E402
    FIXTURE_NAMES,
    cycle_pair,
    enumerate_connected,
    enumerate_up_to,
    fixture,
    random_bounded_graph,
)

# connected graphs and trees on n = 1..7 vertices
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11]


class TestFixtures:
    """Test cases for the hand-drawn fixtures."""

    def test_names(self):
        """Test the registry lists every fixture."""
        assert FIXTURE_NAMES == ["fig1_pair", "fig3_pair", "fig4_pair"]

    def test_fig1_shape(self):
        """Test two squares and an octagon on the same labels."""
        left, right = fixture("fig1_pair").graphs
        assert left.n == right.n == 8
        assert len(left.edges) == len(right.edges) == 8
        assert left.labels == right.labels
        assert left.label(0) == "v1"

    def test_fig3_shape(self):
        """Test both fig3 graphs have 14 vertices in 7 feature classes."""
        left, right = fixture("fig3_pair").graphs
        assert left.n == right.n == 14
        assert len({h for h in left.features}) == 7
        assert right.label(0) == "v15"

    def test_fig4_shape(self):
        """Test K3,3 and the prism are cubic on 6 vertices."""
        for g in fixture("fig4_pair").graphs:
            assert g.n == 6
            assert all(g.degree(v) == 3 for v in range(6))

    def test_unknown_fixture(self):
        """Test unknown names raise an input error listing the known ones."""
        with pytest.raises(InputError, match="fig1_pair"):
            fixture("fig9_pair")

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_cycle_pair(self, k):
        """Test two (2k+2)-cycles against one (4k+4)-cycle."""
        split, whole = cycle_pair(k)
        assert split.n == whole.n == 4 * k + 4
        assert not is_connected(split)
        assert is_connected(whole)
        assert circumference(whole).circumference == 4 * k + 4

    def test_cycle_pair_rejects_bad_k(self):
        """Test k must be positive."""
        with pytest.raises(InputError):
            cycle_pair(0)


class TestEnumeration:
    """Test cases for enumerate_connected and enumerate_up_to."""

    @pytest.mark.parametrize("n", range(1, 7))
    def test_connected_counts(self, n):
        """Test the number of connected graphs on n vertices."""
        assert len(list(enumerate_connected(n, n))) == CONNECTED_COUNTS[n - 1]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_tree_counts(self, n):
        """Test circumference 0 leaves exactly the trees."""
        assert len(list(enumerate_connected(n, 0))) == TREE_COUNTS[n - 1]

    def test_counts_match_atlas(self):
        """Test against the connected graphs of the networkx atlas."""
        for n in range(1, 6):
            atlas = [
                a for a in nx.graph_atlas_g() if len(a) == n and nx.is_connected(a)
            ]
            assert len(list(enumerate_connected(n, n))) == len(atlas)

    def test_circumference_bound(self):
        """Test the paths, star and paw are the 4-vertex graphs without 4-cycles."""
        graphs = list(enumerate_connected(4, 3))
        assert len(graphs) == 3
        assert all(circumference(g).circumference <= 3 for g in graphs)

    def test_two_feature_classes(self):
        """Test featured classes: 2 on K1, 3 on K2, 10 on three vertices."""
        assert len(list(enumerate_connected(1, 1, feature_classes=2))) == 2
        assert len(list(enumerate_connected(2, 2, feature_classes=2))) == 3
        assert len(list(enumerate_connected(3, 3, feature_classes=2))) == 10

    def test_pairwise_non_isomorphic(self):
        """Test no two enumerated featured graphs are isomorphic."""
        graphs = list(enumerate_connected(4, 4, feature_classes=2))
        for a, b in combinations(graphs, 2):
            assert not nx_isomorphic(a, b)

    def test_deterministic_order(self):
        """Test enumeration order is reproducible."""
        assert list(enumerate_up_to(5, 3)) == list(enumerate_up_to(5, 3))

    def test_up_to_concatenates(self):
        """Test enumerate_up_to streams every order from n_min."""
        assert len(list(enumerate_up_to(4, 4, n_min=2))) == 1 + 2 + 6

    def test_capacity(self):
        """Test orders above the limit raise before any output."""
        with pytest.raises(CapacityError):
            next(enumerate_connected(9, 9))
        with pytest.raises(CapacityError):
            next(enumerate_connected(8, 8, feature_classes=2))

    def test_invalid_arguments(self):
        """Test n and the class count must be positive."""
        with pytest.raises(InputError):
            next(enumerate_connected(0, 0))
        with pytest.raises(InputError):
            next(enumerate_connected(3, 3, feature_classes=0))


class TestSampling:
    """Test cases for random_bounded_graph."""

    def test_seeded(self):
        """Test equal seeds give equal graphs."""
        a = random_bounded_graph(12, 5, feature_classes=3, seed=7)
        b = random_bounded_graph(12, 5, feature_classes=3, seed=7)
        assert a == b

    @pytest.mark.parametrize("seed", range(5))
    def test_bound_respected(self, seed):
        """Test samples are connected and within the cycle bound."""
        g = random_bounded_graph(10, 5, seed=seed)
        assert is_connected(g)
        assert circumference(g).circumference <= 5

    def test_trees(self):
        """Test a zero bound yields trees."""
        g = random_bounded_graph(10, 0, seed=3)
        assert len(g.edges) == 9
        assert is_connected(g)

    def test_feature_classes(self):
        """Test features come from the requested classes."""
        g = random_bounded_graph(30, 0, feature_classes=2, seed=1)
        assert {h for h in g.features} <= {(0.0,), (1.0,)}

    def test_budget_exhausted(self):
        """Test an impossible request fails after the budget."""
        with pytest.raises(SamplingBudgetError) as info:
            random_bounded_graph(10, 3, seed=0, budget=3, extra_edge_p=1.0)
        assert info.value.draws == 3

    def test_invalid_arguments(self):
        """Test n must be positive."""
        with pytest.raises(InputError):
            random_bounded_graph(0, 3)


if __name__ == "__main__":
    pytest.main([__file__])
