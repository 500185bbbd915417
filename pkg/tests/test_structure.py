#!/usr/bin/env python3
"""Tests for connectivity, circumference, separability and the boundary lemma."""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings

# Add the scripts directory to the path
sys.path.insert(0, str(Path(__file__).parent.parent / "scripts"))

from strategies import featured_graphs  # noqa: E402
from wllab.core.errors import CapacityError, InputError, PreconditionError  # noqa: E402
from wllab.graph_core import FeaturedGraph, all_pairs_distances  # noqa: E402
from wllab.structure import (  # noqa: E402
    check_cycle_bound,
    check_lemma_c1,
    circumference,
    is_connected,
    is_k_separable,
    is_k_strongly_separable,
    longest_cycle_by_enumeration,
)
from wllab.synth import cycle_graph, fixture  # noqa: E402


def complete_graph(n):
    return FeaturedGraph.from_edges(
        n, [(a, b) for a in range(n) for b in range(a + 1, n)]
    )


def star(n):
    return FeaturedGraph.from_edges(n, [(0, v) for v in range(1, n)])


class TestConnectivity:
    """Test cases for is_connected."""

    def test_single_vertex(self):
        """Test one vertex is connected."""
        assert is_connected(FeaturedGraph.from_edges(1, []))

    def test_two_components(self):
        """Test the two squares of fig1 are not connected."""
        left, right = fixture("fig1_pair").graphs
        assert not is_connected(left)
        assert is_connected(right)


class TestCircumference:
    """Test cases for the longest-cycle search."""

    def test_tree_is_zero(self):
        """Test acyclic graphs have circumference 0."""
        report = circumference(star(6))
        assert report.circumference == 0
        assert report.witness_cycle is None

    @pytest.mark.parametrize("n", [3, 4, 7, 12])
    def test_cycles(self, n):
        """Test a cycle's circumference is its length."""
        assert circumference(cycle_graph(n)).circumference == n

    def test_complete_graph_is_hamiltonian(self):
        """Test K6 has a 6-cycle."""
        assert circumference(complete_graph(6)).circumference == 6

    def test_fixtures(self):
        """Test the fixture circumferences."""
        fig3 = fixture("fig3_pair").graphs
        fig4 = fixture("fig4_pair").graphs
        assert [circumference(g).circumference for g in fig3] == [3, 6]
        assert [circumference(g).circumference for g in fig4] == [6, 6]

    def test_bound_with_early_exit(self):
        """Test a violated bound stops early and returns a witness."""
        report = check_cycle_bound(cycle_graph(8), 5)
        assert not report.satisfied
        assert not report.exact
        assert len(report.witness_cycle) > 5

    def test_exact_bound(self):
        """Test the exact query reports the true circumference."""
        report = check_cycle_bound(cycle_graph(8), 5, exact=True)
        assert report.circumference == 8
        assert report.exact
        assert not report.satisfied

    def test_bound_satisfied(self):
        """Test a satisfied bound carries no witness."""
        report = check_cycle_bound(fixture("fig3_pair").graphs[1], 7)
        assert report.satisfied
        assert report.witness_cycle is None
        assert report.to_dict()["circumference"] == 6

    def test_negative_bound(self):
        """Test negative bounds are invalid."""
        with pytest.raises(InputError):
            check_cycle_bound(cycle_graph(3), -1)

    def test_capacity_per_component(self):
        """Test only cyclic components count against the limit."""
        with pytest.raises(CapacityError):
            circumference(cycle_graph(25))
        path = FeaturedGraph.from_edges(30, [(i, i + 1) for i in range(29)])
        assert circumference(path).circumference == 0
        assert circumference(cycle_graph(25), limit=25).circumference == 25

    @settings(max_examples=80, deadline=None)
    @given(featured_graphs(max_n=8, classes=1))
    def test_matches_enumeration(self, g):
        """Test the subset DP against plain path enumeration, witness included."""
        report = circumference(g)
        length, _ = longest_cycle_by_enumeration(g)
        assert report.circumference == length
        if length:
            cycle = report.witness_cycle
            assert len(cycle) == len(set(cycle)) == length
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                assert g.has_edge(a, b)


class TestSeparability:
    """Test cases for k-separability and strong separability."""

    def test_fig3_is_3_separable(self):
        """Test both fig3 graphs are 3-separable."""
        for g in fixture("fig3_pair").graphs:
            report = is_k_separable(g, 3)
            assert report
            assert report.witness is None

    def test_uniform_cycle_not_separable(self):
        """Test the two vertices at distance 2 on a 6-cycle share a color."""
        report = is_k_separable(cycle_graph(6), 2)
        assert not report
        u, v1, v2 = report.witness
        dm = all_pairs_distances(cycle_graph(6))
        assert dm.distance(u, v1) == dm.distance(u, v2) == 2

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_fig4_not_strongly_separable(self, k):
        """Test uniform K3,3 and prism fail strong separability at every radius."""
        for g in fixture("fig4_pair").graphs:
            report = is_k_strongly_separable(g, k)
            assert not report.separable
            v1, v2 = report.witness
            assert 0 < all_pairs_distances(g).distance(v1, v2) <= 2 * k

    def test_distinct_features_strongly_separable(self):
        """Test a path with all-distinct features is strongly separable."""
        path = FeaturedGraph.from_edges(
            4, [(0, 1), (1, 2), (2, 3)], [(float(i),) for i in range(4)]
        )
        assert is_k_strongly_separable(path, 2).separable
        assert is_k_strongly_separable(path, 2).to_dict()["witness"] is None

    def test_run_must_match(self):
        """Test a run of the wrong variant is rejected."""
        from wllab.canonical import ColorInterner
        from wllab.wl_engines import classic_wl

        g = cycle_graph(5)
        with pytest.raises(InputError):
            is_k_separable(g, 2, run=classic_wl(g, ColorInterner()))


class TestBoundaryLemma:
    """Test cases for check_lemma_c1 and its hypotheses."""

    def test_holds_on_short_cycle(self):
        """Test the lemma on a 5-cycle with k = 2."""
        assert check_lemma_c1(cycle_graph(5), {0}, 1, 2)

    def test_holds_on_tree(self):
        """Test the lemma on a path with a two-vertex S."""
        path = FeaturedGraph.from_edges(7, [(i, i + 1) for i in range(6)])
        assert check_lemma_c1(path, {2, 3}, 4, 2)

    @pytest.mark.parametrize(
        "S,u1,k,hypothesis",
        [
            ({0}, 1, 1, "k"),
            (set(), 1, 2, "S-nonempty"),
            ({0, 1}, 1, 2, "u1-outside-S"),
            ({0}, 2, 2, "u1-adjacent"),
            ({0, 2}, 1, 2, "S-connected"),
        ],
    )
    def test_hypotheses(self, S, u1, k, hypothesis):
        """Test each unmet hypothesis is named."""
        with pytest.raises(PreconditionError) as info:
            check_lemma_c1(cycle_graph(5), S, u1, k)
        assert info.value.hypothesis == hypothesis

    def test_long_cycle_rejected(self):
        """Test a 7-cycle exceeds the bound for k = 2."""
        with pytest.raises(PreconditionError) as info:
            check_lemma_c1(cycle_graph(7), {0}, 1, 2)
        assert info.value.hypothesis == "circumference"

    def test_graph_checked_skips_graph_hypotheses(self):
        """Test the caller can vouch for the graph-level hypotheses."""
        result = check_lemma_c1(cycle_graph(7), {0}, 1, 2, graph_checked=True)
        assert isinstance(result, bool)


if __name__ == "__main__":
    pytest.main([__file__])
