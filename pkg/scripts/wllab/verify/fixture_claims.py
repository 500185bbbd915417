"""Exact claims about the hand-drawn fixtures and the cycle family."""

import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..canonical import ColorInterner, are_isomorphic, canonical_code
from ..core.base_check import BaseCheck
from ..graph_core import FeaturedGraph, extract_rooted_subgraph
from ..structure import (
    check_cycle_bound,
    is_connected,
    is_k_separable,
    is_k_strongly_separable,
)
from ..synth import cycle_pair, fixture
from ..wl_engines import classic_wl, indistinguishable, khop_subgraph_wl, khop_wl
from .report import VerificationReport, Violation

logger = logging.getLogger(__name__)

Pair = Tuple[FeaturedGraph, FeaturedGraph]
Claim = Tuple[str, Pair, Callable[[], bool]]


class _Claims:
    """Claim predicates over one shared interner."""

    def __init__(self):
        self.shared = ColorInterner()

    def classic_same(self, pair: Pair) -> bool:
        g, h = pair
        return indistinguishable(classic_wl(g, self.shared), classic_wl(h, self.shared))

    def classic_stable_at_once(self, pair: Pair) -> bool:
        return all(classic_wl(g, self.shared).stabilized_at == 0 for g in pair)

    def subgraph_same(self, pair: Pair, k: int) -> bool:
        g, h = pair
        return indistinguishable(
            khop_subgraph_wl(g, k, self.shared), khop_subgraph_wl(h, k, self.shared)
        )

    def khop_same(self, pair: Pair, k: int) -> bool:
        g, h = pair
        return indistinguishable(khop_wl(g, k, self.shared), khop_wl(h, k, self.shared))

    def rooted_codes_differ(self, pair: Pair, v: int, k: int) -> bool:
        """Canonical codes of the feature-colored rooted k-hop subgraphs at ``v``."""
        codes = []
        for g in pair:
            colors = classic_wl(g, self.shared).history[0].colors
            codes.append(canonical_code(extract_rooted_subgraph(g, colors, v, k)))
        return codes[0] != codes[1]


def _claims() -> List[Claim]:
    c = _Claims()
    fig1 = fixture("fig1_pair").graphs
    fig3 = fixture("fig3_pair").graphs
    fig4 = fixture("fig4_pair").graphs
    claims: List[Claim] = [
        ("fig1: classic WL indistinguishable", fig1, lambda: c.classic_same(fig1)),
        (
            "fig1: 2-hop subgraph WL distinguishes",
            fig1,
            lambda: not c.subgraph_same(fig1, 2),
        ),
        (
            "fig1: rooted 2-hop subgraphs at v1 have different codes",
            fig1,
            lambda: c.rooted_codes_differ(fig1, 0, 2),
        ),
        ("fig3: both connected", fig3, lambda: all(map(is_connected, fig3))),
        (
            "fig3: no cycle longer than 7",
            fig3,
            lambda: all(check_cycle_bound(g, 7).satisfied for g in fig3),
        ),
        (
            "fig3: both 3-separable",
            fig3,
            lambda: all(is_k_separable(g, 3).separable for g in fig3),
        ),
        (
            "fig3: classic WL stable at iteration 0",
            fig3,
            lambda: c.classic_stable_at_once(fig3),
        ),
        ("fig3: classic WL indistinguishable", fig3, lambda: c.classic_same(fig3)),
        (
            "fig3: 3-hop subgraph WL distinguishes",
            fig3,
            lambda: not c.subgraph_same(fig3, 3),
        ),
        ("fig3: non-isomorphic", fig3, lambda: are_isomorphic(*fig3) is None),
        ("fig4: non-isomorphic", fig4, lambda: are_isomorphic(*fig4) is None),
    ]
    for k in (1, 2, 3):
        claims.append(
            (
                f"fig4: neither graph is {k}-strongly separable",
                fig4,
                lambda k=k: not any(
                    is_k_strongly_separable(g, k).separable for g in fig4
                ),
            )
        )
    for k in range(1, 6):
        claims.append(
            (
                f"fig4: {k}-hop WL indistinguishable",
                fig4,
                lambda k=k: c.khop_same(fig4, k),
            )
        )
    for k in (1, 2, 3):
        pair = cycle_pair(k)
        claims.append(
            (
                f"cycle_pair({k}): {k}-hop subgraph WL indistinguishable",
                pair,
                lambda k=k, pair=pair: c.subgraph_same(pair, k),
            )
        )
    first = cycle_pair(1)
    claims.append(
        (
            "cycle_pair(1): 2-hop subgraph WL distinguishes",
            first,
            lambda: not c.subgraph_same(first, 2),
        )
    )
    return claims


def verify_fixtures() -> VerificationReport:
    """Evaluate every fixture claim; a claim that does not hold is a violation."""
    report = VerificationReport("fixtures", {})
    claims = _claims()
    for claim, pair, predicate in claims:
        holds = bool(predicate())
        report.pairs_checked += 1
        report.witnesses.append({"claim": claim, "holds": holds})
        if not holds:
            logger.warning(f"Fixture claim failed: {claim}")
            report.add_violation(
                Violation("fixture", pair[0], pair[1], detail=claim)
            )
    report.graphs_checked = len({g for _, pair, _ in claims for g in pair})
    return report.finish()


class FixturesCheck(BaseCheck):
    """Check wrapper for :func:`verify_fixtures`."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("fixtures", config)

    def validate_config(self) -> bool:
        return True

    def run(self) -> VerificationReport:
        return verify_fixtures()
