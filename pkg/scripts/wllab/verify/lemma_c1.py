"""Exhaustive check of the neighborhood-boundary lemma used by the k >= 2 proof.

For a connected set S and a vertex u1 outside S adjacent to it, no edge may
join N_k(u1) minus N_k(S) to N_k(S) minus N_k(u1) when the graph has no cycle
longer than 2k+1.
"""

import logging
from typing import Any, Dict, Iterator, List, Optional, Sequence

from ..core.base_check import BaseCheck
from ..core.errors import InputError
from ..graph_core import all_pairs_distances
from ..structure import check_lemma_c1
from ..synth import enumerate_up_to
from .report import VerificationReport, Violation

logger = logging.getLogger(__name__)


def _members(mask: int) -> List[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _is_connected_mask(mask: int, neighbor_masks: Sequence[int]) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        grown = 0
        for v in _members(frontier):
            grown |= neighbor_masks[v]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen == mask


def connected_subsets(n: int, neighbor_masks: Sequence[int]) -> Iterator[int]:
    """Bitmasks of the nonempty proper vertex subsets inducing connected graphs."""
    for mask in range(1, (1 << n) - 1):
        if _is_connected_mask(mask, neighbor_masks):
            yield mask


def verify_lemma_c1(
    k: int, n_max: int, feature_classes: int = 1, limit: Optional[int] = None
) -> VerificationReport:
    """Run :func:`check_lemma_c1` on every (S, u1) of every pool graph.

    Raises:
        InputError: k < 2
    """
    if k < 2:
        raise InputError(f"the boundary lemma needs k >= 2, got {k}")
    report = VerificationReport(
        "lemma-c1",
        {
            "k": k,
            "n_max": n_max,
            "feature_classes": feature_classes,
            "max_circumference": 2 * k + 1,
        },
    )
    instances = 0
    for g in enumerate_up_to(n_max, 2 * k + 1, feature_classes, limit=limit):
        report.graphs_checked += 1
        dm = all_pairs_distances(g)
        neighbor_masks = [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]
        for mask in connected_subsets(g.n, neighbor_masks):
            reach = 0
            for s in _members(mask):
                reach |= neighbor_masks[s]
            for u1 in _members(reach & ~mask):
                instances += 1
                S = _members(mask)
                if not check_lemma_c1(g, S, u1, k, dm=dm, graph_checked=True):
                    report.add_violation(
                        Violation(
                            "lemma",
                            g,
                            witness={"S": S, "u1": u1},
                            detail="an edge crosses the two neighborhood differences",
                        )
                    )
    report.pairs_checked = instances
    report.summary = {"instances": instances}
    report.finish()
    logger.info(
        f"lemma-c1(k={k}): {instances} instances on {report.graphs_checked} graphs, "
        f"{report.status}"
    )
    return report


class LemmaC1Check(BaseCheck):
    """Check wrapper for :func:`verify_lemma_c1`."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("lemma-c1", config)

    def validate_config(self) -> bool:
        return all(
            value is not None
            for value in (
                self.int_param("k", 2, minimum=2),
                self.int_param("n_max", 7, minimum=1),
                self.int_param("classes", 1, minimum=1),
            )
        )

    def run(self) -> VerificationReport:
        return verify_lemma_c1(
            self.config.get("k", 2),
            self.config.get("n_max", 7),
            self.config.get("classes", 1),
        )
