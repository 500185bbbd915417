"""Containment and strictness between classic WL, k-hop WL and k-hop subgraph WL."""

import logging
from collections import defaultdict
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..canonical import ColorInterner
from ..core.base_check import BaseCheck
from ..graph_core import FeaturedGraph, all_pairs_distances
from ..synth import enumerate_up_to, fixture
from ..wl_engines import (
    WlRun,
    classic_wl,
    indistinguishable,
    khop_subgraph_wl,
    khop_wl,
)
from .report import INDISTINGUISHABLE, VerificationReport, Violation, wl_verdict

logger = logging.getLogger(__name__)

DEFAULT_K_VALUES = (1, 2, 3)

# (fixture, k) pairs that classic WL cannot separate but k-hop subgraph WL can
STRICTNESS_WITNESSES = (("fig3_pair", 3), ("fig1_pair", 2))


def _bucket_key(run: WlRun) -> Tuple[Any, ...]:
    return (run.n, run.stabilized_at, run.final_multiset())


def _strictness(shared: ColorInterner, name: str, k: int) -> Dict[str, Any]:
    g, h = fixture(name).graphs
    classic_same = indistinguishable(classic_wl(g, shared), classic_wl(h, shared))
    subgraph_same = indistinguishable(
        khop_subgraph_wl(g, k, shared), khop_subgraph_wl(h, k, shared)
    )
    return {
        "label": name,
        "k": k,
        "classic": wl_verdict(classic_same),
        "subgraph": wl_verdict(subgraph_same),
        "holds": classic_same and not subgraph_same,
    }


def verify_hierarchy(
    n_max: int,
    k_values: Sequence[int] = DEFAULT_K_VALUES,
    feature_classes: int = 1,
    limit: Optional[int] = None,
) -> VerificationReport:
    """Every pair k-hop subgraph WL cannot separate is also inseparable by
    classic WL and by k-hop WL; fixture pairs show the containment is strict.

    The pool is every connected graph with at most ``n_max`` vertices.
    """
    report = VerificationReport(
        "hierarchy",
        {
            "n_max": n_max,
            "k_values": list(k_values),
            "feature_classes": feature_classes,
        },
    )
    shared = ColorInterner()
    pool: List[FeaturedGraph] = list(
        enumerate_up_to(n_max, n_max, feature_classes, limit=limit)
    )
    report.graphs_checked = len(pool)
    distances = [all_pairs_distances(g) for g in pool]
    classic = [classic_wl(g, shared) for g in pool]
    summary: Dict[str, Any] = {
        "classic_classes": len({_bucket_key(run) for run in classic})
    }

    for k in k_values:
        khop = [khop_wl(g, k, shared, dm) for g, dm in zip(pool, distances)]
        subgraph = [
            khop_subgraph_wl(g, k, shared, dm) for g, dm in zip(pool, distances)
        ]
        buckets: Dict[Tuple[Any, ...], List[int]] = defaultdict(list)
        for i, run in enumerate(subgraph):
            buckets[_bucket_key(run)].append(i)
        for members in buckets.values():
            for i, j in combinations(members, 2):
                if not indistinguishable(subgraph[i], subgraph[j]):
                    continue
                for name, runs in (("classic", classic), ("khop", khop)):
                    if not indistinguishable(runs[i], runs[j]):
                        report.add_violation(
                            Violation(
                                "hierarchy",
                                pool[i],
                                pool[j],
                                INDISTINGUISHABLE,
                                witness={"k": k, "separated_by": name},
                                detail=f"{name} separates a pair that "
                                f"{k}-hop subgraph WL cannot",
                            )
                        )
        report.pairs_checked += len(pool) * (len(pool) - 1) // 2
        summary[f"k={k}"] = {
            "khop_classes": len({_bucket_key(run) for run in khop}),
            "subgraph_classes": len(buckets),
        }
        logger.info(f"hierarchy k={k}: {len(buckets)} subgraph classes")

    for name, k in STRICTNESS_WITNESSES:
        witness = _strictness(shared, name, k)
        report.witnesses.append(witness)
        if not witness["holds"]:
            g, h = fixture(name).graphs
            report.add_violation(
                Violation(
                    "witness",
                    g,
                    h,
                    witness["classic"],
                    witness=witness,
                    detail=f"{name} does not separate classic from {k}-hop subgraph WL",
                )
            )
    report.summary = summary
    return report.finish()


class HierarchyCheck(BaseCheck):
    """Check wrapper for :func:`verify_hierarchy`."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("hierarchy", config)

    def validate_config(self) -> bool:
        k_values = self.config.get("k_values", list(DEFAULT_K_VALUES))
        if not k_values or not all(
            isinstance(k, int) and not isinstance(k, bool) and k >= 1
            for k in k_values
        ):
            self.logger.error("Parameter 'k_values' must list integers >= 1")
            return False
        return all(
            value is not None
            for value in (
                self.int_param("n_max", 7, minimum=1),
                self.int_param("classes", 1, minimum=1),
            )
        )

    def run(self) -> VerificationReport:
        return verify_hierarchy(
            self.config.get("n_max", 7),
            tuple(self.config.get("k_values", DEFAULT_K_VALUES)),
            self.config.get("classes", 1),
        )
