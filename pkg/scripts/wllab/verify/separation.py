"""Shared loop behind the separation-theorem checks.

A run enumerates the bounded pool, colors every graph with one shared
interner, buckets the graphs that pass the theorem's hypotheses by their
stabilized color multiset and hands every within-bucket pair to the
isomorphism oracle. Cross-bucket pairs are distinguishable by construction and
the pool holds one graph per isomorphism class, so those pairs need no oracle
call.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..canonical import ColorInterner, are_isomorphic
from ..core.errors import (
    CapacityError,
    ConstructionStuckError,
    PreconditionError,
)
from ..graph_core import DistanceMatrix, FeaturedGraph, all_pairs_distances
from ..graph_io import serialize_graph
from ..structure import (
    check_cycle_bound,
    is_connected,
    is_k_separable,
    is_k_strongly_separable,
)
from ..synth import enumerate_up_to
from ..wl_engines import (
    Variant,
    WlRun,
    indistinguishable,
    is_equivariant,
    run_variant,
)
from .constructive import construct_isomorphism
from .report import (
    DISTINGUISHABLE,
    INDISTINGUISHABLE,
    ISOMORPHIC,
    NON_ISOMORPHIC,
    FilteredPair,
    VerificationReport,
    Violation,
    oracle_verdict,
    wl_verdict,
)

logger = logging.getLogger(__name__)

K_SEPARABLE = "k-separable"
K_STRONGLY_SEPARABLE = "k-strongly-separable"

ExtraPair = Tuple[str, FeaturedGraph, FeaturedGraph]
Bucket = List[Tuple[FeaturedGraph, WlRun]]


@dataclass(frozen=True)
class TheoremSetup:
    """Variant, hypotheses and extras of one separation theorem."""

    theorem: str
    variant: Variant
    k: int
    max_circumference: int
    separability: Optional[str] = None
    construct: bool = False
    explore: bool = False

    def separability_of(
        self, g: FeaturedGraph, run: WlRun, dm: DistanceMatrix
    ) -> Optional[Tuple[int, ...]]:
        """Witness against the separability hypothesis, ``()`` when it holds."""
        if self.separability is None or self.explore:
            return ()
        if self.separability == K_SEPARABLE:
            check = is_k_separable
        else:
            check = is_k_strongly_separable
        report = check(g, self.k, run=run, dm=dm)
        return () if report.separable else report.witness

    def failing_hypotheses(
        self, g: FeaturedGraph, run: WlRun, dm: DistanceMatrix
    ) -> List[str]:
        reasons = []
        if not is_connected(g):
            reasons.append("connected")
        if not check_cycle_bound(g, self.max_circumference).satisfied:
            reasons.append("circumference")
        if self.separability_of(g, run, dm):
            reasons.append(self.separability)
        return reasons


class _SeparationRun:
    """State of one verification run: interner, seeded rng and the report."""

    def __init__(
        self,
        setup: TheoremSetup,
        report: VerificationReport,
        seed: int,
        soundness_trials: int,
    ):
        self.setup = setup
        self.report = report
        self.shared = ColorInterner()
        self.rng = np.random.default_rng(seed)
        self.soundness_trials = soundness_trials

    def color(self, g: FeaturedGraph, dm: Optional[DistanceMatrix] = None) -> WlRun:
        try:
            return run_variant(self.setup.variant, g, self.setup.k, self.shared, dm)
        except CapacityError:
            logger.error(f"Capacity exceeded on graph {serialize_graph(g)}")
            raise

    def relabelings(self, g: FeaturedGraph, run: WlRun, hypotheses_hold: bool) -> None:
        """Compare ``g`` with seeded random relabelings of itself."""
        for _ in range(self.soundness_trials):
            sigma = [int(s) for s in self.rng.permutation(g.n)]
            h = g.permuted(sigma)
            run_h = self.color(h)
            self.report.soundness_trials += 1
            mapping = {i: s for i, s in enumerate(sigma)}
            if not indistinguishable(run, run_h):
                self.report.add_violation(
                    Violation(
                        "soundness",
                        g,
                        h,
                        DISTINGUISHABLE,
                        ISOMORPHIC,
                        {"mapping": mapping},
                        f"{self.setup.variant.value} separates g from a relabeling",
                    )
                )
                continue
            if not is_equivariant(run, run_h, sigma):
                self.report.add_violation(
                    Violation(
                        "equivariance",
                        g,
                        h,
                        INDISTINGUISHABLE,
                        ISOMORPHIC,
                        {"mapping": mapping},
                        "colors of the relabeling are not the relabeled colors",
                    )
                )
            if self.setup.construct and hypotheses_hold:
                self.construct(g, h, run, run_h)

    def construct(
        self, g: FeaturedGraph, h: FeaturedGraph, run_g: WlRun, run_h: WlRun
    ) -> None:
        try:
            construct_isomorphism(g, h, self.setup.k, (run_g, run_h))
        except ConstructionStuckError as e:
            self.report.add_violation(
                Violation(
                    "construction",
                    g,
                    h,
                    INDISTINGUISHABLE,
                    oracle_verdict(are_isomorphic(g, h)),
                    e.to_dict(),
                    str(e),
                )
            )
            return
        except PreconditionError as e:
            self.report.add_violation(
                Violation(
                    "construction",
                    g,
                    h,
                    INDISTINGUISHABLE,
                    oracle_verdict(are_isomorphic(g, h)),
                    {"hypothesis": e.hypothesis},
                    str(e),
                )
            )
            return
        self.report.constructions += 1

    def compare_bucket(self, members: Bucket) -> int:
        compared = 0
        for (a, run_a), (b, run_b) in combinations(members, 2):
            compared += 1
            if not indistinguishable(run_a, run_b):
                continue
            mapping = are_isomorphic(a, b)
            if mapping is None:
                self.report.add_violation(
                    Violation(
                        "theorem",
                        a,
                        b,
                        INDISTINGUISHABLE,
                        NON_ISOMORPHIC,
                        detail=f"{self.setup.variant.value}(k={self.setup.k}) "
                        "cannot separate a non-isomorphic pair",
                    )
                )
            else:
                self.report.add_violation(
                    Violation(
                        "duplicate_class",
                        a,
                        b,
                        INDISTINGUISHABLE,
                        ISOMORPHIC,
                        {"mapping": mapping},
                        "enumeration emitted one class twice",
                    )
                )
        return compared

    def extra_pair(self, label: str, a: FeaturedGraph, b: FeaturedGraph) -> None:
        dm_a, dm_b = all_pairs_distances(a), all_pairs_distances(b)
        run_a, run_b = self.color(a, dm_a), self.color(b, dm_b)
        reasons: List[str] = []
        for reason in self.setup.failing_hypotheses(
            a, run_a, dm_a
        ) + self.setup.failing_hypotheses(b, run_b, dm_b):
            if reason not in reasons:
                reasons.append(reason)
        same = indistinguishable(run_a, run_b)
        mapping = are_isomorphic(a, b)
        self.report.pairs_checked += 1
        self.report.witnesses.append(
            {
                "label": label,
                "wl_verdict": wl_verdict(same),
                "oracle_verdict": oracle_verdict(mapping),
                "filtered": bool(reasons),
            }
        )
        if not same and mapping is not None:
            self.report.add_violation(
                Violation(
                    "soundness",
                    a,
                    b,
                    DISTINGUISHABLE,
                    ISOMORPHIC,
                    {"mapping": mapping, "label": label},
                )
            )
        if reasons:
            logger.info(f"Pair {label} excluded by hypotheses: {', '.join(reasons)}")
            self.report.filtered.append(
                FilteredPair(label, tuple(reasons), wl_verdict(same))
            )
            return
        if same and mapping is None:
            self.report.add_violation(
                Violation(
                    "theorem",
                    a,
                    b,
                    INDISTINGUISHABLE,
                    NON_ISOMORPHIC,
                    {"label": label},
                )
            )


def run_separation(
    setup: TheoremSetup,
    n_max: int,
    feature_classes: int = 1,
    seed: int = 0,
    soundness_trials: int = 1,
    extra_pairs: Sequence[ExtraPair] = (),
    limit: Optional[int] = None,
) -> VerificationReport:
    """Check "indistinguishable implies isomorphic" over the bounded pool.

    Args:
        setup: Variant and hypotheses of the theorem
        n_max: Largest vertex count enumerated
        feature_classes: Number of distinct feature values
        seed: Seed of the relabelings used by the soundness trials
        soundness_trials: Random relabelings compared per pool graph
        extra_pairs: ``(label, g, h)`` pairs checked on top of the pool
        limit: Enumeration capacity override

    Returns:
        Finished report; pairs failing a hypothesis are listed as filtered

    Raises:
        CapacityError: a graph exceeds a configured limit (logged first)
    """
    parameters: Dict[str, Any] = {
        "variant": setup.variant.value,
        "k": setup.k,
        "n_max": n_max,
        "feature_classes": feature_classes,
        "max_circumference": setup.max_circumference,
        "separability": None if setup.explore else setup.separability,
        "seed": seed,
        "soundness_trials": soundness_trials,
    }
    report = VerificationReport(setup.theorem, parameters, exploratory=setup.explore)
    state = _SeparationRun(setup, report, seed, soundness_trials)
    buckets: Dict[Tuple[Any, ...], Bucket] = defaultdict(list)

    candidates = 0
    for g in enumerate_up_to(n_max, setup.max_circumference, feature_classes):
        dm = all_pairs_distances(g)
        run = state.color(g, dm)
        report.graphs_checked += 1
        witness = setup.separability_of(g, run, dm)
        if witness:
            logger.debug(f"{setup.separability} fails on n={g.n}: {witness}")
        # constructions need the separability hypothesis, which explore drops
        state.relabelings(g, run, hypotheses_hold=not witness and not setup.explore)
        if witness:
            continue
        candidates += 1
        buckets[(g.n, run.stabilized_at, run.final_multiset())].append((g, run))

    logger.info(
        f"{setup.theorem}: {report.graphs_checked} graphs, {candidates} pass "
        f"the hypotheses, {len(buckets)} buckets"
    )
    compared = sum(state.compare_bucket(members) for members in buckets.values())
    report.pairs_checked += candidates * (candidates - 1) // 2
    for label, a, b in extra_pairs:
        state.extra_pair(label, a, b)

    report.summary = {
        "candidates": candidates,
        "buckets": len(buckets),
        "oracle_comparisons": compared,
        "largest_bucket": max((len(m) for m in buckets.values()), default=0),
    }
    report.finish()
    logger.info(
        f"{setup.theorem}: {report.status} with {len(report.violations)} "
        f"violations and {len(report.findings)} findings"
    )
    return report
