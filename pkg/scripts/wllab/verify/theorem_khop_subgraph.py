"""k-hop subgraph WL on k-separable graphs with cycles of length at most 2k+1."""

from typing import Any, Dict, Optional, Sequence

from ..core.base_check import BaseCheck
from ..core.errors import InputError
from ..synth import fixture
from ..wl_engines import Variant
from .report import VerificationReport
from .separation import K_SEPARABLE, ExtraPair, TheoremSetup, run_separation


def verify_theorem_khop_subgraph(
    k: int,
    n_max: int,
    feature_classes: int = 1,
    explore: bool = False,
    seed: int = 0,
    soundness_trials: int = 1,
    extra_pairs: Sequence[ExtraPair] = (),
    limit: Optional[int] = None,
) -> VerificationReport:
    """Connected k-separable graphs with circumference <= 2k+1 that k-hop
    subgraph WL cannot separate must be isomorphic.

    Args:
        k: Radius, at least 2
        n_max: Largest vertex count enumerated
        feature_classes: Number of distinct feature values
        explore: Drop the k-separability hypothesis and report counterexamples
            as findings instead of violations
        seed: Seed of the soundness relabelings
        soundness_trials: Relabelings compared per pool graph
        extra_pairs: Labeled pairs checked on top of the pool
        limit: Enumeration capacity override

    Raises:
        InputError: k < 2
    """
    if k < 2:
        raise InputError(f"k-hop subgraph verification needs k >= 2, got {k}")
    setup = TheoremSetup(
        theorem="t35",
        variant=Variant.SUBGRAPH,
        k=k,
        max_circumference=2 * k + 1,
        separability=K_SEPARABLE,
        construct=True,
        explore=explore,
    )
    return run_separation(
        setup, n_max, feature_classes, seed, soundness_trials, extra_pairs, limit
    )


class T35Check(BaseCheck):
    """Check wrapper for :func:`verify_theorem_khop_subgraph`."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("t35", config)

    def validate_config(self) -> bool:
        return all(
            value is not None
            for value in (
                self.int_param("k", 2, minimum=2),
                self.int_param("n_max", 7, minimum=1),
                self.int_param("classes", 1, minimum=1),
                self.int_param("soundness_trials", 1),
                self.int_param("seed", 0),
            )
        )

    def run(self) -> VerificationReport:
        k = self.config.get("k", 2)
        extra = []
        if self.config.get("fixture_pairs", True):
            left, right = fixture("fig3_pair").graphs
            extra.append(("fig3_pair", left, right))
        return verify_theorem_khop_subgraph(
            k,
            self.config.get("n_max", 7),
            self.config.get("classes", 1),
            explore=bool(self.config.get("explore", False)),
            seed=self.config.get("seed", 0),
            soundness_trials=self.config.get("soundness_trials", 1),
            extra_pairs=extra,
        )
