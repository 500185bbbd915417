"""1-hop subgraph WL on graphs whose cycles have length at most 3."""

from typing import Any, Dict, Optional, Sequence

from ..core.base_check import BaseCheck
from ..synth import fixture
from ..wl_engines import Variant
from .report import VerificationReport
from .separation import ExtraPair, TheoremSetup, run_separation

MAX_CIRCUMFERENCE = 3


def verify_theorem_1hop(
    n_max: int,
    feature_classes: int = 1,
    seed: int = 0,
    soundness_trials: int = 1,
    extra_pairs: Sequence[ExtraPair] = (),
    limit: Optional[int] = None,
) -> VerificationReport:
    """Connected graphs with circumference <= 3 that 1-hop subgraph WL cannot
    separate must be isomorphic.

    Every pool graph is also compared with relabelings of itself, and each
    of those pairs gets an explicit isomorphism from the matching argument.
    """
    setup = TheoremSetup(
        theorem="t32",
        variant=Variant.SUBGRAPH,
        k=1,
        max_circumference=MAX_CIRCUMFERENCE,
        construct=True,
    )
    return run_separation(
        setup, n_max, feature_classes, seed, soundness_trials, extra_pairs, limit
    )


class T32Check(BaseCheck):
    """Check wrapper for :func:`verify_theorem_1hop`."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("t32", config)

    def validate_config(self) -> bool:
        return all(
            value is not None
            for value in (
                self.int_param("n_max", 7, minimum=1),
                self.int_param("classes", 1, minimum=1),
                self.int_param("soundness_trials", 1),
                self.int_param("seed", 0),
            )
        )

    def run(self) -> VerificationReport:
        extra = []
        if self.config.get("fixture_pairs", True):
            left, right = fixture("fig1_pair").graphs
            extra.append(("fig1_pair", left, right))
        return verify_theorem_1hop(
            self.config.get("n_max", 7),
            self.config.get("classes", 1),
            seed=self.config.get("seed", 0),
            soundness_trials=self.config.get("soundness_trials", 1),
            extra_pairs=extra,
        )
