"""k-hop WL on k-strongly separable graphs with cycles of length at most 2k-1.

For k = 1 the bound leaves only trees, where the check runs classic WL.
"""

from typing import Any, Dict, Optional, Sequence

from ..core.base_check import BaseCheck
from ..core.errors import InputError
from ..synth import fixture
from ..wl_engines import Variant
from .report import VerificationReport
from .separation import K_STRONGLY_SEPARABLE, ExtraPair, TheoremSetup, run_separation


def verify_theorem_khop(
    k: int,
    n_max: int,
    feature_classes: int = 1,
    explore: bool = False,
    seed: int = 0,
    soundness_trials: int = 1,
    extra_pairs: Sequence[ExtraPair] = (),
    limit: Optional[int] = None,
) -> VerificationReport:
    """Connected k-strongly separable graphs with circumference <= 2k-1 that
    k-hop WL cannot separate must be isomorphic.

    ``explore`` drops the strong separability hypothesis; counterexamples
    then become findings. No constructive isomorphism exists for this
    variant, so only the oracle is consulted.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    if k == 1:
        setup = TheoremSetup(
            theorem="t38", variant=Variant.CLASSIC, k=1, max_circumference=0
        )
    else:
        setup = TheoremSetup(
            theorem="t38",
            variant=Variant.KHOP,
            k=k,
            max_circumference=2 * k - 1,
            separability=K_STRONGLY_SEPARABLE,
            explore=explore,
        )
    return run_separation(
        setup, n_max, feature_classes, seed, soundness_trials, extra_pairs, limit
    )


class T38Check(BaseCheck):
    """Check wrapper for :func:`verify_theorem_khop`."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        super().__init__("t38", config)

    def validate_config(self) -> bool:
        return all(
            value is not None
            for value in (
                self.int_param("k", 2, minimum=1),
                self.int_param("n_max", 7, minimum=1),
                self.int_param("classes", 1, minimum=1),
                self.int_param("soundness_trials", 1),
                self.int_param("seed", 0),
            )
        )

    def run(self) -> VerificationReport:
        extra = []
        if self.config.get("fixture_pairs", True):
            left, right = fixture("fig4_pair").graphs
            extra.append(("fig4_pair", left, right))
        return verify_theorem_khop(
            self.config.get("k", 2),
            self.config.get("n_max", 7),
            self.config.get("classes", 1),
            explore=bool(self.config.get("explore", False)),
            seed=self.config.get("seed", 0),
            soundness_trials=self.config.get("soundness_trials", 1),
            extra_pairs=extra,
        )
