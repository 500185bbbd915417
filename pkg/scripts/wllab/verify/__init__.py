"""Theorem verification: separation loops, constructive isomorphisms, reports."""

from typing import Any, Dict, Optional, Type

from ..core.base_check import BaseCheck
from ..core.errors import InputError
from .constructive import construct_isomorphism
from .fixture_claims import FixturesCheck, verify_fixtures
from .hierarchy import HierarchyCheck, verify_hierarchy
from .lemma_c1 import LemmaC1Check, verify_lemma_c1
from .report import EXPLORED, FAIL, PASS, VerificationReport, Violation
from .theorem_1hop import T32Check, verify_theorem_1hop
from .theorem_khop import T38Check, verify_theorem_khop
from .theorem_khop_subgraph import T35Check, verify_theorem_khop_subgraph

CHECK_CLASSES: Dict[str, Type[BaseCheck]] = {
    "t32": T32Check,
    "t35": T35Check,
    "t38": T38Check,
    "lemma-c1": LemmaC1Check,
    "hierarchy": HierarchyCheck,
    "fixtures": FixturesCheck,
}


def build_check(name: str, config: Optional[Dict[str, Any]] = None) -> BaseCheck:
    try:
        return CHECK_CLASSES[name](config)
    except KeyError:
        raise InputError(
            f"unknown check {name!r} (known: {', '.join(CHECK_CLASSES)})"
        ) from None


__all__ = [
    "CHECK_CLASSES",
    "EXPLORED",
    "FAIL",
    "PASS",
    "VerificationReport",
    "Violation",
    "build_check",
    "construct_isomorphism",
    "verify_fixtures",
    "verify_hierarchy",
    "verify_lemma_c1",
    "verify_theorem_1hop",
    "verify_theorem_khop",
    "verify_theorem_khop_subgraph",
]
