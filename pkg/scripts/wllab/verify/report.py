"""Verification reports and the violations they carry."""

import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..canonical import are_isomorphic, canonical_code_unrooted, validate_isomorphism
from ..graph_core import FeaturedGraph
from ..graph_io import GraphDocument, serialize_graph

PASS = "PASS"
FAIL = "FAIL"
EXPLORED = "EXPLORED"

INDISTINGUISHABLE = "indistinguishable"
DISTINGUISHABLE = "distinguishable"
ISOMORPHIC = "isomorphic"
NON_ISOMORPHIC = "non-isomorphic"


def wl_verdict(same: bool) -> str:
    return INDISTINGUISHABLE if same else DISTINGUISHABLE


def oracle_verdict(mapping: Optional[Dict[int, int]]) -> str:
    return ISOMORPHIC if mapping is not None else NON_ISOMORPHIC


@dataclass
class Violation:
    """One failed claim, with enough data to check it again from scratch.

    ``kind`` is one of ``theorem``, ``soundness``, ``equivariance``,
    ``duplicate_class``, ``construction``, ``hierarchy``, ``lemma``,
    ``witness`` or ``fixture``.
    """

    kind: str
    graph_a: FeaturedGraph
    graph_b: Optional[FeaturedGraph] = None
    wl_verdict: Optional[str] = None
    oracle_verdict: Optional[str] = None
    witness: Dict[str, Any] = field(default_factory=dict)
    detail: str = ""

    def revalidate(self) -> bool:
        """Re-derive the oracle side of the violation independently.

        A claimed isomorphism must validate edge-exactly, and a claimed
        non-isomorphism must show up as different canonical codes.
        """
        if self.graph_b is None or self.oracle_verdict is None:
            return True
        if self.oracle_verdict == ISOMORPHIC:
            mapping = self.witness.get("mapping")
            if mapping is None:
                mapping = are_isomorphic(self.graph_a, self.graph_b)
            else:
                mapping = {int(a): int(b) for a, b in mapping.items()}
            return mapping is not None and validate_isomorphism(
                self.graph_a, self.graph_b, mapping
            )
        a, b = self.graph_a, self.graph_b
        features_a = sorted(a.feature_key(v) for v in range(a.n))
        features_b = sorted(b.feature_key(v) for v in range(b.n))
        if a.n != b.n or features_a != features_b:
            return True
        # equal feature multisets give both graphs the same class ranks
        return canonical_code_unrooted(a) != canonical_code_unrooted(b)

    def sort_key(self) -> Tuple[str, str, str, str]:
        second = serialize_graph(self.graph_b) if self.graph_b is not None else ""
        return (self.kind, serialize_graph(self.graph_a), second, self.detail)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "graph_a": GraphDocument.from_graph(self.graph_a).to_dict(),
            "graph_b": (
                GraphDocument.from_graph(self.graph_b).to_dict()
                if self.graph_b is not None
                else None
            ),
            "wl_verdict": self.wl_verdict,
            "oracle_verdict": self.oracle_verdict,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class FilteredPair:
    """A supplied pair excluded by the theorem's hypotheses."""

    label: str
    reasons: Tuple[str, ...]
    wl_verdict: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "reasons": list(self.reasons),
            "wl_verdict": self.wl_verdict,
        }


@dataclass
class VerificationReport:
    """Outcome of one check run.

    In exploratory runs theorem-level counterexamples are collected as
    ``findings`` and never fail the report; soundness problems still do.
    """

    theorem: str
    parameters: Dict[str, Any]
    exploratory: bool = False
    graphs_checked: int = 0
    pairs_checked: int = 0
    soundness_trials: int = 0
    constructions: int = 0
    violations: List[Violation] = field(default_factory=list)
    findings: List[Violation] = field(default_factory=list)
    filtered: List[FilteredPair] = field(default_factory=list)
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0
    _started: float = field(default_factory=time.perf_counter, repr=False)

    @property
    def status(self) -> str:
        if self.violations:
            return FAIL
        return EXPLORED if self.exploratory else PASS

    @property
    def passed(self) -> bool:
        return not self.violations

    def add_violation(self, violation: Violation) -> None:
        if self.exploratory and violation.kind == "theorem":
            self.findings.append(violation)
        else:
            self.violations.append(violation)

    def finish(self) -> "VerificationReport":
        """Sort violations canonically and stamp the elapsed time."""
        self.violations.sort(key=Violation.sort_key)
        self.findings.sort(key=Violation.sort_key)
        self.filtered.sort(key=lambda f: f.label)
        self.elapsed = time.perf_counter() - self._started
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "status": self.status,
            "parameters": self.parameters,
            "exploratory": self.exploratory,
            "graphs_checked": self.graphs_checked,
            "pairs_checked": self.pairs_checked,
            "soundness_trials": self.soundness_trials,
            "constructions": self.constructions,
            "violations": [v.to_dict() for v in self.violations],
            "findings": [v.to_dict() for v in self.findings],
            "filtered": [f.to_dict() for f in self.filtered],
            "witnesses": self.witnesses,
            "summary": self.summary,
            "elapsed": round(self.elapsed, 6),
        }
