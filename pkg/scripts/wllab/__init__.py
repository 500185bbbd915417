"""WL-Lab: Weisfeiler-Lehman variants and a harness for their separation claims.

Classic, k-hop and k-hop subgraph color refinement over featured graphs,
exact canonical codes, structural predicates and exhaustive checks that
indistinguishable graphs are isomorphic under the stated hypotheses.
"""

__version__ = "0.1.0"

from .canonical import ColorInterner, are_isomorphic, canonical_code
from .core.harness import VerificationHarness
from .graph_core import FeaturedGraph
from .wl_engines import Variant, indistinguishable, run_variant

__all__ = [
    "ColorInterner",
    "FeaturedGraph",
    "Variant",
    "VerificationHarness",
    "are_isomorphic",
    "canonical_code",
    "indistinguishable",
    "run_variant",
]
