"""Hand-drawn example pairs and the cycle counterexample family.

Vertex labels follow the drawings (``v1`` .. ``vN``); vertex ``i`` carries
label ``v{i + 1}`` unless stated otherwise.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from ..core.errors import InputError
from ..graph_core import FeaturedGraph

RED = 1.0
BLUE = 2.0


@dataclass(frozen=True)
class FixtureSet:
    name: str
    graphs: Tuple[FeaturedGraph, ...]
    provenance: str

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "provenance": self.provenance,
            "graphs": [{"n": g.n, "edges": len(g.edges)} for g in self.graphs],
        }


def _from_labels(
    labels: Sequence[int],
    edges: Sequence[Tuple[int, int]],
    classes: Sequence[float],
) -> FeaturedGraph:
    """Build a graph whose vertices are drawn labels ``v{label}``."""
    position = {label: i for i, label in enumerate(labels)}
    return FeaturedGraph.from_edges(
        len(labels),
        [(position[a], position[b]) for a, b in edges],
        [(c,) for c in classes],
        [f"v{label}" for label in labels],
    )


def cycle_graph(n: int, feature: float = 0.0) -> FeaturedGraph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return FeaturedGraph.from_edges(
        n, [(i, (i + 1) % n) for i in range(n)], [(feature,)] * n
    )


def cycle_pair(k: int) -> Tuple[FeaturedGraph, FeaturedGraph]:
    """Two disjoint (2k+2)-cycles versus one (4k+4)-cycle, uniform features.

    The k-hop subgraph of every vertex on either side is a path on 2k+1
    vertices, so k-hop subgraph WL cannot tell the two apart.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    half = cycle_graph(2 * k + 2)
    return half.disjoint_union(half), cycle_graph(4 * k + 4)


def _fig1_pair() -> FixtureSet:
    labels = list(range(1, 9))
    colors = [RED if label % 2 else BLUE for label in labels]
    two_squares = _from_labels(
        labels,
        [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5)],
        colors,
    )
    octagon = _from_labels(labels, [(i, i % 8 + 1) for i in labels], colors)
    return FixtureSet(
        "fig1_pair",
        (two_squares, octagon),
        "two 4-cycles vs one 8-cycle with alternating red/blue features: "
        "classic WL cannot separate them, 2-hop subgraph WL can",
    )


# fmt: off
# Color classes shared by both drawings of the 3-separable pair.
_FIG3_CLASSES = [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7]

_FIG3_LEFT_EDGES = [
    (1, 2), (1, 3), (2, 4), (1, 5), (2, 6), (3, 5), (4, 6),
    (5, 7), (6, 8), (7, 9), (8, 10), (9, 11), (10, 12), (11, 13), (12, 14),
]

_FIG3_RIGHT_EDGES = [
    (15, 16), (15, 17), (16, 18), (15, 20), (16, 19), (17, 19), (18, 20),
    (19, 21), (20, 22), (21, 23), (22, 24), (23, 25), (24, 26), (25, 27),
    (26, 28),
]

_K33_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4), (2, 5), (3, 6),
]

_PRISM_EDGES = [
    (7, 11), (8, 12), (9, 7), (10, 8), (11, 9), (12, 10), (7, 10), (8, 11), (9, 12),
]
# fmt: on


def _fig3_pair() -> FixtureSet:
    left = _from_labels(
        list(range(1, 15)),
        _FIG3_LEFT_EDGES,
        [float(c) for c in _FIG3_CLASSES],
    )
    right = _from_labels(
        list(range(15, 29)),
        _FIG3_RIGHT_EDGES,
        [float(c) for c in _FIG3_CLASSES],
    )
    return FixtureSet(
        "fig3_pair",
        (left, right),
        "two 3-separable graphs on 14 vertices with 7 feature classes and no "
        "cycle longer than 7: classic WL stabilizes at once without separating "
        "them, 3-hop subgraph WL separates them",
    )


def _fig4_pair() -> FixtureSet:
    k33 = _from_labels(
        list(range(1, 7)),
        _K33_EDGES,
        [0.0] * 6,
    )
    prism = _from_labels(
        list(range(7, 13)),
        _PRISM_EDGES,
        [0.0] * 6,
    )
    return FixtureSet(
        "fig4_pair",
        (k33, prism),
        "K3,3 vs the triangular prism, uniform features: every vertex sees three "
        "vertices at distance 1 and two at distance 2, so k-hop WL cannot "
        "separate them for any k",
    )


_FIXTURES: Dict[str, Callable[[], FixtureSet]] = {
    "fig1_pair": _fig1_pair,
    "fig3_pair": _fig3_pair,
    "fig4_pair": _fig4_pair,
}

FIXTURE_NAMES: List[str] = sorted(_FIXTURES)


def fixture(name: str) -> FixtureSet:
    try:
        return _FIXTURES[name]()
    except KeyError:
        raise InputError(
            f"unknown fixture {name!r} (known: {', '.join(FIXTURE_NAMES)})"
        ) from None
