"""Color refinement engines: classic WL, k-hop WL and k-hop subgraph WL.

All three engines share one loop. Each iteration builds a byte key per vertex,
interns the batch through a :class:`ColorInterner` and stops as soon as the
induced partition no longer changes. Every key starts with a one-byte
namespace so keys of different variants or of the initial coloring can never
collide inside a shared interner.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .canonical import ColorInterner, canonical_code, encode_varint
from .core.errors import InputError
from .graph_core import (
    DistanceMatrix,
    FeaturedGraph,
    all_pairs_distances,
    extract_rooted_subgraph,
)

logger = logging.getLogger(__name__)

_INITIAL = b"H"
_CLASSIC = b"W"
_KHOP = b"K"
_SUBGRAPH = b"S"


class Variant(str, Enum):
    CLASSIC = "classic"
    KHOP = "khop"
    SUBGRAPH = "subgraph"

    @classmethod
    def parse(cls, value: Union[str, "Variant"]) -> "Variant":
        try:
            return cls(value)
        except ValueError:
            names = ", ".join(v.value for v in cls)
            raise InputError(f"unknown WL variant {value!r} (expected one of {names})")


def _partition_signature(colors: Sequence[int]) -> Tuple[int, ...]:
    """Each vertex replaced by the first vertex sharing its color."""
    first: Dict[int, int] = {}
    return tuple(first.setdefault(c, v) for v, c in enumerate(colors))


@dataclass(frozen=True)
class Coloring:
    """Colors of every vertex at one refinement iteration."""

    iteration: int
    colors: Tuple[int, ...]
    interner_tag: int

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def num_classes(self) -> int:
        return len(set(self.colors))

    def partition(self) -> Tuple[Tuple[int, ...], ...]:
        """Color classes as sorted vertex tuples, ordered by smallest member."""
        classes: Dict[int, List[int]] = {}
        for v, c in enumerate(self.colors):
            classes.setdefault(c, []).append(v)
        return tuple(sorted(tuple(members) for members in classes.values()))

    def same_partition(self, other: "Coloring") -> bool:
        return _partition_signature(self.colors) == _partition_signature(other.colors)

    def refines(self, other: "Coloring") -> bool:
        """True when every class of ``self`` lies inside one class of ``other``."""
        if len(self) != len(other):
            return False
        image: Dict[int, int] = {}
        for mine, theirs in zip(self.colors, other.colors):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def multiset(self) -> Tuple[Tuple[int, int], ...]:
        """Sorted ``(color, count)`` pairs."""
        return tuple(sorted(Counter(self.colors).items()))


@dataclass(frozen=True)
class WlRun:
    """History of one refinement run, from the feature coloring to stabilization.

    ``confirmation`` is the coloring of iteration ``stabilized_at + 1``: same
    partition as the last history entry, but its ids also certify that the
    refinement step agrees across graphs. Cross-graph comparisons use it, since
    two graphs can each be stable with equal color multisets (a 6-cycle and
    K3,3 with uniform features at iteration 0) and still split apart one
    step later.
    """

    variant: Variant
    k: int
    n: int
    history: Tuple[Coloring, ...]
    stabilized_at: int
    confirmation: Coloring

    @property
    def final(self) -> Coloring:
        return self.history[self.stabilized_at]

    @property
    def interner_tag(self) -> int:
        return self.final.interner_tag

    def final_multiset(self) -> Tuple[Tuple[int, int], ...]:
        return self.confirmation.multiset()

    def to_dict(self) -> Dict[str, object]:
        return {
            "variant": self.variant.value,
            "k": self.k,
            "n": self.n,
            "stabilized_at": self.stabilized_at,
            "history": [list(c.colors) for c in self.history],
            "stable_colors": list(self.confirmation.colors),
            "final_multiset": [list(pair) for pair in self.final_multiset()],
        }


KeyStep = Callable[[Tuple[int, ...]], List[bytes]]


def _varints(values: Sequence[int]) -> bytes:
    return b"".join(encode_varint(x) for x in values)


def _refine_until_stable(
    g: FeaturedGraph,
    variant: Variant,
    k: int,
    shared: ColorInterner,
    step: KeyStep,
) -> WlRun:
    initial = shared.intern_sorted([_INITIAL + g.feature_key(v) for v in range(g.n)])
    history = [Coloring(0, tuple(initial), shared.tag)]
    for iteration in range(1, g.n + 1):
        previous = history[-1]
        colors = tuple(shared.intern_sorted(step(previous.colors)))
        current = Coloring(iteration, colors, shared.tag)
        if current.num_classes == previous.num_classes and current.same_partition(
            previous
        ):
            logger.debug(
                f"{variant.value}(k={k}) on n={g.n} stabilized at {iteration - 1} "
                f"with {previous.num_classes} classes"
            )
            return WlRun(variant, k, g.n, tuple(history), iteration - 1, current)
        history.append(current)
    raise AssertionError(
        f"{variant.value} refinement did not stabilize within {g.n} iterations"
    )


def _check_k(k: int) -> None:
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")


def classic_wl(g: FeaturedGraph, shared: ColorInterner) -> WlRun:
    """Classic color refinement: own color plus the sorted neighbor colors."""

    def step(colors: Tuple[int, ...]) -> List[bytes]:
        keys = []
        for v in range(g.n):
            nbrs = sorted(colors[u] for u in g.adjacency[v])
            head = _CLASSIC + encode_varint(colors[v]) + encode_varint(len(nbrs))
            keys.append(head + _varints(nbrs))
        return keys

    return _refine_until_stable(g, Variant.CLASSIC, 1, shared, step)


def khop_wl(
    g: FeaturedGraph,
    k: int,
    shared: ColorInterner,
    dm: Optional[DistanceMatrix] = None,
) -> WlRun:
    """k-hop refinement over ``(color, distance)`` pairs of the radius-k ball.

    The ball includes the vertex itself at distance 0.
    """
    _check_k(k)
    dm = dm if dm is not None else all_pairs_distances(g)
    balls = [sorted(dm.within(v, k)) for v in range(g.n)]

    def step(colors: Tuple[int, ...]) -> List[bytes]:
        keys = []
        for v in range(g.n):
            pairs = sorted((colors[u], dm.distance(v, u)) for u in balls[v])
            body = b"".join(encode_varint(c) + encode_varint(d) for c, d in pairs)
            keys.append(
                _KHOP + encode_varint(colors[v]) + encode_varint(len(pairs)) + body
            )
        return keys

    return _refine_until_stable(g, Variant.KHOP, k, shared, step)


def khop_subgraph_wl(
    g: FeaturedGraph,
    k: int,
    shared: ColorInterner,
    dm: Optional[DistanceMatrix] = None,
    limit: Optional[int] = None,
) -> WlRun:
    """k-hop subgraph refinement: own color plus the canonical code of the
    colored rooted k-hop subgraph.

    Raises:
        CapacityError: a k-hop neighborhood exceeds the canonicalization limit
    """
    _check_k(k)
    dm = dm if dm is not None else all_pairs_distances(g)

    def step(colors: Tuple[int, ...]) -> List[bytes]:
        keys = []
        for v in range(g.n):
            rooted = extract_rooted_subgraph(g, colors, v, k, dm)
            code = canonical_code(rooted, limit=limit)
            keys.append(_SUBGRAPH + encode_varint(colors[v]) + code.data)
        return keys

    return _refine_until_stable(g, Variant.SUBGRAPH, k, shared, step)


def run_variant(
    variant: Union[str, Variant],
    g: FeaturedGraph,
    k: int,
    shared: ColorInterner,
    dm: Optional[DistanceMatrix] = None,
) -> WlRun:
    """Dispatch to one of the engines by name (``k`` is ignored for classic)."""
    variant = Variant.parse(variant)
    if variant is Variant.CLASSIC:
        return classic_wl(g, shared)
    if variant is Variant.KHOP:
        return khop_wl(g, k, shared, dm)
    return khop_subgraph_wl(g, k, shared, dm)


def _check_comparable(run_a: WlRun, run_b: WlRun) -> None:
    if run_a.interner_tag != run_b.interner_tag:
        raise InputError(
            "runs were colored by different interners; "
            "cross-graph comparison needs one shared interner"
        )
    if run_a.variant != run_b.variant or run_a.k != run_b.k:
        raise InputError(
            f"cannot compare {run_a.variant.value}(k={run_a.k}) "
            f"with {run_b.variant.value}(k={run_b.k})"
        )


def indistinguishable(run_a: WlRun, run_b: WlRun) -> bool:
    """Equal stabilized color multisets.

    Runs that stabilize at different iterations are distinguishable: one of
    them still splits classes where the other does not. Otherwise the
    confirmation colorings are compared.
    """
    _check_comparable(run_a, run_b)
    if run_a.n != run_b.n or run_a.stabilized_at != run_b.stabilized_at:
        return False
    return run_a.final_multiset() == run_b.final_multiset()


def vertexwise_indistinguishable(run_a: WlRun, run_b: WlRun) -> bool:
    """Equal stabilized colors position by position."""
    _check_comparable(run_a, run_b)
    if run_a.n != run_b.n or run_a.stabilized_at != run_b.stabilized_at:
        return False
    return run_a.confirmation.colors == run_b.confirmation.colors


def is_equivariant(run_g: WlRun, run_h: WlRun, sigma: Sequence[int]) -> bool:
    """Whether ``run_h`` (on sigma * g) carries the sigma-image of every coloring
    of ``run_g`` at every iteration."""
    _check_comparable(run_g, run_h)
    if run_g.n != run_h.n or run_g.stabilized_at != run_h.stabilized_at:
        return False
    pairs = zip(
        run_g.history + (run_g.confirmation,), run_h.history + (run_h.confirmation,)
    )
    for before, after in pairs:
        if any(after.colors[sigma[i]] != c for i, c in enumerate(before.colors)):
            return False
    return True
