"""Exhaustive enumeration of small connected featured graphs up to isomorphism.

Every connected graph on n vertices has a vertex whose removal leaves it
connected, so level n is reached from the representatives of level n - 1 by
adding one vertex joined to a nonempty subset of the old vertices. Canonical
codes collapse isomorphic candidates. Circumference never grows when a vertex
is removed, so the cycle bound prunes every level.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from ..canonical import CanonicalCode, canonical_code_unrooted
from ..core.config import active_limits
from ..core.errors import CapacityError, InputError
from ..graph_core import FeaturedGraph
from ..structure import check_cycle_bound

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _uniform_level(n: int, max_circumference: int) -> Tuple[FeaturedGraph, ...]:
    if n == 1:
        return (FeaturedGraph.from_edges(1, []),)
    found: Dict[CanonicalCode, FeaturedGraph] = {}
    new = n - 1
    for base in _uniform_level(n - 1, max_circumference):
        for subset in range(1, 1 << new):
            edges = set(base.edges)
            edges.update((u, new) for u in range(new) if subset >> u & 1)
            candidate = FeaturedGraph.from_edges(n, edges)
            code = canonical_code_unrooted(candidate, limit=n)
            if code in found:
                continue
            if max_circumference < n and not check_cycle_bound(
                candidate, max_circumference
            ).satisfied:
                continue
            found[code] = candidate
    logger.debug(
        f"n={n}, circumference<={max_circumference}: {len(found)} uniform classes"
    )
    return tuple(found[code] for code in sorted(found))


def _check_limits(n: int, feature_classes: int, limit: Optional[int]) -> None:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if feature_classes < 1:
        raise InputError(f"need at least one feature class, got {feature_classes}")
    if limit is None:
        limits = active_limits()
        limit = (
            limits.enumeration_max_uniform
            if feature_classes == 1
            else limits.enumeration_max_featured
        )
    if n > limit:
        raise CapacityError("enumeration", n, limit)


def enumerate_connected(
    n: int,
    max_circumference: int,
    feature_classes: int = 1,
    limit: Optional[int] = None,
) -> Iterator[FeaturedGraph]:
    """Yield one representative per isomorphism class of connected featured
    graphs on ``n`` vertices with circumference at most ``max_circumference``.

    Features are drawn from ``(0.0,) .. (feature_classes - 1.0,)`` in every
    way that is inequivalent up to isomorphism of the featured graph. Output
    order is sorted by canonical code and is therefore deterministic.

    Raises:
        CapacityError: ``n`` above the enumeration limit
    """
    _check_limits(n, feature_classes, limit)
    bound = max(0, min(max_circumference, n))
    shapes = _uniform_level(n, bound)
    if feature_classes == 1:
        yield from shapes
        return
    emitted: Dict[CanonicalCode, FeaturedGraph] = {}
    for shape in shapes:
        for classes in itertools.product(range(feature_classes), repeat=n):
            code = canonical_code_unrooted(shape, classes, limit=n)
            if code not in emitted:
                emitted[code] = FeaturedGraph(
                    n=n,
                    edges=shape.edges,
                    features=tuple((float(c),) for c in classes),
                )
    yield from (emitted[code] for code in sorted(emitted))


def enumerate_up_to(
    n_max: int,
    max_circumference: int,
    feature_classes: int = 1,
    n_min: int = 1,
    limit: Optional[int] = None,
) -> Iterator[FeaturedGraph]:
    """:func:`enumerate_connected` for every n in ``n_min .. n_max``."""
    _check_limits(n_max, feature_classes, limit)
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected(n, max_circumference, feature_classes, limit)
