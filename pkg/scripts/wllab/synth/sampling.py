"""Seeded rejection sampling of connected graphs with bounded circumference."""

import logging
from typing import Optional

import numpy as np

from ..core.config import active_limits
from ..core.errors import InputError, SamplingBudgetError
from ..graph_core import FeaturedGraph
from ..structure import check_cycle_bound

logger = logging.getLogger(__name__)


def _draw(
    rng: np.random.Generator, n: int, feature_classes: int, extra_edge_p: float
) -> FeaturedGraph:
    # random recursive tree, then sparse extra edges, then a random relabeling
    edges = {(int(rng.integers(0, i)), i) for i in range(1, n)}
    if extra_edge_p > 0 and n >= 3:
        rows, cols = np.triu_indices(n, k=1)
        chosen = rng.random(rows.shape[0]) < extra_edge_p
        edges.update(zip(rows[chosen].tolist(), cols[chosen].tolist()))
    classes = rng.integers(0, feature_classes, size=n)
    g = FeaturedGraph.from_edges(n, edges, [(float(c),) for c in classes.tolist()])
    return g.permuted(rng.permutation(n).tolist())


def random_bounded_graph(
    n: int,
    max_circumference: int,
    feature_classes: int = 1,
    seed: int = 0,
    budget: Optional[int] = None,
    extra_edge_p: Optional[float] = None,
) -> FeaturedGraph:
    """Draw connected graphs until one has no cycle longer than the bound.

    Args:
        n: Vertex count
        max_circumference: Longest allowed simple cycle (0 forces a tree)
        feature_classes: Features are drawn uniformly from this many classes
        seed: Seed for ``numpy.random.default_rng``
        budget: Maximum number of draws (defaults to the configured budget)
        extra_edge_p: Probability of each extra edge on top of the spanning
            tree; defaults to ``1 / n``

    Raises:
        SamplingBudgetError: no draw was accepted within the budget
    """
    if n < 1 or feature_classes < 1:
        raise InputError(
            f"need n >= 1 and feature_classes >= 1, got {n}, {feature_classes}"
        )
    budget = active_limits().sampling_budget if budget is None else budget
    if extra_edge_p is None:
        extra_edge_p = 1.0 / n
    if max_circumference < 3:
        extra_edge_p = 0.0
    rng = np.random.default_rng(seed)
    for draw in range(1, budget + 1):
        g = _draw(rng, n, feature_classes, extra_edge_p)
        if max_circumference >= n or check_cycle_bound(g, max_circumference).satisfied:
            logger.debug(f"Accepted n={n} sample after {draw} draws (seed={seed})")
            return g
    raise SamplingBudgetError(
        budget, f"n={n}, circumference<={max_circumference}, p={extra_edge_p:.3f}"
    )
