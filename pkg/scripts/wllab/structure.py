"""Structural hypotheses of the separation theorems.

Connectivity, bounded circumference, k-separability, k-strong separability and
the edge-exclusion property used by the k >= 2 isomorphism construction.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .canonical import ColorInterner
from .core.config import active_limits
from .core.errors import CapacityError, InputError, PreconditionError
from .graph_core import DistanceMatrix, FeaturedGraph, all_pairs_distances
from .wl_engines import Variant, WlRun, khop_subgraph_wl, khop_wl

logger = logging.getLogger(__name__)


def _components(g: FeaturedGraph) -> List[List[int]]:
    if g.edges:
        rows, cols = zip(*g.edges)
    else:
        rows, cols = (), ()
    matrix = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n)
    )
    count, labels = connected_components(matrix, directed=False)
    members: List[List[int]] = [[] for _ in range(count)]
    for v, label in enumerate(labels.tolist()):
        members[label].append(v)
    return members


def is_connected(g: FeaturedGraph) -> bool:
    return len(_components(g)) == 1


@dataclass(frozen=True)
class CycleBoundReport:
    """Outcome of a circumference query.

    ``bound`` is ``None`` for the unbounded (plain circumference) query. When
    ``exact`` is false the search stopped at the first cycle longer than the
    bound and ``circumference`` is only a lower bound.
    """

    circumference: int
    bound: Optional[int]
    satisfied: bool
    witness_cycle: Optional[Tuple[int, ...]] = None
    exact: bool = True

    def to_dict(self) -> Dict[str, object]:
        return {
            "circumference": self.circumference,
            "bound": self.bound,
            "satisfied": self.satisfied,
            "witness_cycle": list(self.witness_cycle) if self.witness_cycle else None,
            "exact": self.exact,
        }


def _longest_cycle_dp(
    adjacency: List[int], stop_above: Optional[int]
) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Subset DP over simple paths anchored at the lowest vertex of their set.

    ``adjacency`` holds one neighbor bitmask per vertex. ``reach[mask]`` is the
    bitmask of end vertices e such that a simple path from the anchor of
    ``mask`` through exactly ``mask`` ends at e. Masks are visited in
    increasing order, so every subset is final before its supersets.
    """
    n = len(adjacency)
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    best, best_state = 0, None
    for mask in range(1, 1 << n):
        ends = reach[mask]
        if not ends:
            continue
        low = mask & -mask
        anchor = low.bit_length() - 1
        size = bin(mask).count("1")
        if size >= 3:
            closing = ends & adjacency[anchor]
            if closing and size > best:
                best, best_state = size, (mask, (closing & -closing).bit_length() - 1)
                if stop_above is not None and best > stop_above:
                    break
        above_anchor = ~((low << 1) - 1)
        remaining = ends
        while remaining:
            bit = remaining & -remaining
            remaining ^= bit
            end = bit.bit_length() - 1
            ext = adjacency[end] & ~mask & above_anchor
            while ext:
                nxt = ext & -ext
                ext ^= nxt
                reach[mask | nxt] |= nxt
    if best_state is None:
        return 0, None
    mask, end = best_state
    anchor_bit = mask & -mask
    path = [end]
    while mask != anchor_bit:
        mask ^= 1 << path[-1]
        candidates = reach[mask] & adjacency[path[-1]]
        path.append((candidates & -candidates).bit_length() - 1)
    path.reverse()
    return best, tuple(path)


def _cycle_search(
    g: FeaturedGraph, bound: Optional[int], early_exit: bool, limit: Optional[int]
) -> CycleBoundReport:
    limit = active_limits().circumference_max_vertices if limit is None else limit
    components = [c for c in _components(g) if len(c) >= 3]
    best, witness = 0, None
    for members in components:
        member_set = set(members)
        local_edges = sum(1 for a, _ in g.edges if a in member_set)
        if local_edges < len(members):
            continue  # a tree
        if len(members) > limit:
            raise CapacityError("exact circumference", len(members), limit)
        position = {v: i for i, v in enumerate(members)}
        masks = [0] * len(members)
        for v in members:
            for u in g.adjacency[v]:
                masks[position[v]] |= 1 << position[u]
        stop_above = bound if early_exit else None
        length, cycle = _longest_cycle_dp(masks, stop_above)
        if length > best:
            best, witness = length, tuple(members[i] for i in cycle)
        if early_exit and bound is not None and best > bound:
            return CycleBoundReport(best, bound, False, witness, exact=False)
    satisfied = bound is None or best <= bound
    return CycleBoundReport(best, bound, satisfied, None if satisfied else witness)


def circumference(g: FeaturedGraph, limit: Optional[int] = None) -> CycleBoundReport:
    """Exact length of the longest simple cycle (0 for forests).

    Raises:
        CapacityError: a cyclic component has more vertices than the limit
    """
    return _cycle_search(g, None, False, limit)


def check_cycle_bound(
    g: FeaturedGraph, bound: int, exact: bool = False, limit: Optional[int] = None
) -> CycleBoundReport:
    """Whether every simple cycle has at most ``bound`` vertices.

    Unless ``exact`` is set the search returns at the first longer cycle.
    """
    if bound < 0:
        raise InputError(f"cycle bound must be non-negative, got {bound}")
    return _cycle_search(g, bound, not exact, limit)


def longest_cycle_by_enumeration(
    g: FeaturedGraph,
) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Longest simple cycle by DFS over all simple paths from each start vertex.

    Exponential; only meant as an independent cross-check on small graphs.
    """
    best: Tuple[int, Optional[Tuple[int, ...]]] = (0, None)
    for start in range(g.n):
        path = [start]
        on_path = {start}

        def extend(v: int) -> None:
            nonlocal best
            for u in g.adjacency[v]:
                if u == start and len(path) >= 3 and len(path) > best[0]:
                    best = (len(path), tuple(path))
                elif u > start and u not in on_path:
                    path.append(u)
                    on_path.add(u)
                    extend(u)
                    on_path.discard(u)
                    path.pop()

        extend(start)
    return best


@dataclass(frozen=True)
class SeparabilityReport:
    """Verdict of a separability predicate; truthy when the graph is separable.

    ``witness`` is ``(u, v1, v2)`` for k-separability and ``(v1, v2)`` for
    strong separability.
    """

    predicate: str
    k: int
    separable: bool
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.separable

    def to_dict(self) -> Dict[str, object]:
        return {
            "predicate": self.predicate,
            "k": self.k,
            "separable": self.separable,
            "witness": list(self.witness) if self.witness else None,
        }


def _stable_run(
    g: FeaturedGraph,
    k: int,
    variant: Variant,
    run: Optional[WlRun],
    dm: DistanceMatrix,
) -> WlRun:
    if run is None:
        engine = khop_subgraph_wl if variant is Variant.SUBGRAPH else khop_wl
        return engine(g, k, ColorInterner(), dm)
    if run.variant is not variant or run.k != k or run.n != g.n:
        raise InputError(
            f"expected a {variant.value}(k={k}) run on {g.n} vertices, got "
            f"{run.variant.value}(k={run.k}) on {run.n}"
        )
    return run


def is_k_separable(
    g: FeaturedGraph,
    k: int,
    run: Optional[WlRun] = None,
    dm: Optional[DistanceMatrix] = None,
) -> SeparabilityReport:
    """Stabilized k-hop subgraph colors differ for any two vertices at distance
    exactly k from a common vertex."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    dm = dm if dm is not None else all_pairs_distances(g)
    colors = _stable_run(g, k, Variant.SUBGRAPH, run, dm).final.colors
    for u in range(g.n):
        seen: Dict[int, int] = {}
        for v in sorted(dm.at_distance(u, k)):
            other = seen.setdefault(colors[v], v)
            if other != v:
                return SeparabilityReport("k-separable", k, False, (u, other, v))
    return SeparabilityReport("k-separable", k, True)


def is_k_strongly_separable(
    g: FeaturedGraph,
    k: int,
    run: Optional[WlRun] = None,
    dm: Optional[DistanceMatrix] = None,
) -> SeparabilityReport:
    """Stabilized k-hop WL colors differ for every pair within distance 2k."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    dm = dm if dm is not None else all_pairs_distances(g)
    colors = _stable_run(g, k, Variant.KHOP, run, dm).final.colors
    by_color: Dict[int, List[int]] = defaultdict(list)
    for v, c in enumerate(colors):
        by_color[c].append(v)
    for members in by_color.values():
        for i, v1 in enumerate(members):
            for v2 in members[i + 1 :]:
                if 0 < dm.distance(v1, v2) <= 2 * k:
                    return SeparabilityReport(
                        "k-strongly-separable", k, False, (v1, v2)
                    )
    return SeparabilityReport("k-strongly-separable", k, True)


def _neighborhood_of_set(dm: DistanceMatrix, vertices: Iterable[int], k: int) -> set:
    covered: set = set()
    for s in vertices:
        covered |= dm.within(s, k)
    return covered


def check_lemma_c1(
    g: FeaturedGraph,
    S: Iterable[int],
    u1: int,
    k: int,
    dm: Optional[DistanceMatrix] = None,
    graph_checked: bool = False,
) -> bool:
    """No edge joins N_k(u1) minus N_k(S) to N_k(S) minus N_k(u1).

    Args:
        g: Connected graph with circumference at most 2k + 1
        S: Nonempty vertex set inducing a connected subgraph
        u1: Vertex outside S adjacent to some vertex of S
        k: Radius, at least 2
        dm: Precomputed distances of ``g``
        graph_checked: Skip the graph-level hypotheses (connectivity and cycle
            bound) when the caller has already established them

    Raises:
        PreconditionError: naming the hypothesis that does not hold
    """
    S = frozenset(S)
    if k < 2:
        raise PreconditionError("k", f"radius must be at least 2, got {k}")
    if not S:
        raise PreconditionError("S-nonempty", "S is empty")
    if any(not 0 <= s < g.n for s in S) or not 0 <= u1 < g.n:
        raise InputError(f"vertex out of range for n={g.n}")
    if u1 in S:
        raise PreconditionError("u1-outside-S", f"u1={u1} lies in S")
    if not any(s in S for s in g.adjacency[u1]):
        raise PreconditionError("u1-adjacent", f"u1={u1} has no neighbor in S")
    if not is_connected(g.induced_subgraph(S)):
        raise PreconditionError("S-connected", f"S={sorted(S)} is not connected")
    if not graph_checked:
        if not is_connected(g):
            raise PreconditionError("connected", "graph is not connected")
        report = check_cycle_bound(g, 2 * k + 1)
        if not report.satisfied:
            raise PreconditionError(
                "circumference",
                f"cycle {list(report.witness_cycle)} is longer than {2 * k + 1}",
            )
    dm = dm if dm is not None else all_pairs_distances(g)
    around_s = _neighborhood_of_set(dm, S, k)
    around_u = dm.within(u1, k)
    outer = around_u - around_s
    inner = around_s - around_u
    return not any(
        (a in outer and b in inner) or (a in inner and b in outer) for a, b in g.edges
    )
