"""Explicit isomorphisms for pairs the k-hop subgraph WL test cannot separate.

The construction grows connected sets S1 (in g) and S2 (in h) one vertex at a
time while keeping a color- and edge-preserving bijection f from N_k(S1) onto
N_k(S2) with f(S1) = S2. Each step takes the smallest vertex v1 outside S1
adjacent to S1, sets v2 = f(v1) and extends f over
T1 = N_k(v1) minus N_k(S1):

* k = 1: T1 induces a matching and touches N(S1) only through v1, so the
  matching edges of T1 are paired with those of T2 by their color pair and the
  unmatched vertices by color.
* k >= 2: every vertex of T1 sits at distance exactly k from v1, so
  k-separability gives each a color unique in T1; it maps to the vertex of T2
  with that color.

Every extension is checked against both graphs before the next step, so a
failure points at the exact step and carries the partial map.
"""

import logging
from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from ..canonical import ColorInterner, are_rooted_isomorphic, validate_isomorphism
from ..core.errors import ConstructionStuckError, PreconditionError
from ..graph_core import (
    DistanceMatrix,
    FeaturedGraph,
    all_pairs_distances,
    extract_rooted_subgraph,
)
from ..structure import check_cycle_bound, is_connected, is_k_separable
from ..wl_engines import Variant, WlRun, indistinguishable, khop_subgraph_wl

logger = logging.getLogger(__name__)

Mapping = Dict[int, int]


class _Side:
    """One graph with its distances and stabilized colors."""

    def __init__(self, g: FeaturedGraph, run: WlRun, dm: DistanceMatrix, k: int):
        self.g = g
        self.dm = dm
        self.k = k
        self.colors = run.confirmation.colors

    def ball(self, v: int) -> FrozenSet[int]:
        return self.dm.within(v, self.k)


def _check_hypotheses(
    g: FeaturedGraph, h: FeaturedGraph, k: int, runs: Tuple[WlRun, WlRun]
) -> None:
    for name, graph, run in (("g", g, runs[0]), ("h", h, runs[1])):
        if not is_connected(graph):
            raise PreconditionError("connected", f"{name} is not connected")
        report = check_cycle_bound(graph, 2 * k + 1)
        if not report.satisfied:
            raise PreconditionError(
                "circumference",
                f"{name} has the cycle {list(report.witness_cycle)} "
                f"longer than {2 * k + 1}",
            )
        if k >= 2:
            separable = is_k_separable(graph, k, run=run)
            if not separable:
                raise PreconditionError(
                    "k-separable",
                    f"{name} is not {k}-separable (witness {separable.witness})",
                )
    if not indistinguishable(*runs):
        raise PreconditionError(
            "indistinguishable", f"{k}-hop subgraph WL distinguishes g from h"
        )


def _check_extension(
    a: _Side, b: _Side, f: Mapping, new: Sequence[int], step: str
) -> None:
    if len(set(f.values())) != len(f):
        raise ConstructionStuckError(f"{step}: map is not injective", f)
    for x in new:
        if a.colors[x] != b.colors[f[x]]:
            raise ConstructionStuckError(
                f"{step}: {x} -> {f[x]} changes the color", f
            )
        for y in f:
            if y != x and a.g.has_edge(x, y) != b.g.has_edge(f[x], f[y]):
                raise ConstructionStuckError(
                    f"{step}: edge ({x}, {y}) is not preserved", f
                )


def _by_color(side: _Side, vertices: Iterable[int]) -> Dict[int, List[int]]:
    groups: Dict[int, List[int]] = defaultdict(list)
    for v in sorted(vertices):
        groups[side.colors[v]].append(v)
    return groups


def _pair_matchings(
    a: _Side, b: _Side, t1: Set[int], t2: Set[int], f: Mapping, step: str
) -> List[int]:
    """k = 1 extension: pair the matching edges inside T1 and T2 by color pair."""

    def matching(side: _Side, t: Set[int]) -> List[Tuple[int, int]]:
        edges = sorted((x, y) for x, y in side.g.edges if x in t and y in t)
        degree: Dict[int, int] = defaultdict(int)
        for x, y in edges:
            degree[x] += 1
            degree[y] += 1
        if any(d > 1 for d in degree.values()):
            raise ConstructionStuckError(f"{step}: T does not induce a matching", f)
        return edges

    edges1, edges2 = matching(a, t1), matching(b, t2)
    groups1: Dict[Tuple[int, int], List[Tuple[int, int]]] = defaultdict(list)
    groups2: Dict[Tuple[int, int], List[Tuple[int, int]]] = defaultdict(list)
    for x, y in edges1:
        groups1[tuple(sorted((a.colors[x], a.colors[y])))].append((x, y))
    for x, y in edges2:
        groups2[tuple(sorted((b.colors[x], b.colors[y])))].append((x, y))
    if {key: len(v) for key, v in groups1.items()} != {
        key: len(v) for key, v in groups2.items()
    }:
        raise ConstructionStuckError(f"{step}: matching edges do not pair up", f)

    new: List[int] = []
    for key in sorted(groups1):
        for (x, y), (p, q) in zip(groups1[key], groups2[key]):
            if a.colors[x] == b.colors[p]:
                f[x], f[y] = p, q
            else:
                f[x], f[y] = q, p
            new += [x, y]

    matched1 = {v for edge in edges1 for v in edge}
    matched2 = {v for edge in edges2 for v in edge}
    loose1 = _by_color(a, t1 - matched1)
    loose2 = _by_color(b, t2 - matched2)
    if {c: len(v) for c, v in loose1.items()} != {c: len(v) for c, v in loose2.items()}:
        raise ConstructionStuckError(f"{step}: unmatched vertices differ in color", f)
    for color, members in loose1.items():
        for x, p in zip(members, loose2[color]):
            f[x] = p
            new.append(x)
    return new


def _pair_unique_colors(
    a: _Side, b: _Side, t1: Set[int], t2: Set[int], f: Mapping, step: str
) -> List[int]:
    """k >= 2 extension: colors are unique inside T1 and T2."""
    groups1, groups2 = _by_color(a, t1), _by_color(b, t2)
    if any(len(m) > 1 for m in groups1.values()) or any(
        len(m) > 1 for m in groups2.values()
    ):
        raise ConstructionStuckError(f"{step}: colors in T are not unique", f)
    if set(groups1) != set(groups2):
        raise ConstructionStuckError(f"{step}: T1 and T2 carry different colors", f)
    new = []
    for color, (x,) in groups1.items():
        f[x] = groups2[color][0]
        new.append(x)
    return new


def _seed(a: _Side, b: _Side, k: int) -> Tuple[int, int, Mapping]:
    v1 = 0
    candidates = [v for v in range(b.g.n) if b.colors[v] == a.colors[v1]]
    if not candidates:
        raise ConstructionStuckError(f"no vertex of h has the color of vertex {v1}")
    v2 = candidates[0]
    f: Mapping = {v1: v2}
    if k == 1:
        t1 = set(a.ball(v1)) - {v1}
        t2 = set(b.ball(v2)) - {v2}
        new = _pair_matchings(a, b, t1, t2, f, "seed")
        _check_extension(a, b, f, [v1] + new, "seed")
        return v1, v2, f
    rooted1 = extract_rooted_subgraph(a.g, a.colors, v1, k, a.dm)
    rooted2 = extract_rooted_subgraph(b.g, b.colors, v2, k, b.dm)
    local = are_rooted_isomorphic(rooted1, rooted2)
    if local is None:
        raise ConstructionStuckError("seed: rooted k-hop subgraphs differ", f)
    f = {rooted1.vertex_ids[i]: rooted2.vertex_ids[j] for i, j in local.items()}
    _check_extension(a, b, f, sorted(f), "seed")
    return v1, v2, f


def construct_isomorphism(
    g: FeaturedGraph,
    h: FeaturedGraph,
    k: int,
    runs: Optional[Tuple[WlRun, WlRun]] = None,
) -> Mapping:
    """Build an isomorphism g -> h by the inductive extension argument.

    Args:
        g: First graph
        h: Second graph
        k: Radius of the subgraph WL test
        runs: k-hop subgraph WL runs of ``g`` and ``h`` sharing one interner
            (computed when omitted)

    Returns:
        Vertex bijection that maps features and edges exactly

    Raises:
        PreconditionError: a hypothesis (connected, circumference,
            k-separable, indistinguishable) does not hold
        ConstructionStuckError: the extension failed, with the partial map
    """
    if runs is None:
        shared = ColorInterner()
        runs = (khop_subgraph_wl(g, k, shared), khop_subgraph_wl(h, k, shared))
    elif any(run.variant is not Variant.SUBGRAPH or run.k != k for run in runs):
        raise PreconditionError("runs", f"expected {k}-hop subgraph WL runs")
    _check_hypotheses(g, h, k, runs)

    a = _Side(g, runs[0], all_pairs_distances(g), k)
    b = _Side(h, runs[1], all_pairs_distances(h), k)
    v1, v2, f = _seed(a, b, k)
    s1, s2 = {v1}, {v2}
    around1, around2 = set(a.ball(v1)), set(b.ball(v2))

    while len(s1) < g.n:
        v1 = min(v for v in around1 - s1 if any(u in s1 for u in g.adjacency[v]))
        v2 = f[v1]
        step = f"step {len(s1)} (v1={v1}, v2={v2})"
        if v2 in s2 or not any(u in s2 for u in h.adjacency[v2]):
            raise ConstructionStuckError(f"{step}: image is not on the frontier", f)
        ball1, ball2 = set(a.ball(v1)), set(b.ball(v2))
        if {f[x] for x in ball1 & around1} != ball2 & around2:
            raise ConstructionStuckError(f"{step}: overlaps do not correspond", f)
        t1, t2 = ball1 - around1, ball2 - around2
        if len(t1) != len(t2):
            raise ConstructionStuckError(f"{step}: |T1| != |T2|", f)
        if k == 1:
            new = _pair_matchings(a, b, t1, t2, f, step)
        else:
            new = _pair_unique_colors(a, b, t1, t2, f, step)
        _check_extension(a, b, f, new, step)
        s1.add(v1)
        s2.add(v2)
        around1 |= ball1
        around2 |= ball2
        if set(f) != around1 or set(f.values()) != around2:
            raise ConstructionStuckError(f"{step}: map does not cover N_k(S)", f)

    if not validate_isomorphism(g, h, f):
        raise ConstructionStuckError("final map is not an isomorphism", f)
    logger.debug(f"Constructed isomorphism on {g.n} vertices (k={k})")
    return dict(sorted(f.items()))
