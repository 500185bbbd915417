"""Graph representation, BFS distances, k-hop neighborhoods and rooted subgraphs.

Vertices are dense 0-based integers. Feature vectors are tuples of binary64
floats compared bit-exactly through :meth:`FeaturedGraph.feature_key`.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import (
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .core.errors import InputError

UNREACHABLE = -1

Edge = Tuple[int, int]
Feature = Tuple[float, ...]


def _normalize_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class FeaturedGraph:
    """Undirected, unweighted graph with one feature vector per vertex."""

    n: int
    edges: FrozenSet[Edge]
    features: Tuple[Feature, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"vertex count must be positive, got {self.n}")
        if len(self.features) != self.n:
            raise InputError(
                f"expected {self.n} feature vectors, got {len(self.features)}"
            )
        dims = {len(h) for h in self.features}
        if len(dims) > 1:
            raise InputError(f"feature vectors have mixed dimensions {sorted(dims)}")
        for a, b in self.edges:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InputError(f"edge ({a}, {b}) out of range for n={self.n}")
            if a == b:
                raise InputError(f"self-loop at vertex {a}")
            if a > b:
                raise InputError(f"edge ({a}, {b}) is not normalized")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError(f"expected {self.n} labels, got {len(self.labels)}")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        features: Optional[Sequence[Sequence[float]]] = None,
        labels: Optional[Sequence[str]] = None,
    ) -> "FeaturedGraph":
        """Build a graph, normalizing edge order and rejecting duplicates.

        Without ``features`` every vertex gets the uniform feature ``(0.0,)``.
        """
        normalized = set()
        for edge in edges:
            if len(edge) != 2:
                raise InputError(f"edge {edge!r} does not have two endpoints")
            a, b = int(edge[0]), int(edge[1])
            pair = _normalize_edge(a, b)
            if pair in normalized:
                raise InputError(f"duplicate edge {pair}")
            normalized.add(pair)
        if features is None:
            feats = tuple((0.0,) for _ in range(n))
        else:
            feats = tuple(tuple(float(x) for x in h) for h in features)
        return cls(
            n=n,
            edges=frozenset(normalized),
            features=feats,
            labels=tuple(labels) if labels is not None else None,
        )

    @property
    def m(self) -> int:
        """Feature dimension."""
        return len(self.features[0])

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            neighbors[a].append(b)
            neighbors[b].append(a)
        return tuple(tuple(sorted(nbrs)) for nbrs in neighbors)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: int, b: int) -> bool:
        return _normalize_edge(a, b) in self.edges

    def feature_key(self, v: int) -> bytes:
        """Bit-exact byte encoding of a vertex feature (little-endian float64)."""
        return np.asarray(self.features[v], dtype="<f8").tobytes()

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else f"v{v}"

    def permuted(self, sigma: Sequence[int]) -> "FeaturedGraph":
        """Return sigma * g: vertex ``i`` of ``g`` becomes vertex ``sigma[i]``."""
        sigma = [int(s) for s in sigma]
        if sorted(sigma) != list(range(self.n)):
            raise InputError(f"not a permutation of 0..{self.n - 1}: {sigma}")
        features: List[Feature] = [()] * self.n
        labels: Optional[List[str]] = [""] * self.n if self.labels else None
        for i, target in enumerate(sigma):
            features[target] = self.features[i]
            if labels is not None:
                labels[target] = self.labels[i]
        return FeaturedGraph(
            n=self.n,
            edges=frozenset(_normalize_edge(sigma[a], sigma[b]) for a, b in self.edges),
            features=tuple(features),
            labels=tuple(labels) if labels is not None else None,
        )

    def disjoint_union(self, other: "FeaturedGraph") -> "FeaturedGraph":
        if self.m != other.m:
            raise InputError("cannot join graphs with different feature dimensions")
        shift = self.n
        return FeaturedGraph(
            n=self.n + other.n,
            edges=self.edges | {(a + shift, b + shift) for a, b in other.edges},
            features=self.features + other.features,
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> "FeaturedGraph":
        """Induced subgraph on ``vertices`` (re-indexed in ascending order)."""
        kept = sorted(set(vertices))
        for v in kept:
            self._check_vertex(v)
        position = {v: i for i, v in enumerate(kept)}
        edges = {
            (position[a], position[b])
            for a, b in self.edges
            if a in position and b in position
        }
        return FeaturedGraph(
            n=len(kept),
            edges=frozenset(edges),
            features=tuple(self.features[v] for v in kept),
            labels=tuple(self.label(v) for v in kept) if self.labels else None,
        )

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs shortest-path lengths, ``UNREACHABLE`` for disconnected pairs."""

    d: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        return int(self.d[index])

    def distance(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def row(self, v: int) -> np.ndarray:
        return self.d[v]

    def within(self, v: int, k: int) -> FrozenSet[int]:
        row = self.d[v]
        return frozenset(np.flatnonzero((row >= 0) & (row <= k)).tolist())

    def at_distance(self, v: int, k: int) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(self.d[v] == k).tolist())

    def set_distance(self, v: int, vertices: Iterable[int]) -> int:
        """Minimum distance from ``v`` to a vertex set (``UNREACHABLE`` if none)."""
        reachable = [int(self.d[v, u]) for u in vertices if self.d[v, u] >= 0]
        return min(reachable) if reachable else UNREACHABLE


@dataclass(frozen=True)
class RootedColoredGraph:
    """Induced subgraph with a distinguished root and per-vertex colors.

    ``vertex_ids`` maps local positions back to vertices of the parent graph.
    """

    vertex_ids: Tuple[int, ...]
    root: int
    edges: FrozenSet[Edge]
    colors: Tuple[int, ...]

    def __post_init__(self):
        size = len(self.vertex_ids)
        if not 0 <= self.root < size:
            raise InputError(f"root position {self.root} invalid for {size} vertices")
        if len(self.colors) != size:
            raise InputError(f"expected {size} colors, got {len(self.colors)}")
        for a, b in self.edges:
            if not (0 <= a < b < size):
                raise InputError(f"local edge ({a}, {b}) invalid for {size} vertices")

    @property
    def size(self) -> int:
        return len(self.vertex_ids)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbors: List[List[int]] = [[] for _ in range(self.size)]
        for a, b in self.edges:
            neighbors[a].append(b)
            neighbors[b].append(a)
        return tuple(tuple(sorted(nbrs)) for nbrs in neighbors)

    def relabeled(self, sigma: Sequence[int]) -> "RootedColoredGraph":
        """Move local vertex ``i`` to position ``sigma[i]``."""
        sigma = [int(s) for s in sigma]
        if sorted(sigma) != list(range(self.size)):
            raise InputError(f"not a permutation of 0..{self.size - 1}: {sigma}")
        ids: List[int] = [0] * self.size
        colors: List[int] = [0] * self.size
        for i, target in enumerate(sigma):
            ids[target] = self.vertex_ids[i]
            colors[target] = self.colors[i]
        return RootedColoredGraph(
            vertex_ids=tuple(ids),
            root=sigma[self.root],
            edges=frozenset(_normalize_edge(sigma[a], sigma[b]) for a, b in self.edges),
            colors=tuple(colors),
        )


def all_pairs_distances(g: FeaturedGraph) -> DistanceMatrix:
    """Exact unweighted shortest paths between every pair of vertices."""
    if g.edges:
        rows, cols = zip(*g.edges)
    else:
        rows, cols = (), ()
    adjacency = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n)
    )
    raw = shortest_path(adjacency, method="D", directed=False, unweighted=True)
    d = np.where(np.isinf(raw), UNREACHABLE, raw).astype(np.int64)
    d.setflags(write=False)
    return DistanceMatrix(d=d)


def k_hop_neighborhood(dm: DistanceMatrix, v: int, k: int) -> FrozenSet[int]:
    """Return ``{u : d(u, v) <= k}``; always contains ``v``."""
    if not 0 <= v < dm.n:
        raise InputError(f"vertex {v} out of range for n={dm.n}")
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    return dm.within(v, k)


def extract_rooted_subgraph(
    g: FeaturedGraph,
    colors,
    v: int,
    k: int,
    dm: Optional[DistanceMatrix] = None,
) -> RootedColoredGraph:
    """Induced subgraph on the k-hop neighborhood of ``v``, rooted at ``v``.

    Args:
        g: Parent graph
        colors: A ``Coloring`` or a plain sequence with one color per vertex
        v: Root vertex
        k: Radius
        dm: Precomputed distances of ``g`` (computed when omitted)
    """
    palette = tuple(getattr(colors, "colors", colors))
    if len(palette) != g.n:
        raise InputError(f"coloring has {len(palette)} entries for {g.n} vertices")
    dm = dm if dm is not None else all_pairs_distances(g)
    vertex_ids = tuple(sorted(k_hop_neighborhood(dm, v, k)))
    position = {u: i for i, u in enumerate(vertex_ids)}
    edges = frozenset(
        (position[a], position[b])
        for a, b in g.edges
        if a in position and b in position
    )
    return RootedColoredGraph(
        vertex_ids=vertex_ids,
        root=position[v],
        edges=edges,
        colors=tuple(palette[u] for u in vertex_ids),
    )
