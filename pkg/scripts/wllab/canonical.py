"""Canonical coding of (rooted) colored graphs and a backtracking isomorphism oracle.

A canonical code is the lexicographically smallest serialization of a colored
graph over the leaves of an individualization-refinement search tree. Two
independent paths decide isomorphism here: :func:`canonical_code` and the
backtracking :func:`are_isomorphic`; the test suite checks one against the other.

Code layout::

    varint(vertex count) varint(root position + 1, or 0 when unrooted)
    varint(color) for each position
    upper-triangular adjacency bits, row-major, packed MSB first, zero padded
"""

import itertools
import logging
import threading
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .core.config import active_limits
from .core.errors import CapacityError, InputError
from .graph_core import FeaturedGraph, RootedColoredGraph

logger = logging.getLogger(__name__)

Cells = List[List[int]]
Adjacency = Sequence[Sequence[int]]


def encode_varint(value: int) -> bytes:
    """Unsigned LEB128 encoding."""
    if value < 0:
        raise InputError(f"varint values must be non-negative, got {value}")
    out = bytearray()
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return bytes(out)


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Byte string equal for two colored graphs iff they are isomorphic."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    def __len__(self) -> int:
        return len(self.data)


_interner_tags = itertools.count(1)


class ColorInterner:
    """Injective table from canonical byte strings to dense color ids.

    Access is serialized by a lock; ids are only meaningful within one
    interner, so persisted artifacts store codes and never raw ids.
    """

    def __init__(self):
        self.tag = next(_interner_tags)
        self._table: Dict[bytes, int] = {}
        self._lock = threading.Lock()

    def intern(self, key: Union[CanonicalCode, bytes]) -> int:
        raw = key.data if isinstance(key, CanonicalCode) else bytes(key)
        with self._lock:
            color = self._table.get(raw)
            if color is None:
                color = len(self._table)
                self._table[raw] = color
            return color

    def intern_sorted(self, keys: Sequence[bytes]) -> List[int]:
        """Intern a batch in sorted key order so ids replay deterministically."""
        for key in sorted(set(keys)):
            self.intern(key)
        with self._lock:
            return [self._table[key] for key in keys]

    @property
    def next_id(self) -> int:
        return len(self._table)

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, key: Union[CanonicalCode, bytes]) -> bool:
        raw = key.data if isinstance(key, CanonicalCode) else bytes(key)
        return raw in self._table


def intern(interner: ColorInterner, code: Union[CanonicalCode, bytes]) -> int:
    """Return the color id of ``code``, allocating a fresh id on first sight."""
    return interner.intern(code)


# -- individualization / refinement -------------------------------------------


def _refine(adjacency: Adjacency, cells: Cells) -> Cells:
    """Split cells by neighbor-cell signatures until the partition is equitable.

    Subcells are ordered by signature, so the result depends only on the
    isomorphism type of (graph, ordered partition).
    """
    while True:
        cell_of = {}
        for index, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = index
        refined: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
            for v in cell:
                groups[tuple(sorted(cell_of[u] for u in adjacency[v]))].append(v)
            if len(groups) > 1:
                changed = True
            for signature in sorted(groups):
                refined.append(groups[signature])
        cells = refined
        if not changed:
            return cells


class _SearchState:
    """Best leaf so far plus automorphisms discovered from equal leaves."""

    def __init__(self, n: int):
        self.n = n
        self.first: Optional[Tuple[Tuple[int, ...], bytes]] = None
        self.best: Optional[Tuple[Tuple[int, ...], bytes]] = None
        self.generators: List[Tuple[int, ...]] = []

    def consider(self, order: Tuple[int, ...], code: bytes) -> None:
        if self.first is None:
            self.first = self.best = (order, code)
            return
        for reference_order, reference_code in (self.first, self.best):
            if code == reference_code:
                gamma = [0] * self.n
                for a, b in zip(reference_order, order):
                    gamma[a] = b
                self.generators.append(tuple(gamma))
                return
        if code < self.best[1]:
            self.best = (order, code)

    def same_orbit(self, explored: List[int], w: int, fixed: Tuple[int, ...]) -> bool:
        """Whether ``w`` is in the orbit of an explored vertex under the known
        automorphisms that fix ``fixed`` pointwise."""
        usable = [g for g in self.generators if all(g[p] == p for p in fixed)]
        if not usable:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in usable:
            for a, b in enumerate(gamma):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        root = find(w)
        return any(find(x) == root for x in explored)


def _leaf_code(
    header: bytes,
    adjacency: Adjacency,
    colors: Sequence[int],
    order: Sequence[int],
) -> bytes:
    n = len(order)
    position = {v: i for i, v in enumerate(order)}
    bits = np.zeros(n * (n - 1) // 2, dtype=np.uint8)
    offsets = [i * (2 * n - i - 1) // 2 for i in range(n)]
    for i, v in enumerate(order):
        for u in adjacency[v]:
            j = position[u]
            if j > i:
                bits[offsets[i] + (j - i - 1)] = 1
    color_part = b"".join(encode_varint(colors[v]) for v in order)
    return header + color_part + np.packbits(bits).tobytes()


def _search(
    header: bytes,
    adjacency: Adjacency,
    colors: Sequence[int],
    cells: Cells,
    fixed: Tuple[int, ...],
    state: _SearchState,
) -> None:
    cells = _refine(adjacency, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        order = tuple(cell[0] for cell in cells)
        state.consider(order, _leaf_code(header, adjacency, colors, order))
        return
    cell = cells[target]
    explored: List[int] = []
    for w in sorted(cell):
        if explored and state.same_orbit(explored, w, fixed):
            continue
        explored.append(w)
        child = (
            cells[:target]
            + [[w], [x for x in cell if x != w]]
            + cells[target + 1 :]
        )
        _search(header, adjacency, colors, child, fixed + (w,), state)


def _canonical_bytes(
    adjacency: Adjacency,
    colors: Sequence[int],
    root: Optional[int],
) -> bytes:
    n = len(colors)
    header = encode_varint(n) + encode_varint(0 if root is None else 1)
    by_color: Dict[int, List[int]] = defaultdict(list)
    for v, c in enumerate(colors):
        if v != root:
            by_color[c].append(v)
    cells: Cells = [[root]] if root is not None else []
    cells += [by_color[c] for c in sorted(by_color)]
    state = _SearchState(n)
    _search(header, adjacency, colors, cells, (), state)
    return state.best[1]


def _check_capacity(size: int, limit: Optional[int]) -> None:
    limit = active_limits().canonical_max_vertices if limit is None else limit
    if size > limit:
        raise CapacityError("canonical code", size, limit)


def canonical_code(
    rg: RootedColoredGraph, limit: Optional[int] = None
) -> CanonicalCode:
    """Canonical code of a rooted colored graph.

    Equal codes iff the graphs are isomorphic with root mapped to root and
    colors preserved.

    Raises:
        CapacityError: more vertices than the canonicalization limit
    """
    _check_capacity(rg.size, limit)
    return CanonicalCode(_canonical_bytes(rg.adjacency, rg.colors, rg.root))


def feature_classes(g: FeaturedGraph) -> Tuple[int, ...]:
    """Dense feature-class ranks, ordered by the bit-exact feature bytes."""
    keys = [g.feature_key(v) for v in range(g.n)]
    rank = {key: i for i, key in enumerate(sorted(set(keys)))}
    return tuple(rank[key] for key in keys)


def canonical_code_unrooted(
    g: FeaturedGraph,
    colors: Optional[Sequence[int]] = None,
    limit: Optional[int] = None,
) -> CanonicalCode:
    """Canonical code of a whole colored graph with no distinguished root.

    Without ``colors`` the feature classes of ``g`` are used, which makes the
    code an isomorphism invariant of the featured graph.
    """
    _check_capacity(g.n, limit)
    palette = tuple(colors) if colors is not None else feature_classes(g)
    if len(palette) != g.n:
        raise InputError(f"coloring has {len(palette)} entries for {g.n} vertices")
    return CanonicalCode(_canonical_bytes(g.adjacency, palette, None))


# -- backtracking oracle -------------------------------------------------------


def _backtrack(
    adjacency_a: Adjacency,
    adjacency_b: Adjacency,
    labels_a: Sequence[Hashable],
    labels_b: Sequence[Hashable],
    pinned: Sequence[Tuple[int, int]] = (),
) -> Optional[Dict[int, int]]:
    n = len(labels_a)
    if n != len(labels_b):
        return None
    invariant_a = [(labels_a[v], len(adjacency_a[v])) for v in range(n)]
    invariant_b = [(labels_b[v], len(adjacency_b[v])) for v in range(n)]
    if Counter(invariant_a) != Counter(invariant_b):
        return None
    sets_a = [set(nbrs) for nbrs in adjacency_a]
    sets_b = [set(nbrs) for nbrs in adjacency_b]

    mapping: Dict[int, int] = {}
    used = set()

    def consistent(a: int, b: int) -> bool:
        if invariant_a[a] != invariant_b[b]:
            return False
        return all((x in sets_a[a]) == (y in sets_b[b]) for x, y in mapping.items())

    for a, b in pinned:
        if not consistent(a, b):
            return None
        mapping[a] = b
        used.add(b)

    # BFS order so each new vertex is usually adjacent to an already mapped one.
    order: List[int] = []
    seen = set()
    for start in [a for a, _ in pinned] + list(range(n)):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            if v not in mapping:
                order.append(v)
            for u in adjacency_a[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)

    def extend(index: int) -> bool:
        if index == len(order):
            return True
        a = order[index]
        for b in range(n):
            if b in used or not consistent(a, b):
                continue
            mapping[a] = b
            used.add(b)
            if extend(index + 1):
                return True
            del mapping[a]
            used.discard(b)
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(a: FeaturedGraph, b: FeaturedGraph) -> Optional[Dict[int, int]]:
    """Search for a feature- and edge-preserving bijection from ``a`` to ``b``.

    Returns:
        Witness mapping (vertex of ``a`` -> vertex of ``b``) or ``None``
    """
    if a.n != b.n or len(a.edges) != len(b.edges):
        return None
    labels_a = [a.feature_key(v) for v in range(a.n)]
    labels_b = [b.feature_key(v) for v in range(b.n)]
    return _backtrack(a.adjacency, b.adjacency, labels_a, labels_b)


def are_rooted_isomorphic(
    a: RootedColoredGraph, b: RootedColoredGraph
) -> Optional[Dict[int, int]]:
    """Rooted, color-preserving isomorphism between local positions, or ``None``."""
    if a.size != b.size or len(a.edges) != len(b.edges):
        return None
    return _backtrack(
        a.adjacency,
        b.adjacency,
        list(a.colors),
        list(b.colors),
        pinned=[(a.root, b.root)],
    )


def validate_isomorphism(
    a: FeaturedGraph, b: FeaturedGraph, mapping: Dict[int, int]
) -> bool:
    """Check a witness: a bijection with equal features and equal edge sets."""
    if a.n != b.n or sorted(mapping) != list(range(a.n)):
        return False
    if sorted(mapping.values()) != list(range(b.n)):
        return False
    if any(a.feature_key(v) != b.feature_key(mapping[v]) for v in range(a.n)):
        return False
    image = {tuple(sorted((mapping[x], mapping[y]))) for x, y in a.edges}
    return image == set(b.edges)
