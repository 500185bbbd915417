"""GraphDocument JSON files and one-way DOT export.

A GraphDocument is::

    {"n": 3, "m": 1,
     "features": [[0.0], [0.0], [1.5]],
     "edges": [[0, 1], [1, 2]],
     "labels": ["a", "b", "c"]}

``labels`` is optional. Serialization is canonical: fixed key order, edges
sorted, one feature row or edge per line, floats written with ``repr`` (the
shortest string that parses back to the same binary64 value).
"""

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .canonical import feature_classes
from .core.errors import InputError
from .graph_core import FeaturedGraph

logger = logging.getLogger(__name__)

DOT_PALETTE = (
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#ffff33",
    "#a65628",
    "#f781bf",
    "#999999",
)


def _reject_constant(name: str) -> float:
    raise InputError(f"non-finite number {name} is not allowed in a GraphDocument")


def _exact_float(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"{where}: expected a number, got {value!r}")
    result = float(value)
    if not math.isfinite(result):
        raise InputError(f"{where}: non-finite value {value!r}")
    if isinstance(value, int) and int(result) != value:
        raise InputError(f"{where}: integer {value} is not exactly representable")
    return result


def _integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class GraphDocument:
    n: int
    m: int
    features: Tuple[Tuple[float, ...], ...]
    edges: Tuple[Tuple[int, int], ...]
    labels: Optional[Tuple[str, ...]] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GraphDocument":
        if not isinstance(data, dict):
            raise InputError("a GraphDocument must be a JSON object")
        unknown = set(data) - {"n", "m", "features", "edges", "labels"}
        if unknown:
            raise InputError(f"unknown GraphDocument keys: {sorted(unknown)}")
        for key in ("n", "m", "features", "edges"):
            if key not in data:
                raise InputError(f"GraphDocument is missing {key!r}")
        n = _integer(data["n"], "n")
        m = _integer(data["m"], "m")
        if m < 0:
            raise InputError(f"m must be non-negative, got {m}")
        rows = data["features"]
        if not isinstance(rows, list) or len(rows) != n:
            raise InputError(f"features must be a list of {n} vectors")
        features = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != m:
                raise InputError(f"features[{i}] must hold {m} numbers")
            features.append(
                tuple(_exact_float(x, f"features[{i}][{j}]") for j, x in enumerate(row))
            )
        edges = []
        if not isinstance(data["edges"], list):
            raise InputError("edges must be a list of [i, j] pairs")
        for i, pair in enumerate(data["edges"]):
            if not isinstance(pair, list) or len(pair) != 2:
                raise InputError(f"edges[{i}] must be an [i, j] pair")
            a = _integer(pair[0], f"edges[{i}][0]")
            b = _integer(pair[1], f"edges[{i}][1]")
            edges.append((a, b))
        labels = data.get("labels")
        if labels is not None:
            if not isinstance(labels, list) or not all(
                isinstance(x, str) for x in labels
            ):
                raise InputError("labels must be a list of strings")
            labels = tuple(labels)
        return cls(n, m, tuple(features), tuple(edges), labels)

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        try:
            data = json.loads(text, parse_constant=_reject_constant)
        except json.JSONDecodeError as e:
            raise InputError(f"invalid JSON: {e}") from e
        return cls.from_dict(data)

    @classmethod
    def from_graph(cls, g: FeaturedGraph) -> "GraphDocument":
        return cls(
            n=g.n,
            m=g.m,
            features=g.features,
            edges=tuple(sorted(g.edges)),
            labels=g.labels,
        )

    def to_graph(self) -> FeaturedGraph:
        """Validate against the graph invariants (raises ``InputError``)."""
        return FeaturedGraph.from_edges(self.n, self.edges, self.features, self.labels)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "n": self.n,
            "m": self.m,
            "features": [list(h) for h in self.features],
            "edges": [list(e) for e in sorted(self.edges)],
        }
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    def to_json(self) -> str:
        def row(values) -> str:
            return json.dumps(list(values), allow_nan=False)

        lines = ["{", f'  "n": {self.n},', f'  "m": {self.m},', '  "features": [']
        lines.append(",\n".join(f"    {row(h)}" for h in self.features))
        lines.append("  ],")
        lines.append('  "edges": [')
        lines.append(",\n".join(f"    {row(e)}" for e in sorted(self.edges)))
        if self.labels is None:
            lines.append("  ]")
        else:
            lines.append("  ],")
            lines.append(f'  "labels": {json.dumps(list(self.labels))}')
        lines.append("}")
        return "\n".join(line for line in lines if line) + "\n"


def parse_graph(text: str) -> FeaturedGraph:
    return GraphDocument.from_json(text).to_graph()


def serialize_graph(g: FeaturedGraph) -> str:
    return GraphDocument.from_graph(g).to_json()


def load_graph(path: Union[str, Path]) -> FeaturedGraph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    try:
        return parse_graph(text)
    except InputError as e:
        raise InputError(f"{path}: {e}") from e


def dump_graph(g: FeaturedGraph, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_graph(g), encoding="utf-8")
    logger.debug(f"Wrote graph with {g.n} vertices to {path}")
    return path


def to_dot(g: FeaturedGraph, name: str = "G") -> str:
    """Undirected DOT drawing; the feature class picks the node color."""
    classes = feature_classes(g)
    lines: List[str] = [f"graph {json.dumps(name)} {{", "  node [style=filled];"]
    for v in range(g.n):
        color = DOT_PALETTE[classes[v] % len(DOT_PALETTE)]
        lines.append(
            f'  {v} [label={json.dumps(g.label(v))}, class={classes[v]}, '
            f'color="{color}"];'
        )
    for a, b in sorted(g.edges):
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
