"""Hypothesis strategies and small helpers shared by the test modules."""

import sys
from itertools import combinations
from pathlib import Path

import networkx as nx
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent / "scripts"))

from wllab.graph_core import FeaturedGraph  # noqa: E402


@st.composite
def featured_graphs(draw, min_n=1, max_n=7, classes=2, connected=False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    possible = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(possible), unique=True)) if possible else []
    if connected:
        # a random spanning tree keeps the graph connected
        for v in range(1, n):
            parent = draw(st.integers(min_value=0, max_value=v - 1))
            if (parent, v) not in edges:
                edges.append((parent, v))
    features = draw(
        st.lists(st.integers(0, classes - 1), min_size=n, max_size=n)
    )
    return FeaturedGraph.from_edges(n, edges, [(float(c),) for c in features])


def to_networkx(g: FeaturedGraph) -> nx.Graph:
    nxg = nx.Graph()
    for v in range(g.n):
        nxg.add_node(v, feature=g.features[v])
    nxg.add_edges_from(g.edges)
    return nxg


def from_networkx(nxg: nx.Graph) -> FeaturedGraph:
    index = {v: i for i, v in enumerate(sorted(nxg.nodes))}
    return FeaturedGraph.from_edges(
        len(index), [(index[a], index[b]) for a, b in nxg.edges]
    )


def nx_isomorphic(a: FeaturedGraph, b: FeaturedGraph) -> bool:
    return nx.is_isomorphic(
        to_networkx(a),
        to_networkx(b),
        node_match=lambda x, y: x["feature"] == y["feature"],
    )
