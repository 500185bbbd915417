"""Example graphs, exhaustive enumeration and random sampling."""

from .enumeration import enumerate_connected, enumerate_up_to
from .fixtures import FIXTURE_NAMES, FixtureSet, cycle_graph, cycle_pair, fixture
from .sampling import random_bounded_graph

__all__ = [
    "FIXTURE_NAMES",
    "FixtureSet",
    "cycle_graph",
    "cycle_pair",
    "enumerate_connected",
    "enumerate_up_to",
    "fixture",
    "random_bounded_graph",
]
