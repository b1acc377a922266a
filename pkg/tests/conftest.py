"""Shared fixtures.

Groups, Bruhat graphs, and full curvature sweeps are the expensive
objects here; each is built once per session and shared by every test
that needs it.
"""

import pytest

from coxric import build_group, parse_spec
from coxric.curvature import global_ricci

CORPUS = [
    "A1", "A1xA1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4",
    "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
]


@pytest.fixture(scope="session")
def groups():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = build_group(parse_spec(spec))
        return cache[spec]

    return get


@pytest.fixture(scope="session")
def bruhat(groups):
    def get(spec):
        return groups(spec).bruhat_graph()

    return get


@pytest.fixture(scope="session")
def sweeps(bruhat):
    """Per-vertex curvature sweep of a Bruhat graph, computed once."""
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = global_ricci(bruhat(spec))
        return cache[spec]

    return get
