import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from linkpred.graph import Graph

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# Shared example graph: degrees k0=2, k1=3, k2=3, k3=3, k4=1.
G1_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]


@pytest.fixture
def g1():
    return Graph(G1_EDGES)


@st.composite
def edge_lists(draw, max_nodes=12, max_edges=30):
    """Random simple-graph edge lists with at least one edge."""
    n = draw(st.integers(min_value=2, max_value=max_nodes))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            min_size=1,
            max_size=max_edges,
        )
    )
    return pairs


@st.composite
def graphs(draw, max_nodes=12, max_edges=30):
    return Graph(draw(edge_lists(max_nodes=max_nodes, max_edges=max_edges)))


def random_simple_graph(n_nodes, n_edges, seed):
    """Plain rejection-sampled random graph for deterministic tests."""
    rng = random.Random(seed)
    seen = set()
    pairs = []
    while len(pairs) < n_edges:
        u = rng.randrange(n_nodes)
        v = rng.randrange(n_nodes)
        if u == v:
            continue
        key = frozenset((u, v))
        if key in seen:
            continue
        seen.add(key)
        pairs.append((u, v))
    return Graph(pairs)
