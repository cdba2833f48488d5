import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fsgraph.graph import Graph, make_graph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7, bipartite=False):
    """Random simple graphs; with ``bipartite`` the parts are drawn too and declared."""
    n = draw(st.integers(min_n, max_n))
    if bipartite:
        part = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    else:
        part = None
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [e for e, keep in zip(pairs, mask) if keep], part)


@st.composite
def graph_pairs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return draw(graphs(n, n)), draw(graphs(n, n))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return make_graph(len(index), [(index[a], index[b]) for a, b in h.edges()])


@pytest.fixture
def nx_graph():
    return to_nx
