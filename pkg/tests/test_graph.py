import math
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from fsgraph.graph import (
    UNBOUNDED,
    UNREACHABLE,
    GraphError,
    RandomModel,
    articulation_points,
    complete,
    complete_bipartite,
    cycle,
    degree_stats,
    distance,
    find_isomorphism,
    generator,
    girth,
    is_biconnected,
    is_bipartite,
    is_connected,
    make_graph,
    path,
    sample,
    star,
    theta0,
)


def test_make_graph_smallest_and_complete():
    assert make_graph(2, [(0, 1)]).edges() == [(0, 1)]
    assert make_graph(4, combinations(range(4), 2)).m == 6


def test_make_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        make_graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        make_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        make_graph(2, [(0, 1)], partition=[0, 0])


def test_duplicate_edges_are_merged():
    g = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_theta0_shape():
    g = theta0()
    assert (g.n, g.m) == (7, 8)
    assert is_biconnected(g)
    assert is_bipartite(g) is None
    assert degree_stats(g) == (2, 3)
    # hexagon plus a vertex on 0 and 3: the shortest cycle is 0-1-2-3-6
    assert girth(g) == 5


def test_generators():
    s = star(4)
    assert s.neighbors(0) == [1, 2, 3] and s.m == 3 and s.partition is not None
    assert generator("complete_bipartite", 2, 2).m == 4
    assert generator("theta0").m == 8
    with pytest.raises(GraphError):
        generator("cycle", 2)
    with pytest.raises(GraphError):
        generator("nope", 3)


def test_sample_extremes():
    assert sample(RandomModel("gnp", 5, 0.0, 3)).m == 0
    assert sample(RandomModel("gnp", 5, 1.0, 3)).m == 10
    k33 = sample(RandomModel("bipartite_gnp", 3, 1.0, 3))
    assert k33 == complete_bipartite(3, 3)


def test_random_model_validation():
    with pytest.raises(GraphError):
        RandomModel("gnp", 5, 1.5, 0)
    with pytest.raises(GraphError):
        RandomModel("gnp", 0, 0.5, 0)
    with pytest.raises(GraphError):
        RandomModel("other", 3, 0.5, 0)


def test_degree_stats():
    assert degree_stats(complete(4)) == (3, 3)
    assert degree_stats(star(5)) == (1, 4)


def test_biconnected_examples():
    assert is_biconnected(cycle(5))
    assert not is_biconnected(path(4))
    assert is_biconnected(make_graph(1, []))
    assert is_biconnected(make_graph(2, [(0, 1)]))
    assert not is_biconnected(make_graph(2, []))


def test_bipartite_examples():
    assert is_bipartite(cycle(6)) is not None
    assert is_bipartite(cycle(5)) is None
    parts = is_bipartite(complete_bipartite(2, 3))
    assert sorted([parts.count(0), parts.count(1)]) == [2, 3]


def test_girth_and_distance_examples():
    assert girth(cycle(7)) == 7
    assert girth(path(6)) == UNBOUNDED
    assert distance(path(5), 0, 4) == 4
    assert distance(make_graph(3, [(0, 1)]), 0, 2) == UNREACHABLE
    assert distance(cycle(8), 0, 4) == 4
    with pytest.raises(GraphError):
        distance(path(3), 0, 5)


@given(st.integers(0, 2**32), st.floats(0, 1), st.integers(1, 9))
def test_sampling_is_reproducible(seed, p, n):
    assert sample(RandomModel("gnp", n, p, seed)) == sample(RandomModel("gnp", n, p, seed))


@given(st.integers(0, 2**32), st.floats(0, 1), st.integers(1, 6))
def test_bipartite_samples_cross_parts(seed, p, r):
    g = sample(RandomModel("bipartite_gnp", r, p, seed))
    assert g.n == 2 * r
    assert all((u < r) != (v < r) for u, v in g.edges())


@given(graphs(max_n=9))
def test_degree_sum(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


@given(graphs(max_n=9))
def test_biconnected_implies_connected(g):
    if is_biconnected(g):
        assert is_connected(g)


@given(graphs(max_n=9))
def test_structure_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == (g.n <= 1 or nx.is_connected(h))
    assert (is_bipartite(g) is not None) == nx.is_bipartite(h)
    assert articulation_points(g) == sorted(nx.articulation_points(h))
    if g.n >= 3:
        assert is_biconnected(g) == nx.is_biconnected(h)
    expected_girth = nx.girth(h)
    assert girth(g) == expected_girth


@given(graphs(max_n=8))
def test_bipartite_iff_no_odd_cycle(g):
    # brute force over all simple cycles
    odd = any(len(c) % 2 for c in nx.simple_cycles(to_nx(g)))
    assert (is_bipartite(g) is None) == odd


@given(graphs(max_n=8), st.data())
def test_distances_match_networkx(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    lengths = nx.single_source_shortest_path_length(to_nx(g), u)
    for v in range(g.n):
        assert distance(g, u, v) == lengths.get(v, UNREACHABLE)


@given(graphs(min_n=1, max_n=7), st.randoms(use_true_random=False))
def test_isomorphism_finds_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = make_graph(g.n, [(perm[a], perm[b]) for a, b in g.edges()])
    iso = find_isomorphism(g, h)
    assert iso is not None
    assert all(h.has_edge(iso[a], iso[b]) for a, b in g.edges())


def test_isomorphism_rejects_different_graphs():
    assert find_isomorphism(cycle(6), path(6)) is None
    assert find_isomorphism(theta0(), cycle(7)) is None
