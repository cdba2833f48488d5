from collections import Counter
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_pairs, graphs
from fsgraph.constructions import build_bipartite_lower_bound, small_exchange_example
from fsgraph.fs import (
    CapExceededError,
    UnfriendlySwapError,
    apply_sequence,
    component_labels,
    components,
    concordance_class,
    exchange_target,
    exchangeable,
    find_isolated_vertex,
    format_sequence,
    friendly_neighbors,
    is_isolated,
    parse_sequence,
)
from fsgraph.graph import complete, complete_bipartite, empty, make_graph, min_degree, star, theta0, cycle
from fsgraph.perm import identity, inverse, rank, transpose_positions


def fs_oracle(x, y):
    """Explicit FS graph built with networkx straight from the definition."""
    n = x.n
    h = nx.Graph()
    perms = list(permutations(range(n)))
    h.add_nodes_from(perms)
    for b in perms:
        for a in range(n):
            for c in range(a + 1, n):
                if x.has_edge(a, c) and y.has_edge(b[a], b[c]):
                    h.add_edge(b, transpose_positions(b, a, c))
    return h


def sizes_oracle(x, y):
    return sorted(len(c) for c in nx.connected_components(fs_oracle(x, y)))


def test_components_examples():
    s = components(complete(4), complete(4))
    assert (s.component_count, s.size_multiset) == (1, (24,))
    s = components(empty(4), empty(4))
    assert s.component_count == 24 and s.isolated_count == 24
    assert components(complete_bipartite(2, 2), complete_bipartite(2, 2)).component_count == 2


def test_star7_theta0_is_split():
    # brute-force regression: six components of equal size
    s = components(star(7), theta0())
    assert s.component_count == 6
    assert s.size_multiset == (840,) * 6


@pytest.mark.parametrize("n, count", [(4, 2), (5, 6), (6, 24)])
def test_star_cycle_regression(n, count):
    assert components(star(n), cycle(n)).component_count == count


def test_summary_format():
    assert components(complete_bipartite(2, 2), complete_bipartite(2, 2)).format() == "count 2 sizes 12*2"


def test_cap_is_enforced():
    with pytest.raises(CapExceededError):
        components(empty(13), empty(13))
    with pytest.raises(CapExceededError):
        components(empty(5), empty(5), cap=14)


@settings(max_examples=60)
@given(graph_pairs(max_n=5))
def test_components_match_oracle(pair):
    x, y = pair
    s = components(x, y)
    assert list(s.size_multiset) == sizes_oracle(x, y)
    assert sum(s.size_multiset) == s.total
    assert s.isolated_count == s.size_multiset.count(1)


@settings(max_examples=40)
@given(graph_pairs(max_n=5))
def test_labels_agree_with_summary(pair):
    x, y = pair
    labels = component_labels(x, y)
    assert sorted(Counter(labels.tolist()).values()) == list(components(x, y).size_multiset)


def test_friendly_neighbors_examples():
    assert friendly_neighbors(empty(4), complete(4), identity(4)) == []
    assert len(friendly_neighbors(complete(3), complete(3), identity(3))) == 3
    ex = small_exchange_example()
    (first, *_rest) = ex.moves
    succ = apply_sequence(ex.x, ex.y, ex.sigma, [first]).final
    assert succ in [b for _, b in friendly_neighbors(ex.x, ex.y, ex.sigma)]
    assert succ == (0, 1, 3, 2)


@given(graph_pairs(max_n=6), st.data())
def test_neighbors_match_one_move_replays(pair, data):
    x, y = pair
    b = tuple(data.draw(st.permutations(list(range(x.n)))))
    via_neighbors = {c for _, c in friendly_neighbors(x, y, b)}
    via_moves = set()
    for u in range(x.n):
        for v in range(u + 1, x.n):
            try:
                via_moves.add(apply_sequence(x, y, b, [(u, v)]).final)
            except UnfriendlySwapError:
                pass
    assert via_neighbors == via_moves
    assert is_isolated(x, y, b) == (not via_neighbors)


def test_isolated_examples():
    assert is_isolated(empty(4), complete(4), (2, 0, 3, 1))
    assert not is_isolated(complete(5), complete(5), (4, 3, 2, 1, 0))
    c, s0 = build_bipartite_lower_bound(5)
    assert is_isolated(c.x, c.y, s0)


def test_find_isolated_examples():
    res = find_isolated_vertex(complete(3), complete(3))
    assert res.exhaustive and not res.found
    two_k2 = make_graph(5, [(0, 1), (2, 3)])
    res = find_isolated_vertex(two_k2, two_k2)
    assert res.found and is_isolated(two_k2, two_k2, res.bijection)
    c, _ = build_bipartite_lower_bound(5)
    res = find_isolated_vertex(c.x, c.y)
    assert res.found and is_isolated(c.x, c.y, res.bijection)


def test_find_isolated_budget():
    res = find_isolated_vertex(complete(6), complete(6), budget=3)
    assert not res.found and not res.exhaustive


@settings(max_examples=60)
@given(graph_pairs(max_n=6))
def test_find_isolated_agrees_with_components(pair):
    x, y = pair
    res = find_isolated_vertex(x, y)
    assert res.exhaustive
    assert res.found == (components(x, y).isolated_count > 0)


@st.composite
def dense_graphs(draw, n):
    """Complements of graphs whose maximum degree keeps the minimum degree >= n/2."""
    cap = n - 1 - (n + 1) // 2
    deg = [0] * n
    missing = []
    for u in range(n):
        for v in range(u + 1, n):
            if deg[u] < cap and deg[v] < cap and draw(st.booleans()):
                deg[u] += 1
                deg[v] += 1
                missing.append((u, v))
    g = make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in missing])
    assert min_degree(g) >= n / 2
    return g


@settings(max_examples=40)
@given(st.integers(2, 7), st.data())
def test_dense_pairs_have_no_isolated_vertex(n, data):
    x = data.draw(dense_graphs(n))
    y = data.draw(dense_graphs(n))
    res = find_isolated_vertex(x, y)
    assert res.exhaustive and not res.found


@settings(max_examples=60)
@given(graph_pairs(max_n=6))
def test_inverse_map_is_isomorphism(pair):
    x, y = pair
    assert components(x, y).size_multiset == components(y, x).size_multiset


@settings(max_examples=40)
@given(graph_pairs(max_n=6), st.data())
def test_adding_y_edges_refines(pair, data):
    x, y = pair
    extra = data.draw(graphs(y.n, y.n))
    bigger = make_graph(y.n, y.edges() + extra.edges())
    small = component_labels(x, y)
    big = component_labels(x, bigger)
    owner = {}
    for s, b in zip(small.tolist(), big.tolist()):
        assert owner.setdefault(s, b) == b


@settings(max_examples=40)
@given(st.integers(2, 6), st.data())
def test_parity_invariant(n, data):
    x = data.draw(graphs(n, n, bipartite=True))
    y = data.draw(graphs(n, n, bipartite=True))
    labels = component_labels(x, y)
    seen = {}
    for b in permutations(range(n)):
        comp = int(labels[rank(b)])
        assert seen.setdefault(comp, concordance_class(x, y, b)) == concordance_class(x, y, b)


def test_concordance_examples():
    k = complete_bipartite(2, 2)
    assert concordance_class(k, k, identity(4)) == 0
    # a swap across the parts moves the sign and the overlap together: label kept
    assert concordance_class(k, k, (2, 1, 0, 3)) == 0
    # a swap inside one part only moves the sign
    assert concordance_class(k, k, (1, 0, 2, 3)) == 1
    counts = Counter(concordance_class(k, k, b) for b in permutations(range(4)))
    assert counts == {0: 12, 1: 12}


def test_concordance_needs_partitions():
    with pytest.raises(ValueError):
        concordance_class(complete(3), complete(3), identity(3))


def test_apply_sequence_examples():
    ex = small_exchange_example()
    assert apply_sequence(ex.x, ex.y, ex.sigma, []).final == ex.sigma
    rep = apply_sequence(ex.x, ex.y, ex.sigma, ex.moves)
    assert rep.final == exchange_target(ex.sigma, ex.u, ex.v)
    assert rep.involved == {0, 1, 2, 3}


def test_apply_sequence_reports_position():
    ex = small_exchange_example()
    with pytest.raises(UnfriendlySwapError) as info:
        apply_sequence(ex.x, ex.y, ex.sigma, [(2, 3), (0, 1)])
    assert info.value.position == 1


def test_exchangeable_examples():
    k = complete(3)
    assert exchangeable(k, k, identity(3), 0, 1) == [(0, 1)]
    assert exchangeable(empty(4), complete(4), identity(4), 0, 1) is None
    ex = small_exchange_example()
    moves = exchangeable(ex.x, ex.y, ex.sigma, ex.u, ex.v)
    assert len(moves) == 5
    assert apply_sequence(ex.x, ex.y, ex.sigma, moves).final == exchange_target(ex.sigma, ex.u, ex.v)


@settings(max_examples=60)
@given(graph_pairs(min_n=2, max_n=6), st.data())
def test_exchangeable_matches_components_and_swap_roles(pair, data):
    x, y = pair
    n = x.n
    b = tuple(data.draw(st.permutations(list(range(n)))))
    u, v = data.draw(st.sampled_from([(a, c) for a in range(n) for c in range(a + 1, n)]))
    moves = exchangeable(x, y, b, u, v)
    labels = component_labels(x, y)
    target = exchange_target(b, u, v)
    assert (moves is not None) == (labels[rank(b)] == labels[rank(target)])
    if moves is not None:
        assert apply_sequence(x, y, b, moves).final == target
    inv = inverse(b)
    assert (exchangeable(y, x, inv, inv[u], inv[v]) is not None) == (moves is not None)


def test_sequence_text_round_trip():
    assert parse_sequence("46, 34", offset=1) == [(3, 5), (2, 3)]
    assert parse_sequence("10-3 4:7") == [(10, 3), (4, 7)]
    assert format_sequence([(1, 2), (3, 0)]) == "12 30"
    assert format_sequence([(10, 2)]) == "10-2"
    with pytest.raises(ValueError):
        parse_sequence("44")
