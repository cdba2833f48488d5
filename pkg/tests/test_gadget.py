from dataclasses import replace

import pytest

from fsgraph.gadget import (
    CONSTRAINTS,
    InfeasibleLayout,
    build_large_gadget,
    ceil_div,
    smallest_feasible_m,
    verify_gadget_constraints,
)
from fsgraph.graph import girth, is_bipartite
from fsgraph.wilson import classify


@pytest.fixture(scope="module")
def layout():
    return build_large_gadget(smallest_feasible_m())


def test_smallest_feasible(layout):
    rep = verify_gadget_constraints(layout)
    assert rep.ok and set(rep.results) == set(CONSTRAINTS)
    with pytest.raises(InfeasibleLayout):
        build_large_gadget(layout.m - 1)


def test_infeasible_small_m():
    with pytest.raises(InfeasibleLayout):
        build_large_gadget(20)


def test_graph_shapes(layout):
    m, ell = layout.m, layout.ell
    assert layout.g_2star.n == m and layout.g_star.n == m + 2
    assert layout.h_2star.degree(0) == m - 1
    assert layout.h_star.neighbors(m) == [layout.x(i) for i in range(1, ell + 1)]
    assert layout.h_star.neighbors(m + 1) == [layout.y(j) for j in range(1, ell + 1)]
    assert layout.g_star.neighbors(m) == sorted([m + 1, layout.z(3), layout.z(11)])
    assert layout.g_2star.m == m + 4


def test_wilsonian_and_odd(layout):
    assert classify(layout.g_2star).wilsonian
    assert classify(layout.g_3star()[0]).wilsonian
    assert is_bipartite(layout.g_2star) is None
    # the chord z2-z4 closes an odd cycle with its even arc
    assert layout.clockwise(layout.z(2), layout.z(4)) % 2 == 0
    assert girth(layout.g_2star) >= ceil_div(layout.m, 6)


def _swap(order, a, b):
    o = list(order)
    i, j = o.index(a), o.index(b)
    o[i], o[j] = o[j], o[i]
    return tuple(o)


def test_tamper_spacing(layout):
    pos = layout.position[layout.w]
    neighbour = layout.order[(pos + 1) % layout.m]
    bad = replace(layout, order=_swap(layout.order, layout.x(1), neighbour))
    rep = verify_gadget_constraints(bad)
    assert not rep.results["spacing"]


def test_tamper_parity(layout):
    z2 = layout.z(2)
    nxt = layout.order[(layout.position[z2] + 1) % layout.m]
    bad = replace(layout, order=_swap(layout.order, z2, nxt))
    rep = verify_gadget_constraints(bad)
    assert not rep.results["even_arc"]


def test_tamper_consecutive(layout):
    z5 = layout.z(5)
    far = layout.order[(layout.position[z5] + 7) % layout.m]
    bad = replace(layout, order=_swap(layout.order, z5, far))
    rep = verify_gadget_constraints(bad)
    assert not rep.results["consecutive"]


def test_a_larger_feasible_m():
    m = smallest_feasible_m()
    bigger = smallest_feasible_m(m + 1)
    lay = build_large_gadget(bigger)
    assert verify_gadget_constraints(lay).ok
