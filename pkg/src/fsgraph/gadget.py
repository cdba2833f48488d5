"""The large cycle gadget: a Wilsonian cycle-with-chords pattern and a star.

Vertex ids on ``[m]``: ``w = 0``, ``x_i = i`` and ``y_j = ell + j`` for
``1 <= i, j <= ell``, ``z_k = 2 ell + k``.  The two extra vertices of the
extended graphs are ``m`` and ``m + 1``.  A layout is the clockwise order of
``[m]`` around the cycle; every graph and every check is derived from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt
from typing import Optional

from .graph import Graph, GraphError, bfs_distances, girth, induced_subgraph, make_graph


class InfeasibleLayout(GraphError):
    pass


def ell_for(m: int) -> int:
    return isqrt(m) // 2


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class GadgetLayout:
    m: int
    ell: int
    order: tuple[int, ...]

    # role ids
    @property
    def w(self) -> int:
        return 0

    def x(self, i: int) -> int:
        return i

    def y(self, j: int) -> int:
        return self.ell + j

    def z(self, k: int) -> int:
        return 2 * self.ell + k

    @property
    def specials(self) -> list[int]:
        return list(range(2 * self.ell + 1))

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def chords(self) -> list[tuple[int, int]]:
        z = self.z
        return [(z(1), z(6)), (z(2), z(4)), (z(7), z(12)), (z(8), z(10))]

    @cached_property
    def g_2star(self) -> Graph:
        m = self.m
        cyc = [(self.order[i], self.order[(i + 1) % m]) for i in range(m)]
        return make_graph(m, cyc + self.chords())

    @cached_property
    def g_star(self) -> Graph:
        m, z = self.m, self.z
        extra = [(m, m + 1), (m, z(3)), (m, z(11)), (m + 1, z(5)), (m + 1, z(9))]
        return make_graph(m + 2, self.g_2star.edges() + extra)

    @cached_property
    def h_2star(self) -> Graph:
        return make_graph(self.m, [(0, v) for v in range(1, self.m)])

    @cached_property
    def h_star(self) -> Graph:
        m, ell = self.m, self.ell
        extra = [(m, self.x(i)) for i in range(1, ell + 1)] + [(m + 1, self.y(j)) for j in range(1, ell + 1)]
        return make_graph(m + 2, self.h_2star.edges() + extra)

    def g_3star(self) -> tuple[Graph, list[int]]:
        """G* with z5 and z11 removed, relabelled; also the kept vertex ids."""
        drop = {self.z(5), self.z(11)}
        return induced_subgraph(self.g_star, [v for v in range(self.m + 2) if v not in drop])

    def clockwise(self, a: int, b: int) -> int:
        return (self.position[b] - self.position[a]) % self.m


@dataclass
class ConstraintReport:
    results: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]


CONSTRAINTS = ("consecutive", "arc_lengths", "even_arc", "spacing", "girth")


def verify_gadget_constraints(layout: GadgetLayout) -> ConstraintReport:
    """Recompute the five placement conditions from the layout's cycle order."""
    rep = ConstraintReport()
    m, ell, z = layout.m, layout.ell, layout.z

    bad = [(a, b) for a, b in ((4, 5), (5, 6), (10, 11), (11, 12)) if layout.clockwise(z(a), z(b)) != 1]
    rep.results["consecutive"] = not bad
    rep.details["consecutive"] = f"not consecutive: {bad}" if bad else ""

    arcs = {(3, 5): layout.clockwise(z(3), z(5)), (9, 11): layout.clockwise(z(9), z(11))}
    bad = {k: d for k, d in arcs.items() if d != ell - 1}
    rep.results["arc_lengths"] = not bad
    rep.details["arc_lengths"] = f"arc lengths {bad}, want {ell - 1}" if bad else ""

    d24 = layout.clockwise(z(2), z(4))
    rep.results["even_arc"] = d24 % 2 == 0
    rep.details["even_arc"] = "" if d24 % 2 == 0 else f"z2->z4 clockwise distance {d24} is odd"

    need = ceil_div(m, 3 * ell)
    g = layout.g_2star
    anchors = [z(3), z(5), z(9), z(11)]
    worst: Optional[tuple[int, int, int]] = None
    sp = layout.specials
    for i, s in enumerate(sp):
        dist = bfs_distances(g, s)
        for t in sp[i + 1:] + anchors:
            if dist[t] < need and (worst is None or dist[t] < worst[2]):
                worst = (s, t, dist[t])
    rep.results["spacing"] = worst is None
    rep.details["spacing"] = "" if worst is None else f"vertices {worst[0]},{worst[1]} at distance {worst[2]} < {need}"

    gi = girth(g)
    rep.results["girth"] = gi >= ceil_div(m, 6)
    rep.details["girth"] = "" if rep.results["girth"] else f"girth {gi} < {ceil_div(m, 6)}"
    return rep


def _cluster(start: int, m: int, ell: int) -> list[int]:
    """Positions of six consecutive z's (in cyclic order) starting at ``start``."""
    span = ceil_div(m, 6)
    p1 = start
    p2 = start + max(span - 4, 1)
    e = max(span - 1, ell)
    e += e % 2
    p4 = p2 + e
    p3 = p4 - (ell - 2)
    return [p1, p2, p3, p4, p4 + 1, p4 + 2]


def build_large_gadget(m: int) -> GadgetLayout:
    """Arithmetic layout of the two z-clusters, then greedy placement of the specials.

    Raises ``InfeasibleLayout`` when the placement or any check fails.
    """
    ell = ell_for(m)
    if ell < 3 or m - 2 * ell - 1 < 12:
        raise InfeasibleLayout(f"m={m} gives ell={ell}; need ell >= 3 and at least 12 z-vertices")
    first = _cluster(0, m, ell)
    second = _cluster(m // 2, m, ell)
    zpos = first + second
    if len(set(p % m for p in zpos)) != 12 or max(zpos) >= m or second[0] <= first[-1]:
        raise InfeasibleLayout(f"m={m}: the two z-clusters overlap")

    # Position graph (cycle plus chords) to measure true distances.
    chords = [(zpos[0], zpos[5]), (zpos[1], zpos[3]), (zpos[6], zpos[11]), (zpos[7], zpos[9])]
    pg = make_graph(m, [(i, (i + 1) % m) for i in range(m)] + chords)
    need = ceil_div(m, 3 * ell)
    anchors = [zpos[2], zpos[4], zpos[8], zpos[10]]
    taken = set(zpos)
    far = [True] * m
    for a in anchors:
        for p, d in enumerate(bfs_distances(pg, a)):
            if d < need:
                far[p] = False
    chosen: list[int] = []
    for p in range(m):
        if len(chosen) == 2 * ell + 1:
            break
        if p in taken or not far[p]:
            continue
        chosen.append(p)
        for q, d in enumerate(bfs_distances(pg, p)):
            if d < need:
                far[q] = False
    if len(chosen) < 2 * ell + 1:
        raise InfeasibleLayout(f"m={m}: only {len(chosen)} of {2 * ell + 1} special vertices fit at spacing {need}")

    order = [-1] * m
    for k, p in enumerate(zpos, start=1):
        order[p] = 2 * ell + k
    for v, p in enumerate(chosen):
        order[p] = v
    filler = iter(range(2 * ell + 13, m))
    order = [v if v >= 0 else next(filler) for v in order]
    layout = GadgetLayout(m, ell, tuple(order))
    rep = verify_gadget_constraints(layout)
    if not rep.ok:
        raise InfeasibleLayout(f"m={m}: layout fails {rep.failed()}: {rep.details}")
    return layout


def smallest_feasible_m(start: int = 36, stop: int = 4096) -> int:
    for m in range(start, stop):
        try:
            build_large_gadget(m)
        except InfeasibleLayout:
            continue
        return m
    raise InfeasibleLayout(f"no feasible m in [{start}, {stop})")
