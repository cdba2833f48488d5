"""Constructive exchanges of two labels, with a search fallback.

Every strategy returns moves in Y-labels and every returned sequence has been
replayed with ``apply_sequence`` and shown to net exactly the requested
transposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Optional, Sequence

from .fs import (
    DEFAULT_CAP,
    CapExceededError,
    Move,
    UnfriendlySwapError,
    apply_sequence,
    exchange_target,
    exchangeable,
)
from .graph import Graph, GraphError, bfs_distances, component_of, induced_subgraph, min_degree
from .perm import Bijection, inverse, transpose_positions
from .wilson import classify

DIRECT = "direct"
COMMON_NEIGHBOR = "common_neighbor"
PATH_CONJUGATION = "path_conjugation"
BIPARTITE_MIN_DEGREE = "bipartite_min_degree"
BFS_FALLBACK = "bfs_fallback"


class ExchangeError(RuntimeError):
    """A step that counting guarantees turned out impossible."""


@dataclass(frozen=True)
class ExchangeResult:
    sequence: tuple[Move, ...]
    strategy: str
    stats: dict = field(default_factory=dict)

    @property
    def moves(self) -> int:
        return len(self.sequence)


@dataclass(frozen=True)
class NoExchange:
    reason: str

    def __bool__(self) -> bool:
        return False


def _validated(x: Graph, y: Graph, b: Sequence[int], u: int, v: int, moves: Sequence[Move]) -> bool:
    try:
        final = apply_sequence(x, y, b, moves).final
    except UnfriendlySwapError:
        return False
    return final == exchange_target(b, u, v)


def _result(x, y, b, u, v, moves, strategy, **stats) -> ExchangeResult:
    if not _validated(x, y, b, u, v, moves):
        raise ExchangeError(f"{strategy} produced a sequence that does not exchange {u} and {v}")
    return ExchangeResult(tuple(moves), strategy, {"moves": len(moves), **stats})


def direct_exchange(x: Graph, y: Graph, b: Sequence[int], u: int, v: int) -> Optional[ExchangeResult]:
    inv = inverse(b)
    if y.has_edge(u, v) and x.has_edge(inv[u], inv[v]):
        return _result(x, y, b, u, v, [(u, v)], DIRECT)
    return None


def common_neighbor_exchange(x: Graph, y: Graph, b: Sequence[int], u: int, v: int) -> Optional[ExchangeResult]:
    """``wu, wv, wu`` for the least ``w`` adjacent to both labels on both sides.

    The middle move needs the positions of ``u`` and ``v`` to be X-adjacent too.
    """
    if u == v:
        raise ValueError("u and v must differ")
    inv = inverse(b)
    if not x.has_edge(inv[u], inv[v]):
        return None
    for w in y.neighbors(u):
        if w != v and y.has_edge(w, v) and x.has_edge(inv[w], inv[u]) and x.has_edge(inv[w], inv[v]):
            return _result(x, y, b, u, v, [(w, u), (w, v), (w, u)], COMMON_NEIGHBOR, w=w)
    return None


def _restricted_path(x: Graph, src: int, dst: int, interior: int) -> Optional[list[int]]:
    """Shortest X-path ``src .. dst`` whose inner vertices lie in the ``interior`` mask."""
    if x.has_edge(src, dst):
        return [src, dst]
    dist = bfs_distances(x, src, interior | 1 << src)
    best = None
    for c in x.neighbors(dst):
        if c != src and interior >> c & 1 and dist[c] > 0 and (best is None or dist[c] < dist[best]):
            best = c
    if best is None:
        return None
    path = [best]
    while dist[path[-1]] > 1:
        cur = path[-1]
        path.append(next(p for p in x.neighbors(cur) if (interior | 1 << src) >> p & 1 and dist[p] == dist[cur] - 1))
    return [src] + path[::-1] + [dst]


def path_conjugation_exchange(x: Graph, y: Graph, b: Sequence[int], u: int, v: int) -> Optional[ExchangeResult]:
    """Conjugate ``wu, wv, wu`` by walking ``w`` along an X-path of its own Y-neighbours.

    Tries, for ``w`` a common Y-neighbour of ``u`` and ``v`` and ``x`` in the
    closed Y-neighbourhood of ``w`` sitting on a common X-neighbour of the
    positions of ``u`` and ``v``: first a single path from ``w`` to ``x``,
    then the three-block form that routes ``w`` through ``u``'s and ``v``'s
    positions.
    """
    if u == v:
        raise ValueError("u and v must differ")
    inv = inverse(b)
    pu, pv = inv[u], inv[v]
    common_x = x.rows[pu] & x.rows[pv]
    tried = 0
    for w in y.neighbors(u):
        if w == v or not y.has_edge(w, v):
            continue
        pw = inv[w]
        allowed = 0
        for t in y.neighbors(w):
            if t not in (u, v):
                allowed |= 1 << inv[t]
        candidates = [w] + [c for c in y.neighbors(w) if c not in (u, v)]
        for xl in candidates:
            px = inv[xl]
            if not common_x >> px & 1:
                continue
            tried += 1
            if xl == w:
                seq = [(w, u), (w, v), (w, u)]
                if _validated(x, y, b, u, v, seq):
                    return _result(x, y, b, u, v, seq, PATH_CONJUGATION, w=w, via=xl, path=0)
                continue
            walk = _restricted_path(x, pw, px, allowed & ~(1 << px))
            if walk is not None:
                ts = [b[p] for p in walk[1:-1]]
                seq = [(w, t) for t in ts] + [(w, xl), (w, u), (w, v), (w, u), (w, xl)] + [(w, t) for t in reversed(ts)]
                if _validated(x, y, b, u, v, seq):
                    return _result(x, y, b, u, v, seq, PATH_CONJUGATION, w=w, via=xl, path=len(ts))
            inner = allowed & ~(1 << px)
            to_u = _restricted_path(x, pw, pu, inner)
            to_v = _restricted_path(x, pw, pv, inner)
            if to_u is None or to_v is None:
                continue
            ts = [b[p] for p in to_u[1:-1]]
            tt = [b[p] for p in to_v[1:-1]]
            seq = (
                [(w, t) for t in ts] + [(w, u), (w, xl), (w, v), (w, xl), (w, u)] + [(w, t) for t in reversed(ts)]
                + [(w, t) for t in tt] + [(w, xl), (w, v), (w, u), (w, v), (w, xl)] + [(w, t) for t in reversed(tt)]
                + [(w, t) for t in ts] + [(w, v), (w, u), (w, xl), (w, u), (w, v)] + [(w, t) for t in reversed(ts)]
            )
            if _validated(x, y, b, u, v, seq):
                return _result(x, y, b, u, v, seq, PATH_CONJUGATION, w=w, via=xl, path=len(ts) + len(tt), double=True)
    return None


# -- bipartite minimum-degree exchange ---------------------------------------


def bipartite_threshold(r: int) -> int:
    """``ceil((3r+2)/4)``."""
    return -(-(3 * r + 2) // 4)


def _check_bipartite_pre(x: Graph, y: Graph, b: Sequence[int], u: int, v: int) -> int:
    if x.partition is None or y.partition is None:
        raise GraphError("both graphs need declared partitions")
    if x.n != y.n or x.n % 2:
        raise GraphError("graphs must be edge-subgraphs of one K_{r,r}")
    r = x.n // 2
    for g in (x, y):
        a, _ = g.part_sets()
        if len(a) != r:
            raise GraphError("parts must both have r vertices")
    if min(min_degree(x), min_degree(y)) < bipartite_threshold(r):
        raise GraphError(f"minimum degree below {bipartite_threshold(r)}")
    if y.partition[u] == y.partition[v]:
        raise GraphError("u and v must lie in different parts of Y")
    inv = inverse(b)
    if not x.has_edge(inv[u], inv[v]):
        raise GraphError("the positions of u and v must be adjacent in X")
    return r


def _oriented_exchange(x: Graph, y: Graph, sigma: Bijection, u: int, v: int, r: int, stats: dict) -> list[Move]:
    """Moves from ``sigma`` that trade ``u`` and ``v``, assuming v's X-part holds
    at least r/2 positions of v's Y-part and ``{u, v}`` is not a Y-edge."""
    delta = min(min_degree(x), min_degree(y))
    ay = {t for t in range(y.n) if y.partition[t] == y.partition[u]}
    by = set(range(y.n)) - ay
    inv = inverse(sigma)
    up, vp = inv[u], inv[v]
    ax = {p for p in range(x.n) if x.partition[p] == x.partition[up]}
    bx = set(range(x.n)) - ax

    w = next((t for t in y.neighbors(u) if t != v and inv[t] in bx and x.has_edge(inv[t], up)), None)
    if w is None:
        raise ExchangeError("no w adjacent to u whose position is adjacent to u's position")
    wp = inv[w]
    common = x.rows[vp] & x.rows[wp]
    d_set = {p for p in ax if not common >> p & 1}
    if len(d_set) > 2 * r - 2 * delta:
        raise ExchangeError(f"|D| = {len(d_set)} exceeds 2r - 2 delta")

    tau = list(sigma)
    tinv = list(inv)
    sigma_moves: list[Move] = []

    def swap(a: int, c: int) -> None:
        pa, pc = tinv[a], tinv[c]
        if not (y.has_edge(a, c) and x.has_edge(pa, pc)):
            raise ExchangeError(f"preliminary swap {a}{c} is not friendly")
        tau[pa], tau[pc] = c, a
        tinv[a], tinv[c] = pc, pa
        sigma_moves.append((a, c))

    def progress() -> tuple[int, int]:
        return (
            sum(1 for p in d_set if tau[p] in ay),
            sum(1 for p in ax - d_set if tau[p] in by),
        )

    limit = 2 * r - 2 * delta
    first = second = 0
    while True:
        case1 = [tau[p] for p in sorted(d_set) if tau[p] in ay]
        in_a = sum(1 for p in ax if tau[p] in ay)
        in_b = len(ax) - in_a
        if not case1 and in_b <= limit:
            break
        before = progress()
        if case1 and in_a > limit + 1:
            xl = min(case1)
            px = tinv[xl]
            ycand = [
                t for t in y.neighbors(xl)
                if t in by and tinv[t] in bx and t not in (v, w) and x.has_edge(tinv[t], px)
            ]
            if not ycand:
                raise ExchangeError("no partner for a preliminary swap of the first kind")
            swap(xl, ycand[0])
            first += 1
            after = progress()
            ok = after[0] < before[0] and after[1] <= before[1]
        else:
            qs = sorted(t for t in by if tinv[t] in ax - d_set)
            if not qs or in_b <= limit:
                raise ExchangeError("no label for a preliminary swap of the second kind")
            q = qs[0]
            pq = tinv[q]
            scand = [t for t in y.neighbors(q) if t in ay and tinv[t] in bx and x.has_edge(tinv[t], pq)]
            if not scand:
                raise ExchangeError("no partner for a preliminary swap of the second kind")
            swap(q, scand[0])
            second += 1
            after = progress()
            ok = after[1] < before[1] and after[0] <= before[0]
        if not ok:
            raise ExchangeError(f"preliminary swap did not make progress: {before} -> {after}")
        if first + second > 4 * r:
            raise ExchangeError("preliminary swaps failed to terminate")
    if tinv[u] != up or tinv[v] != vp or tinv[w] != wp:
        raise ExchangeError("preliminary swaps moved u, v or w")

    zs = [t for t in y.neighbors(v) if y.has_edge(t, w) and tinv[t] in ax]
    if len(zs) < 2:
        raise ExchangeError("fewer than two labels z adjacent to v and w positioned in A_X")
    z1, z2 = zs[0], zs[1]
    for z in (z1, z2):
        if not (x.has_edge(tinv[z], vp) and x.has_edge(tinv[z], wp)):
            raise ExchangeError(f"position of {z} is not adjacent to the positions of v and w")
    core = [(v, z1), (w, z2), (w, z1), (w, u), (w, z2), (w, z1), (v, z1), (v, z2), (w, z2)]
    stats.update(w=w, z1=z1, z2=z2, first_kind=first, second_kind=second, d_size=len(d_set))

    # The preliminary swaps run backwards from mu must lead straight back to sigma.
    back = apply_sequence(x, y, tuple(tau), list(reversed(sigma_moves))).final
    if back != tuple(sigma):
        raise ExchangeError("reverse of the preliminary swaps does not return to the start")
    return sigma_moves + core + list(reversed(sigma_moves))


def bipartite_min_degree_exchange(x: Graph, y: Graph, b: Sequence[int], u: int, v: int) -> ExchangeResult:
    """Exchange across an X-edge in dense bipartite pairs.

    Needs both graphs to be edge-subgraphs of K_{r,r} with minimum degree at
    least ``ceil((3r+2)/4)``, ``u`` and ``v`` in different parts of Y, and
    their positions adjacent in X.
    """
    r = _check_bipartite_pre(x, y, b, u, v)
    b = tuple(b)
    if y.has_edge(u, v):
        return _result(x, y, b, u, v, [(u, v)], BIPARTITE_MIN_DEGREE, orientation="direct")
    inv = inverse(b)
    vpart = x.partition[inv[v]]
    count = sum(1 for p in range(x.n) if x.partition[p] == vpart and y.partition[b[p]] == y.partition[v])
    stats: dict = {}
    if 2 * count >= r:
        moves = _oriented_exchange(x, y, b, u, v, r, stats)
        stats["orientation"] = "forward"
    else:
        flipped = transpose_positions(b, inv[u], inv[v])
        moves = list(reversed(_oriented_exchange(x, y, flipped, u, v, r, stats)))
        stats["orientation"] = "reversed"
    return _result(x, y, b, u, v, moves, BIPARTITE_MIN_DEGREE, **stats)


def _bipartite_applicable(x: Graph, y: Graph, b: Sequence[int], u: int, v: int) -> bool:
    try:
        _check_bipartite_pre(x, y, b, u, v)
    except GraphError:
        return False
    return True


def exchange_ladder(
    x: Graph, y: Graph, b: Sequence[int], u: int, v: int, cap: int = DEFAULT_CAP
) -> ExchangeResult | NoExchange:
    """Cheapest applicable strategy first; exact search last when ``n <= cap``."""
    if u == v:
        raise ValueError("u and v must differ")
    b = tuple(b)
    for fn in (direct_exchange, common_neighbor_exchange, path_conjugation_exchange):
        res = fn(x, y, b, u, v)
        if res is not None:
            return res
    if _bipartite_applicable(x, y, b, u, v):
        return bipartite_min_degree_exchange(x, y, b, u, v)
    if x.n > cap:
        return NoExchange(f"constructive strategies failed and n={x.n} exceeds the search cap {cap}")
    try:
        moves = exchangeable(x, y, b, u, v, cap)
    except CapExceededError as exc:
        return NoExchange(str(exc))
    if moves is None:
        return NoExchange("certified by BFS: no exchanging sequence exists")
    return _result(x, y, b, u, v, moves, BFS_FALLBACK)


# -- small-scale dichotomy probe ---------------------------------------------

BRANCH_EXCHANGEABLE = "a"
BRANCH_STRUCTURE = "b"
VIOLATION = "violation"


@dataclass(frozen=True)
class DichotomyReport:
    branch: str
    exchangeable: bool
    structure: Optional[dict]


def _structure_witness(g: Graph, h: Graph, t: Bijection, u: int, v: int) -> Optional[dict]:
    m = g.n
    inv = inverse(t)
    common = g.rows[inv[u]] & g.rows[inv[v]]
    for w in h.neighbors(u):
        if w == v or not h.has_edge(w, v):
            continue
        for xl in h.neighbors(w):
            if not common >> inv[xl] & 1:
                continue
            closed = [inv[w]] + [inv[c] for c in h.neighbors(w)]
            sub, keep = induced_subgraph(g, closed)
            comps = []
            left = (1 << sub.n) - 1
            while left:
                s = (left & -left).bit_length() - 1
                c = component_of(sub, s, left)
                left &= ~c
                vs = [i for i in range(sub.n) if c >> i & 1]
                cg, _ = induced_subgraph(sub, vs)
                if classify(cg).wilsonian:
                    comps.append(sorted(keep[i] for i in vs))
            sized = [c for c in comps if 2 * m <= 7 * len(c) <= 3 * m]
            if len(sized) >= 2:
                return {"w": w, "x": xl, "components": sized[:2]}
    return None


def check_9_14_dichotomy(g: Graph, h: Graph, t: Sequence[int], u: int, v: int) -> DichotomyReport:
    """Which alternative holds for dense small pairs: exchangeable, or the
    structural witness (w, x and two mid-sized Wilsonian pieces)."""
    m = g.n
    if h.n != m:
        raise GraphError("graph sizes differ")
    if m > 9:
        raise CapExceededError(f"m={m} too large for the exhaustive probe (m <= 9)")
    need = ceil(9 * m / 14 + 1)
    if min(min_degree(g), min_degree(h)) < need:
        raise GraphError(f"minimum degree below 9m/14 + 1 = {9 * m / 14 + 1:.3f}")
    t = tuple(t)
    inv = inverse(t)
    if not g.has_edge(inv[u], inv[v]):
        raise GraphError("positions of u and v must be adjacent")
    ex = exchangeable(g, h, t, u, v, cap=9) is not None
    if ex:
        return DichotomyReport(BRANCH_EXCHANGEABLE, True, None)
    wit = _structure_witness(g, h, t, u, v)
    return DichotomyReport(BRANCH_STRUCTURE if wit else VIOLATION, False, wit)
