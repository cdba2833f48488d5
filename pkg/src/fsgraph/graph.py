"""Simple undirected graphs stored as adjacency bit rows.

Vertices are ``0..n-1``.  Row ``i`` is an ``int`` whose bit ``j`` is set iff
``{i, j}`` is an edge, so neighbour iteration is in ascending index order and
every tie-break downstream follows from that.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

UNBOUNDED = math.inf
UNREACHABLE = -1


class GraphError(ValueError):
    """Invalid graph construction or query."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    partition: Optional[tuple[int, ...]] = field(default=None)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.bool_)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    @cached_property
    def edge_array(self) -> np.ndarray:
        e = self.edges()
        return np.array(e, dtype=np.int64).reshape(len(e), 2)

    def part_sets(self) -> tuple[frozenset[int], frozenset[int]]:
        if self.partition is None:
            raise GraphError("graph has no declared partition")
        a = frozenset(i for i, p in enumerate(self.partition) if p == 0)
        return a, frozenset(range(self.n)) - a

    def __repr__(self) -> str:
        tag = ", bipartite" if self.partition is not None else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"


def make_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    partition: Optional[Sequence[int]] = None,
) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    rows = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    part = None
    if partition is not None:
        part = tuple(int(p) for p in partition)
        if len(part) != n or any(p not in (0, 1) for p in part):
            raise GraphError("partition must give a label 0 or 1 to every vertex")
        for u in range(n):
            for v in _bits(rows[u]):
                if part[u] == part[v]:
                    raise GraphError(f"edge ({u}, {v}) does not cross the declared partition")
    return Graph(n, tuple(rows), part)


def with_partition(g: Graph, partition: Sequence[int]) -> Graph:
    return make_graph(g.n, g.edges(), partition)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled to ``0..k-1``; also returns the old labels in order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    part = None if g.partition is None else [g.partition[v] for v in keep]
    return make_graph(len(keep), edges, part), keep


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    edges = [(u, v) for u in range(g.n) for v in _bits((full ^ g.rows[u]) & ~((1 << (u + 1)) - 1))]
    return make_graph(g.n, edges)


# -- named generators -------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return make_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return make_graph(n, [])


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s} with parts ``0..r-1`` (label 0) and ``r..r+s-1`` (label 1)."""
    if r < 1 or s < 1:
        raise GraphError("complete bipartite graph needs r, s >= 1")
    edges = [(i, r + j) for i in range(r) for j in range(s)]
    return make_graph(r + s, edges, [0] * r + [1] * s)


def star(n: int) -> Graph:
    """Star_n = K_{1,n-1}, centre 0."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    if n == 1:
        return make_graph(1, [], [0])
    return complete_bipartite(1, n - 1)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


THETA0_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 3))


def theta0() -> Graph:
    """The seven-vertex exceptional graph: hexagon 0..5 plus vertex 6 joined to 0 and 3."""
    return make_graph(7, THETA0_EDGES)


_GENERATORS = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "cycle": cycle,
    "path": path,
    "empty": empty,
    "theta0": theta0,
}


def generator(kind: str, *sizes: int) -> Graph:
    try:
        fn = _GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown generator {kind!r}") from None
    return fn(*sizes)


# -- random models ----------------------------------------------------------


@dataclass(frozen=True)
class RandomModel:
    """``kind`` is ``"gnp"`` (size = n) or ``"bipartite_gnp"`` (size = r, 2r vertices)."""

    kind: str
    size: int
    p: float
    seed: int

    def __post_init__(self) -> None:
        if self.kind not in ("gnp", "bipartite_gnp"):
            raise GraphError(f"unknown random model {self.kind!r}")
        if self.size < 1:
            raise GraphError("random model size must be >= 1")
        if not 0.0 <= self.p <= 1.0:
            raise GraphError(f"p={self.p} outside [0, 1]")


def eligible_pairs(kind: str, size: int) -> list[tuple[int, int]]:
    """Candidate edges in lexicographic order; this order fixes the random stream."""
    if kind == "gnp":
        return list(combinations(range(size), 2))
    return [(i, size + j) for i in range(size) for j in range(size)]


def model_partition(kind: str, size: int) -> Optional[list[int]]:
    return [0] * size + [1] * size if kind == "bipartite_gnp" else None


def rng_for(seed: int, *key: int) -> np.random.Generator:
    """PCG64 stream for ``seed`` and an optional spawn key (cell, trial, ...)."""
    ss = np.random.SeedSequence(entropy=seed & (2**64 - 1), spawn_key=tuple(key))
    return np.random.Generator(np.random.PCG64(ss))


def graph_from_uniforms(kind: str, size: int, uniforms: np.ndarray, p: float) -> Graph:
    pairs = eligible_pairs(kind, size)
    n = size if kind == "gnp" else 2 * size
    chosen = [pair for pair, x in zip(pairs, uniforms) if x < p]
    return make_graph(n, chosen, model_partition(kind, size))


def sample(model: RandomModel) -> Graph:
    """Each eligible pair appears iff its uniform draw is ``< p``."""
    pairs = eligible_pairs(model.kind, model.size)
    u = rng_for(model.seed).random(len(pairs))
    return graph_from_uniforms(model.kind, model.size, u, model.p)


# -- structural queries -----------------------------------------------------


def degree_stats(g: Graph) -> tuple[int, int]:
    if g.n < 1:
        raise GraphError("degree_stats needs n >= 1")
    degs = [g.degree(v) for v in range(g.n)]
    return min(degs), max(degs)


def min_degree(g: Graph) -> int:
    return degree_stats(g)[0]


def max_degree(g: Graph) -> int:
    return degree_stats(g)[1]


def bfs_distances(g: Graph, source: int, allowed: Optional[int] = None) -> list[int]:
    """Edge distances from ``source``; ``allowed`` is an optional vertex bitmask."""
    mask = (1 << g.n) - 1 if allowed is None else allowed
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= mask & ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int) -> int:
    """Shortest-path length, or ``UNREACHABLE`` (-1)."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range for n={g.n}")
    return bfs_distances(g, u)[v]


def component_of(g: Graph, v: int, allowed: Optional[int] = None) -> int:
    """Bitmask of the component of ``v`` inside the ``allowed`` vertex mask."""
    mask = (1 << g.n) - 1 if allowed is None else allowed
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for x in _bits(frontier):
            nxt |= g.rows[x]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph) -> list[list[int]]:
    left = (1 << g.n) - 1
    comps = []
    while left:
        v = (left & -left).bit_length() - 1
        c = component_of(g, v, left)
        comps.append(list(_bits(c)))
        left &= ~c
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or component_of(g, 0) == (1 << g.n) - 1


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices of a graph (Hopcroft-Tarjan low-link, iterative)."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut = set()
    t = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        cut.add(p)
        if root_children > 1:
            cut.add(root)
    return sorted(cut)


def is_biconnected(g: Graph) -> bool:
    """Connected with no cut vertex; K_1 and K_2 count as biconnected."""
    if g.n <= 2:
        return is_connected(g)
    return is_connected(g) and not articulation_points(g)


def two_coloring(g: Graph) -> Optional[tuple[int, ...]]:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in _bits(g.rows[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


def is_bipartite(g: Graph) -> Optional[tuple[int, ...]]:
    """A 2-colouring (the declared partition if present), or ``None``."""
    if g.partition is not None:
        return g.partition
    return two_coloring(g)


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = UNBOUNDED
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in _bits(g.rows[v]):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def find_isomorphism(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """Backtracking isomorphism search with a degree pre-filter; meant for small graphs."""
    if g.n != h.n or g.m != h.m:
        return None
    dg = [g.degree(v) for v in range(g.n)]
    dh = [h.degree(v) for v in range(h.n)]
    if sorted(dg) != sorted(dh):
        return None
    order = sorted(range(g.n), key=lambda v: (-dg[v], v))
    mapping: dict[int, int] = {}
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == len(order):
            return True
        v = order[k]
        for w in range(h.n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            if any(g.has_edge(v, a) != h.has_edge(w, b) for a, b in mapping.items()):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            del mapping[v]
            used &= ~(1 << w)
        return False

    return dict(mapping) if extend(0) else None
