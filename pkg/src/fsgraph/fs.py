"""The state space FS(X, Y): bijections linked by friendly swaps.

A bijection ``b`` is a tuple with ``b[x]`` the Y-vertex sitting on X-vertex
``x``.  Moves are written as pairs of Y-labels ``(u, v)``; applying one swaps
the positions of labels ``u`` and ``v``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .graph import Graph, GraphError
from .perm import Bijection, inverse, is_permutation, rank, sign, transpose_positions, unrank

DEFAULT_CAP = 12
MAX_EXACT_N = 13

Move = tuple[int, int]


class CapExceededError(ValueError):
    pass


class UnfriendlySwapError(ValueError):
    def __init__(self, position: int, move: Move, reason: str):
        super().__init__(f"move {position} ({move[0]},{move[1]}) is not friendly: {reason}")
        self.position = position
        self.move = move


def _check_pair(x: Graph, y: Graph) -> int:
    if x.n != y.n:
        raise GraphError(f"vertex counts differ: |X|={x.n}, |Y|={y.n}")
    return x.n


def _check_bijection(b: Sequence[int], n: int) -> Bijection:
    b = tuple(int(v) for v in b)
    if len(b) != n or not is_permutation(b):
        raise ValueError(f"{b} is not a bijection on {n} vertices")
    return b


def _check_cap(n: int, cap: int) -> None:
    if cap > MAX_EXACT_N:
        raise CapExceededError(f"cap {cap} above the supported maximum {MAX_EXACT_N}")
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the exact-search cap {cap} (raise cap up to {MAX_EXACT_N})")


def _kernel_args(x: Graph, y: Graph):
    ea = np.ascontiguousarray(x.edge_array[:, 0])
    eb = np.ascontiguousarray(x.edge_array[:, 1])
    return ea, eb, y.adjacency.astype(np.uint8)


# -- local moves ------------------------------------------------------------


def friendly_neighbors(x: Graph, y: Graph, b: Sequence[int]) -> list[tuple[tuple[int, int], Bijection]]:
    """Every ``(X-edge, successor)`` reachable by one friendly swap, in edge order."""
    n = _check_pair(x, y)
    b = _check_bijection(b, n)
    return [((a, c), transpose_positions(b, a, c)) for a, c in x.edges() if y.has_edge(b[a], b[c])]


def is_isolated(x: Graph, y: Graph, b: Sequence[int]) -> bool:
    n = _check_pair(x, y)
    b = _check_bijection(b, n)
    return not any(y.has_edge(b[a], b[c]) for a, c in x.edges())


def exchange_target(b: Sequence[int], u: int, v: int) -> Bijection:
    """``b`` with the labels ``u`` and ``v`` trading places."""
    inv = inverse(b)
    return transpose_positions(b, inv[u], inv[v])


# -- sequences --------------------------------------------------------------


_TOKEN = re.compile(r"^(\d+)\s*[-:]\s*(\d+)$")


def parse_sequence(text: str, offset: int = 0) -> list[Move]:
    """Parse ``"46, 34"`` or ``"10-3 4-7"`` style move lists.

    A bare two-digit token is read as two single-digit labels.  ``offset`` is
    subtracted from every label (use 1 for one-based listings).
    """
    moves = []
    for tok in re.split(r"[,\s]+", text.strip()):
        if not tok:
            continue
        m = _TOKEN.match(tok)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
        elif len(tok) == 2 and tok.isdigit():
            u, v = int(tok[0]), int(tok[1])
        else:
            raise ValueError(f"cannot read move {tok!r}")
        if u == v:
            raise ValueError(f"move {tok!r} swaps a label with itself")
        moves.append((u - offset, v - offset))
    return moves


def format_sequence(moves: Iterable[Move]) -> str:
    moves = list(moves)
    if all(u < 10 and v < 10 for u, v in moves):
        return " ".join(f"{u}{v}" for u, v in moves)
    return " ".join(f"{u}-{v}" for u, v in moves)


def reverse_sequence(moves: Sequence[Move]) -> list[Move]:
    return list(reversed(moves))


@dataclass(frozen=True)
class Replay:
    final: Bijection
    involved: frozenset[int]
    x_edges: tuple[tuple[int, int], ...] = field(default=())


def apply_sequence(x: Graph, y: Graph, b: Sequence[int], moves: Iterable[Move]) -> Replay:
    """Replay ``moves`` from ``b``, checking friendliness at every step."""
    n = _check_pair(x, y)
    cur = list(_check_bijection(b, n))
    inv = list(inverse(cur))
    involved = set()
    used = []
    for k, (u, v) in enumerate(moves):
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise UnfriendlySwapError(k, (u, v), "invalid labels")
        if not y.has_edge(u, v):
            raise UnfriendlySwapError(k, (u, v), "labels not adjacent in Y")
        a, c = inv[u], inv[v]
        if not x.has_edge(a, c):
            raise UnfriendlySwapError(k, (u, v), f"positions {a},{c} not adjacent in X")
        cur[a], cur[c] = v, u
        inv[u], inv[v] = c, a
        involved.update((u, v))
        used.append((min(a, c), max(a, c)))
    return Replay(tuple(cur), frozenset(involved), tuple(used))


# -- exact component structure ----------------------------------------------


@dataclass(frozen=True)
class ComponentSummary:
    component_count: int
    size_multiset: tuple[int, ...]
    isolated_count: int
    total: int

    @property
    def connected(self) -> bool:
        return self.component_count == 1

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.size_multiset).items()))

    def format(self) -> str:
        sizes = ",".join(f"{s}*{m}" for s, m in self.histogram().items())
        return f"count {self.component_count} sizes {sizes}"


def components(x: Graph, y: Graph, cap: int = DEFAULT_CAP) -> ComponentSummary:
    """Exact component structure by flood fill over all ``n!`` ranks."""
    n = _check_pair(x, y)
    _check_cap(n, cap)
    total = factorial(n)
    if n == 0:
        return ComponentSummary(1, (1,), 1, 1)
    hist = dict(_kernels.component_histogram(n, *_kernel_args(x, y), total))
    sizes = tuple(sorted(s for s, m in hist.items() for _ in range(m)))
    assert sum(sizes) == total
    return ComponentSummary(len(sizes), sizes, hist.get(1, 0), total)


def component_labels(x: Graph, y: Graph, cap: int = 10) -> np.ndarray:
    """Component index of every rank (``int32`` array of length ``n!``)."""
    n = _check_pair(x, y)
    _check_cap(n, cap)
    return _kernels.component_labels(n, *_kernel_args(x, y), factorial(n))


def rank_path(x: Graph, y: Graph, start: Sequence[int], target: Sequence[int], cap: int = DEFAULT_CAP) -> Optional[list[Bijection]]:
    """Bijections along a shortest path from ``start`` to ``target``, or ``None``."""
    n = _check_pair(x, y)
    _check_cap(n, cap)
    s = _check_bijection(start, n)
    t = _check_bijection(target, n)
    path, _ = _kernels.bidirectional_path(n, *_kernel_args(x, y), rank(s), rank(t))
    if len(path) == 0:
        return None
    return [unrank(int(r), n) for r in path]


def same_component(x: Graph, y: Graph, b: Sequence[int], c: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    return rank_path(x, y, b, c, cap) is not None


def moves_along(path: Sequence[Bijection]) -> list[Move]:
    moves = []
    for p, q in zip(path, path[1:]):
        diff = [i for i in range(len(p)) if p[i] != q[i]]
        assert len(diff) == 2
        moves.append((p[diff[0]], p[diff[1]]))
    return moves


def exchangeable(x: Graph, y: Graph, b: Sequence[int], u: int, v: int, cap: int = DEFAULT_CAP) -> Optional[list[Move]]:
    """Moves carrying ``b`` to ``exchange_target(b, u, v)``; ``None`` certifies none exist."""
    if u == v:
        raise ValueError("u and v must differ")
    n = _check_pair(x, y)
    b = _check_bijection(b, n)
    inv = inverse(b)
    if x.has_edge(inv[u], inv[v]) and y.has_edge(u, v):
        return [(u, v)]
    path = rank_path(x, y, b, exchange_target(b, u, v), cap)
    return None if path is None else moves_along(path)


# -- isolated vertices ------------------------------------------------------


@dataclass(frozen=True)
class IsolatedSearch:
    bijection: Optional[Bijection]
    exhaustive: bool
    attempts: int

    @property
    def found(self) -> bool:
        return self.bijection is not None


def find_isolated_vertex(x: Graph, y: Graph, budget: int = 10**7) -> IsolatedSearch:
    """Backtracking search for a bijection with no friendly swap.

    X-vertices are placed by descending degree and tried on Y-vertices in
    ascending order; a placement is rejected when it puts an X-edge onto a
    Y-edge.  ``exhaustive`` is true when the search finished inside the budget,
    so an absent result is then a proof that no isolated vertex exists.
    """
    n = _check_pair(x, y)
    order = sorted(range(n), key=lambda v: (-x.degree(v), v))
    image = [-1] * n
    attempts = 0
    out_of_budget = False

    def place(k: int, used: int) -> bool:
        nonlocal attempts, out_of_budget
        if k == n:
            return True
        a = order[k]
        forbidden = used
        for c in x.neighbors(a):
            if image[c] >= 0:
                forbidden |= y.rows[image[c]]
        for t in range(n):
            if forbidden >> t & 1:
                continue
            attempts += 1
            if attempts > budget:
                out_of_budget = True
                return False
            image[a] = t
            if place(k + 1, used | 1 << t):
                return True
            image[a] = -1
        return False

    if place(0, 0):
        return IsolatedSearch(tuple(image), True, attempts)
    return IsolatedSearch(None, not out_of_budget, min(attempts, budget))


# -- parity of bipartite pairs ----------------------------------------------


def reference_bijection(x: Graph, y: Graph) -> Bijection:
    """Maps the first part of X onto the first part of Y in order when sizes agree."""
    ax, bx = x.part_sets()
    ay, by = y.part_sets()
    if len(ax) != len(ay):
        return tuple(range(x.n))
    ref = [0] * x.n
    for src, dst in ((sorted(ax), sorted(ay)), (sorted(bx), sorted(by))):
        for s, d in zip(src, dst):
            ref[s] = d
    return tuple(ref)


def concordance_class(x: Graph, y: Graph, b: Sequence[int]) -> int:
    """Label in {0, 1}; bijections in one component of FS(X, Y) share it."""
    n = _check_pair(x, y)
    if x.partition is None or y.partition is None:
        raise GraphError("concordance needs declared partitions on X and Y")
    b = _check_bijection(b, n)
    ref = reference_bijection(x, y)
    ax, _ = x.part_sets()
    ay, _ = y.part_sets()
    hits_b = sum(1 for a in ax if b[a] in ay)
    hits_ref = sum(1 for a in ax if ref[a] in ay)
    rel = tuple(inverse(ref)[b[i]] for i in range(n))
    return (sign(rel) + hits_b - hits_ref) % 2
