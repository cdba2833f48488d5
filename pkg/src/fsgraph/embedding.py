"""Embedding small pattern pairs into (X, Y) through prescribed vertex sets.

A pattern pair ``(g, h)`` lives on ``[m]``.  It embeds with respect to sets
``V_0..V_{m-1}`` of Y-vertices and a bijection ``sigma`` when one vertex
``v_i`` per set can be picked so that h-edges land on Y-edges and g-edges,
pulled back through ``sigma``, land on X-edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

import numpy as np

from .graph import Graph, GraphError, RandomModel, make_graph, rng_for, sample
from .perm import Bijection, inverse


@dataclass(frozen=True)
class EmbedInstance:
    g: Graph
    h: Graph
    x: Graph
    y: Graph
    sigma: Bijection
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.g.n != self.h.n or len(self.sets) != self.g.n:
            raise GraphError("pattern graphs and set list must all have size m")
        if self.x.n != self.y.n or len(self.sigma) != self.x.n:
            raise GraphError("X, Y and sigma sizes differ")
        seen: set[int] = set()
        for s in self.sets:
            if seen & set(s):
                raise GraphError("sets must be pairwise disjoint")
            seen |= set(s)


def beta(g: Graph, h: Graph, j: Iterable[int]) -> int:
    """Edges of ``g`` plus edges of ``h`` inside ``j``."""
    mask = 0
    for v in j:
        mask |= 1 << v
    return sum((g.rows[v] & mask).bit_count() + (h.rows[v] & mask).bit_count() for v in range(g.n) if mask >> v & 1) // 2


def find_embedding(inst: EmbedInstance) -> Optional[tuple[int, ...]]:
    """Backtracking in index order with ascending candidates; ``None`` means no embedding."""
    g, h, x, y = inst.g, inst.h, inst.x, inst.y
    inv = inverse(inst.sigma)
    m = g.n
    chosen: list[int] = []

    def ok(i: int, c: int) -> bool:
        for j in range(i):
            d = chosen[j]
            if h.has_edge(i, j) and not y.has_edge(c, d):
                return False
            if g.has_edge(i, j) and not x.has_edge(inv[c], inv[d]):
                return False
        return True

    def extend(i: int) -> bool:
        if i == m:
            return True
        for c in sorted(inst.sets[i]):
            if ok(i, c):
                chosen.append(c)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def brute_force_embedding(inst: EmbedInstance) -> bool:
    """Cartesian-product check, for cross-validation on small instances."""
    inv = inverse(inst.sigma)
    for pick in product(*[sorted(s) for s in inst.sets]):
        if all(inst.y.has_edge(pick[i], pick[j]) for i, j in inst.h.edges()) and all(
            inst.x.has_edge(inv[pick[i]], inv[pick[j]]) for i, j in inst.g.edges()
        ):
            return True
    return False


# -- the counting hypothesis -------------------------------------------------


@dataclass(frozen=True)
class HypothesisReport:
    threshold: float
    failing: tuple[tuple[tuple[int, ...], float], ...]
    checked: int

    @property
    def passes(self) -> bool:
        return not self.failing


def check_hypothesis_inequality(
    g: Graph, h: Graph, p: float, q: Sequence[int], n: int, bipartite: bool = False
) -> HypothesisReport:
    """Test ``p**beta(J) * prod(q_j, j in J) >= 3 * 2**(m+1) * Q * ln(n)`` for every J with beta(J) >= 1.

    ``n`` is the number of vertices of X (so ``2r`` in bipartite mode); the
    bipartite flag only changes the bound on ``Q``.  Failing sets come back
    with their left-hand side.
    """
    m = g.n
    if len(q) != m or any(qi <= 0 for qi in q):
        raise ValueError("q must hold m positive integers")
    total = sum(q)
    if total > n:
        raise ValueError(f"sum(q)={total} exceeds {'2r' if bipartite else 'n'}={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    threshold = 3 * 2 ** (m + 1) * total * math.log(n)
    log_t = math.log(threshold) if threshold > 0 else -math.inf
    logp = math.log(p) if p > 0 else -math.inf
    failing = []
    checked = 0
    for k in range(1, m + 1):
        for j in combinations(range(m), k):
            b = beta(g, h, j)
            if b < 1:
                continue
            checked += 1
            log_lhs = b * logp + sum(math.log(q[i]) for i in j)
            if log_lhs < log_t:
                failing.append((j, math.exp(log_lhs) if log_lhs > -math.inf else 0.0))
    return HypothesisReport(threshold, tuple(failing), checked)


def asymptotic_parameters(r: int) -> tuple[float, int]:
    """``p = 5 (ln r)^(1/10) / r^(3/10)`` and ``q = floor(p r / 13)``."""
    p = 5 * math.log(r) ** 0.1 / r ** 0.3
    return p, math.floor(p * r / 13)


# -- bipartite admissibility -------------------------------------------------


def _one_side(groups: Sequence[Sequence[int]], labels_a: list[set[int]], labels_b: list[set[int]]) -> bool:
    sa = set().union(*labels_a) if labels_a else set()
    sb = set().union(*labels_b) if labels_b else set()
    if len(sa) > 1 or len(sb) > 1:
        return False
    return not (sa and sb and sa == sb)


def is_admissible(
    sets: Sequence[Sequence[int]],
    sigma: Sequence[int],
    g_parts: Sequence[int],
    h_parts: Sequence[int],
    x_parts: Sequence[int],
    y_parts: Sequence[int],
) -> bool:
    """Sets indexed by one h-part share one Y-part and the rest the other; same for
    g-parts and the X-parts of the sigma-preimages."""
    for parts in (g_parts, h_parts, x_parts, y_parts):
        if parts is None:
            raise GraphError("admissibility needs all four bipartitions")
    inv = inverse(sigma)
    m = len(sets)
    ya = [{y_parts[v] for v in sets[i]} for i in range(m) if h_parts[i] == 0]
    yb = [{y_parts[v] for v in sets[i]} for i in range(m) if h_parts[i] == 1]
    xa = [{x_parts[inv[v]] for v in sets[i]} for i in range(m) if g_parts[i] == 0]
    xb = [{x_parts[inv[v]] for v in sets[i]} for i in range(m) if g_parts[i] == 1]
    return _one_side(sets, ya, yb) and _one_side(sets, xa, xb)


# -- majority maps -----------------------------------------------------------


@dataclass(frozen=True)
class MajorityProfile:
    """Which side (0 = the part of u or u', 1 = the other) each neighbourhood mostly maps to."""

    nu_prime: int
    nv_prime: int
    nu: int
    nv: int

    @property
    def case(self) -> str:
        y_same = self.nu_prime == self.nv_prime
        x_same = self.nu == self.nv
        return {(True, True): "I", (True, False): "II", (False, True): "III", (False, False): "IV"}[(y_same, x_same)]


def _majority(targets: Iterable[int], in_a) -> int:
    ts = list(targets)
    hits = sum(1 for t in ts if in_a(t))
    return 0 if 2 * hits >= len(ts) else 1


def majority_profile(x: Graph, y: Graph, sigma: Sequence[int], u: int, v: int) -> MajorityProfile:
    if x.partition is None or y.partition is None:
        raise GraphError("majority maps need declared partitions")
    if y.partition[u] == y.partition[v]:
        raise GraphError("u and v must lie in different parts of Y")
    inv = inverse(sigma)
    up, vp = inv[u], inv[v]
    if not x.has_edge(up, vp):
        raise GraphError("positions of u and v must be adjacent in X")
    ay = y.partition[u]
    ax = x.partition[up]
    return MajorityProfile(
        _majority((sigma[a] for a in x.neighbors(up)), lambda t: y.partition[t] == ay),
        _majority((sigma[a] for a in x.neighbors(vp)), lambda t: y.partition[t] == ay),
        _majority((inv[t] for t in y.neighbors(u)), lambda a: x.partition[a] == ax),
        _majority((inv[t] for t in y.neighbors(v)), lambda a: x.partition[a] == ax),
    )


def majority_map_case(x: Graph, y: Graph, sigma: Sequence[int], u: int, v: int) -> str:
    """One of ``"I"`` .. ``"IV"``: same/different Y-majorities, then same/different X-majorities."""
    return majority_profile(x, y, sigma, u, v).case


# -- Monte Carlo -------------------------------------------------------------


@dataclass(frozen=True)
class EmbedEstimate:
    frequency: float
    trials: int
    hits: int


def _draw_sets(rng: np.random.Generator, pools: list[list[int]], q: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    used: set[int] = set()
    out = []
    for pool, k in zip(pools, q):
        free = [t for t in pool if t not in used]
        if len(free) < k:
            raise ValueError(f"not enough vertices to draw a set of size {k}")
        pick = sorted(int(t) for t in rng.choice(free, size=k, replace=False))
        used.update(pick)
        out.append(tuple(pick))
    return tuple(out)


def estimate_embeddability(
    g: Graph,
    h: Graph,
    kind: str,
    size: int,
    p: float,
    q: Sequence[int],
    trials: int,
    seed: int,
) -> EmbedEstimate:
    """Fraction of trials where the pattern embeds for random (X, Y), sigma and sets.

    ``kind`` is ``"gnp"`` or ``"bipartite_gnp"``.  In the bipartite case the
    sets are drawn admissible, which needs partitions on ``g`` and ``h``.
    Trial ``t`` draws everything from the stream keyed by ``(seed, t)``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    m = g.n
    if len(q) != m:
        raise ValueError("q must have one entry per pattern vertex")
    bip = kind == "bipartite_gnp"
    if bip and (g.partition is None or h.partition is None):
        raise GraphError("bipartite mode needs partitions on the pattern graphs")
    hits = 0
    for t in range(trials):
        rng = rng_for(seed, t)
        sx, sy = (int(s) for s in rng.integers(0, 2**63, size=2))
        x = sample(RandomModel(kind, size, p, sx))
        y = sample(RandomModel(kind, size, p, sy))
        sigma = tuple(int(s) for s in rng.permutation(x.n))
        inv = inverse(sigma)
        if bip:
            flip_y, flip_x = (int(f) for f in rng.integers(0, 2, size=2))
            pools = [
                [c for c in range(y.n) if y.partition[c] == h.partition[i] ^ flip_y and x.partition[inv[c]] == g.partition[i] ^ flip_x]
                for i in range(m)
            ]
        else:
            pools = [list(range(y.n)) for _ in range(m)]
        sets = _draw_sets(rng, pools, q)
        if find_embedding(EmbedInstance(g, h, x, y, sigma, sets)) is not None:
            hits += 1
    return EmbedEstimate(hits / trials, trials, hits)
