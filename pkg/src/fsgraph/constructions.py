"""Explicit graph pairs: block constructions and sequence-derived gadgets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .fs import Move, apply_sequence, parse_sequence
from .graph import Graph, GraphError, make_graph, two_coloring
from .perm import Bijection, identity


class CertificateError(RuntimeError):
    pass


@dataclass(frozen=True)
class BlockConstruction:
    blocks: tuple[tuple[str, tuple[int, ...]], ...]
    x: Graph
    y: Graph

    def block_of(self) -> dict[int, str]:
        return {v: name for name, vs in self.blocks for v in vs}

    def block(self, name: str) -> tuple[int, ...]:
        return dict(self.blocks)[name]


# -- five blocks ------------------------------------------------------------


def five_block_sizes(n: int) -> list[int]:
    q, extra = divmod(n, 5)
    return [q + 1 if i < extra else q for i in range(5)]


def build_lower_bound_pair(n: int) -> BlockConstruction:
    """Five blocks; X joins blocks whose indices differ by 0 or ±1 mod 5, Y by 0 or ±2.

    Within a block both graphs are complete.
    """
    if n < 5:
        raise GraphError("five-block construction needs n >= 5")
    label = []
    for i, size in enumerate(five_block_sizes(n)):
        label += [i] * size
    xe, ye = [], []
    for a in range(n):
        for b in range(a + 1, n):
            d = (label[a] - label[b]) % 5
            if d not in (2, 3):
                xe.append((a, b))
            if d not in (1, 4):
                ye.append((a, b))
    blocks = tuple((f"A{i + 1}", tuple(v for v in range(n) if label[v] == i)) for i in range(5))
    return BlockConstruction(blocks, make_graph(n, xe), make_graph(n, ye))


@dataclass(frozen=True)
class BlockCertificate:
    x_pairs: frozenset[tuple[int, int]]
    y_pairs: frozenset[tuple[int, int]]
    n: int

    @property
    def holds(self) -> bool:
        return not (self.x_pairs & self.y_pairs) and self.n >= 5


def _cross_pairs(g: Graph, label: dict[int, int]) -> frozenset[tuple[int, int]]:
    out = set()
    for a, b in g.edges():
        i, j = label[a], label[b]
        if i != j:
            out.add((min(i, j), max(i, j)))
    return frozenset(out)


def certify_block_disconnected(c: BlockConstruction) -> BlockCertificate:
    """Show that block-preserving bijections are closed under friendly swaps.

    A swap across an X-edge between blocks i and j lands on a Y-edge between
    the same blocks only if both graphs use the index pair (i, j); the
    certificate is the two pair sets, which must be disjoint.  Since a
    bijection permuting the blocks nontrivially exists once n >= 5, the
    identity's component misses part of the state space.
    """
    index = {name: i for i, (name, _) in enumerate(c.blocks)}
    label = {v: index[name] for v, name in c.block_of().items()}
    cert = BlockCertificate(_cross_pairs(c.x, label), _cross_pairs(c.y, label), c.x.n)
    if not cert.holds:
        raise CertificateError(f"block pairs overlap: {sorted(cert.x_pairs & cert.y_pairs)}")
    return cert


# -- bipartite four blocks --------------------------------------------------


def build_bipartite_lower_bound(r: int) -> tuple[BlockConstruction, Bijection]:
    """Edge-subgraphs of K_{r,r} with an isolated bijection ``sigma0``.

    X: parts A_X+B_X and C_X+D_X with A-C and B-D complete, A-D and B-C
    regular circulant joins.  Y: parts A_Y+C_Y and B_Y+D_Y with A-B and C-D
    complete; A-D and B-C hold exactly the pairs whose sigma0-preimages are
    not X-edges.
    """
    if r < 2:
        raise GraphError("bipartite four-block construction needs r >= 2")
    a, b = (r + 1) // 2, r // 2
    ax = list(range(0, a))
    bx = list(range(a, r))
    cx = list(range(r, r + b))
    dx = list(range(r + b, 2 * r))
    ay = list(range(0, a))
    cy = list(range(a, r))
    by = list(range(r, r + b))
    dy = list(range(r + b, 2 * r))

    sigma0 = [0] * (2 * r)
    for src, dst in ((ax, ay), (bx, by), (cx, cy), (dx, dy)):
        for s, d in zip(src, dst):
            sigma0[s] = d

    xe = [(p, q) for p in ax for q in cx] + [(p, q) for p in bx for q in dx]
    for i, p in enumerate(ax):
        xe += [(p, dx[(i + k) % a]) for k in range(a // 2)]
    for i, p in enumerate(bx):
        xe += [(p, cx[(i + k) % b]) for k in range(b // 2)]
    part = [0] * r + [1] * r
    x = make_graph(2 * r, xe, part)

    inv = [0] * (2 * r)
    for s, d in enumerate(sigma0):
        inv[d] = s
    ye = [(p, q) for p in ay for q in by] + [(p, q) for p in cy for q in dy]
    ye += [(p, q) for p in ay for q in dy if not x.has_edge(inv[p], inv[q])]
    ye += [(p, q) for p in cy for q in by if not x.has_edge(inv[p], inv[q])]
    y = make_graph(2 * r, ye, part)

    blocks = (
        ("A_X", tuple(ax)), ("B_X", tuple(bx)), ("C_X", tuple(cx)), ("D_X", tuple(dx)),
        ("A_Y", tuple(ay)), ("B_Y", tuple(by)), ("C_Y", tuple(cy)), ("D_Y", tuple(dy)),
    )
    return BlockConstruction(blocks, x, y), tuple(sigma0)


def bipartite_lower_bound_degree(r: int) -> int:
    """``ceil((3r+1)/4) - 1``."""
    return -(-(3 * r + 1) // 4) - 1


# -- gadgets read off swap sequences ----------------------------------------


# One-based label listings of the four small gadget exchanges; each swaps 7 and 8.
_BUILTIN_SEQUENCES = (
    "46, 34, 45, 47, 34, 38, 46, 47, 24, 34, 14, 46, 45, 24, 34, 14, 46, 45, 24, 34, "
    "47, 24, 45, 46, 14, 47, 24, 45, 46, 14, 47, 24, 45",
    "16, 56, 67, 46, 36, 67, 46, 36, 26, 16, 56, 38, 36, 16, 26, 67, 46, 36, 56, 26, "
    "67, 46, 36, 56, 16, 67, 26",
    "36, 34, 47, 35, 34, 38, 14, 34, 24, 14, 34, 35, 47, 34, 38, 35, 34, 14, 24, 47, "
    "14, 34, 35, 38, 36",
    "26, 35, 14, 34, 38, 36, 34, 67, 38, 16, 36, 35, 38, 34, 14, 16, 36, 38, 26, 35, "
    "34, 38, 35",
)

GADGET_SIZE = 8
GADGET_PAIR = (6, 7)


def builtin_bipartite_gadget_sequences() -> list[list[Move]]:
    """The four fixed sequences on labels 0..7 (listed one-based as 1..8)."""
    return [parse_sequence(s, offset=1) for s in _BUILTIN_SEQUENCES]


@dataclass(frozen=True)
class DerivedGadget:
    g: Graph
    h: Graph
    g_coloring: Optional[tuple[int, ...]]
    h_coloring: Optional[tuple[int, ...]]

    def __iter__(self):
        return iter((self.g, self.h))


def derive_gadget_from_sequence(moves: Sequence[Move], n: int, u: int, v: int) -> DerivedGadget:
    """Smallest pair (G, H) on which ``moves`` is a friendly sequence from the identity.

    H holds the label pairs used; G holds the position pairs swapped on replay.
    Raises ``CertificateError`` unless the replay nets exactly the transposition
    of ``u`` and ``v``.
    """
    if not moves:
        raise ValueError("empty sequence")
    if any(not (0 <= a < n and 0 <= b < n) for a, b in moves):
        raise ValueError(f"labels must lie in 0..{n - 1}")
    h = make_graph(n, moves)
    cur = list(identity(n))
    pos = list(identity(n))
    g_edges = []
    for a, b in moves:
        pa, pb = pos[a], pos[b]
        g_edges.append((pa, pb))
        cur[pa], cur[pb] = b, a
        pos[a], pos[b] = pb, pa
    g = make_graph(n, g_edges)
    want = list(identity(n))
    want[u], want[v] = v, u
    if cur != want:
        raise CertificateError(f"sequence nets {tuple(cur)}, not the transposition ({u} {v})")
    final = apply_sequence(g, h, identity(n), moves).final
    assert list(final) == want
    return DerivedGadget(g, h, two_coloring(g), two_coloring(h))


# -- the four-vertex worked exchange ----------------------------------------


@dataclass(frozen=True)
class SmallExample:
    x: Graph
    y: Graph
    sigma: Bijection
    moves: tuple[Move, ...]
    u: int
    v: int


def small_exchange_example() -> SmallExample:
    """Paw-shaped X, star Y centred at w; five moves trade u and v.

    Labels: u=0, v=1, w=2, x=3, and sigma places each label on the X-vertex of
    the same index.
    """
    u, v, w, xl = 0, 1, 2, 3
    x = make_graph(4, [(w, xl), (u, xl), (u, v), (v, xl)])
    y = make_graph(4, [(w, xl), (w, u), (w, v)])
    moves = ((w, xl), (w, u), (w, v), (w, u), (w, xl))
    return SmallExample(x, y, identity(4), moves, u, v)
