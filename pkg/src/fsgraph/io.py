"""Plain-text edge lists.

First line ``n m`` (or ``bipartite r m`` for graphs with parts ``0..r-1`` and
``r..2r-1``), then ``m`` lines ``u v``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .graph import Graph, GraphError, make_graph

PathLike = Union[str, Path]


def dumps(g: Graph) -> str:
    edges = g.edges()
    if g.partition is not None:
        r = g.n // 2
        if g.n % 2 or g.partition != tuple([0] * r + [1] * r):
            raise GraphError("only parts {0..r-1}, {r..2r-1} can be written in bipartite form")
        head = f"bipartite {r} {len(edges)}"
    else:
        head = f"{g.n} {len(edges)}"
    return "\n".join([head] + [f"{u} {v}" for u, v in edges]) + "\n"


def loads(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0]
    if head[0] == "bipartite":
        if len(head) != 3:
            raise GraphError(f"bad header {' '.join(head)!r}")
        r, m = int(head[1]), int(head[2])
        n, part = 2 * r, [0] * r + [1] * r
    else:
        if len(head) != 2:
            raise GraphError(f"bad header {' '.join(head)!r}")
        n, m = int(head[0]), int(head[1])
        part = None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header promises {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        if len(ln) != 2:
            raise GraphError(f"bad edge line {' '.join(ln)!r}")
        edges.append((int(ln[0]), int(ln[1])))
    return make_graph(n, edges, part)


def read_graph(path: PathLike) -> Graph:
    return loads(Path(path).read_text())


def write_graph(g: Graph, path: PathLike) -> None:
    Path(path).write_text(dumps(g))
