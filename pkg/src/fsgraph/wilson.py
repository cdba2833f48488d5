"""Classify a graph against the conditions that make FS(Star_n, Y) connected."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .graph import Graph, articulation_points, find_isomorphism, is_biconnected, is_connected, is_cycle_graph, theta0, two_coloring

WILSONIAN = "wilsonian"
NOT_BICONNECTED = "not_biconnected"
CYCLE = "cycle_exception"
THETA0 = "theta0_exception"
BIPARTITE = "bipartite_exception"

CONNECTED = "connected"
NOT_GUARANTEED = "not_guaranteed"


@dataclass(frozen=True)
class WilsonVerdict:
    status: str
    witness: Optional[Any] = None

    @property
    def wilsonian(self) -> bool:
        return self.status == WILSONIAN


def classify(y: Graph) -> WilsonVerdict:
    """Checks run in a fixed order so each graph gets one status.

    The witness is a cut vertex (or ``None`` when disconnected), the θ₀
    isomorphism, or the 2-colouring, depending on the status.
    """
    if not is_biconnected(y):
        cut = articulation_points(y) if is_connected(y) else []
        return WilsonVerdict(NOT_BICONNECTED, cut[0] if cut else None)
    if y.n >= 4 and is_cycle_graph(y):
        return WilsonVerdict(CYCLE)
    if y.n == 7:
        iso = find_isomorphism(y, theta0())
        if iso is not None:
            return WilsonVerdict(THETA0, iso)
    coloring = two_coloring(y)
    if coloring is not None:
        return WilsonVerdict(BIPARTITE, coloring)
    return WilsonVerdict(WILSONIAN)


def predict_star_components(y: Graph) -> str:
    return CONNECTED if classify(y).wilsonian else NOT_GUARANTEED
