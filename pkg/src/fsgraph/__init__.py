"""Friends-and-strangers graphs FS(X, Y): exact analysis, constructions, exchanges, experiments."""

from .fs import (
    ComponentSummary,
    apply_sequence,
    components,
    concordance_class,
    exchangeable,
    find_isolated_vertex,
    friendly_neighbors,
    is_isolated,
)
from .graph import Graph, RandomModel, generator, make_graph, sample
from .wilson import classify, predict_star_components

__all__ = [
    "ComponentSummary",
    "Graph",
    "RandomModel",
    "apply_sequence",
    "classify",
    "components",
    "concordance_class",
    "exchangeable",
    "find_isolated_vertex",
    "friendly_neighbors",
    "generator",
    "is_isolated",
    "make_graph",
    "predict_star_components",
    "sample",
]
