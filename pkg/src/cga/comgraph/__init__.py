from .graph import CommutingGraph, VertexSet
from .components import (
    ComponentAnalysis,
    analyze_component,
    analyze_vertex_set,
    component_of,
    harvest_cliques,
    neighbors_in_class,
    verify_2k2kl_structure,
)

__all__ = [
    "CommutingGraph",
    "ComponentAnalysis",
    "VertexSet",
    "analyze_component",
    "analyze_vertex_set",
    "component_of",
    "harvest_cliques",
    "neighbors_in_class",
    "verify_2k2kl_structure",
]
