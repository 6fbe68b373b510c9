"""Dual graphs of nodal curves, blow-ups at node subsets and the graph Sigma_X."""

from .blowup import BlowUpGraph, SigmaGraph, blow_up, exceptional_node, sigma_graph
from .dualgraph import (
    DualGraph,
    canonical_multidegree,
    genus,
    is_stable,
    is_two_component,
    two_component_graph,
)
from .io import from_json, load_curve, to_json
from .sampling import random_dual_graph, random_dual_graphs

__all__ = [
    "BlowUpGraph",
    "DualGraph",
    "SigmaGraph",
    "blow_up",
    "canonical_multidegree",
    "exceptional_node",
    "from_json",
    "genus",
    "is_stable",
    "is_two_component",
    "load_curve",
    "random_dual_graph",
    "random_dual_graphs",
    "sigma_graph",
    "to_json",
    "two_component_graph",
]
