"""
Blow-ups of a nodal curve at a subset of its nodes, and the graph Sigma_X.

Blowing up the node p_i inserts an exceptional component E_i (genus 0) between
the two branches, so in the dual graph the edge i becomes a path u - E_i - v.
X~ is the blow-up minus its exceptional components; its dual graph is the base
graph with the blown edges removed.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Tuple

import networkx as nx

from .dualgraph import DualGraph, VertexId


def exceptional_node(edge_id: int) -> Tuple[str, int]:
    """networkx node key of E_{edge_id}; a tuple never clashes with string ids."""
    return ("E", edge_id)


@dataclass(frozen=True)
class BlowUpGraph:
    """
    Dual graph of the blow-up X of the base curve at the nodes in `blown`.

    Attributes:
        base: Dual graph of the stable curve C
        blown: Edge ids of the blown-up nodes (Delta)
    """
    base: DualGraph
    blown: FrozenSet[int]

    @cached_property
    def total_graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for vid, g in self.base.vertices:
            graph.add_node(vid, genus=g, exceptional=False)
        for idx, (u, v) in enumerate(self.base.edges):
            if idx in self.blown:
                e = exceptional_node(idx)
                graph.add_node(e, genus=0, exceptional=True)
                graph.add_edge(u, e, key=(idx, 0))
                graph.add_edge(e, v, key=(idx, 1))
            else:
                graph.add_edge(u, v, key=idx)
        return graph

    @property
    def exceptional_vertices(self) -> Tuple[Tuple[str, int], ...]:
        return tuple(exceptional_node(i) for i in sorted(self.blown))

    @cached_property
    def tilde_graph(self) -> nx.MultiGraph:
        """Dual graph of X~: base vertices and the non-blown edges."""
        graph = nx.MultiGraph()
        for vid, g in self.base.vertices:
            graph.add_node(vid, genus=g)
        for idx, (u, v) in enumerate(self.base.edges):
            if idx not in self.blown:
                graph.add_edge(u, v, key=idx)
        return graph

    @cached_property
    def tilde_components(self) -> Tuple[FrozenSet[VertexId], ...]:
        """Connected components of X~, ordered by first vertex in declaration order."""
        order = {v: i for i, v in enumerate(self.base.vertex_ids)}
        comps = [frozenset(c) for c in nx.connected_components(self.tilde_graph)]
        return tuple(sorted(comps, key=lambda c: min(order[v] for v in c)))

    def component_b1(self, component: FrozenSet[VertexId]) -> int:
        sub = self.tilde_graph.subgraph(component)
        return sub.number_of_edges() - sub.number_of_nodes() + 1

    def total_genus(self) -> int:
        graph = self.total_graph
        return (
            sum(data["genus"] for _, data in graph.nodes(data=True))
            + graph.number_of_edges()
            - graph.number_of_nodes()
            + nx.number_connected_components(graph)
        )

    def contract(self) -> DualGraph:
        """Remove the exceptional vertices and re-fuse their two edges."""
        edges = []
        for idx in range(self.base.delta):
            if idx in self.blown:
                e = exceptional_node(idx)
                ends = list(self.total_graph.neighbors(e))
                if self.total_graph.degree(e) != 2:
                    raise RuntimeError(f"exceptional vertex {e} has valence {self.total_graph.degree(e)}")
                # neighbors() collapses a repeated neighbour (a blown loop)
                u, v = (ends[0], ends[0]) if len(ends) == 1 else tuple(ends)
                orig = self.base.edges[idx]
                edges.append(orig if {u, v} == set(orig) else (u, v))
            else:
                edges.append(self.base.edges[idx])
        return DualGraph(vertices=self.base.vertices, edges=tuple(edges))


def blow_up(G: DualGraph, delta_set: Iterable[int]) -> BlowUpGraph:
    """
    Blow up G at the nodes with the given edge ids.

    Raises:
        ValueError: If an edge id is unknown
    """
    blown = frozenset(int(i) for i in delta_set)
    for idx in sorted(blown):
        if not 0 <= idx < G.delta:
            raise ValueError(f"unknown edge id {idx} (graph has {G.delta} edges)")
    return BlowUpGraph(base=G, blown=blown)


@dataclass(frozen=True)
class SigmaGraph:
    """
    Graph with the components of X~ as vertices and the exceptional
    components as edges.

    Attributes:
        vertices: Components of X~
        edges: (edge id, component index, component index) per exceptional component
    """
    vertices: Tuple[FrozenSet[VertexId], ...]
    edges: Tuple[Tuple[int, int, int], ...]

    @cached_property
    def nx_graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(len(self.vertices)))
        for idx, a, b in self.edges:
            graph.add_edge(a, b, key=idx)
        return graph

    @property
    def component_count(self) -> int:
        return nx.number_connected_components(self.nx_graph)

    @property
    def b1(self) -> int:
        return len(self.edges) - len(self.vertices) + self.component_count


def sigma_graph(X: BlowUpGraph) -> SigmaGraph:
    """Build Sigma_X from a blow-up."""
    comps = X.tilde_components
    index = {v: i for i, comp in enumerate(comps) for v in comp}
    edges = tuple(
        (idx, index[X.base.edges[idx][0]], index[X.base.edges[idx][1]])
        for idx in sorted(X.blown)
    )
    return SigmaGraph(vertices=comps, edges=edges)
