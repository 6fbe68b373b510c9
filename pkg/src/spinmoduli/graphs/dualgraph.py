"""
Dual graphs of nodal curves.

A DualGraph has one vertex per irreducible component, weighted by its geometric
genus, and one edge per node. Edges are identified by their insertion index,
which is also the node index p_{i+1} of the curve. Loops (irreducible nodal
components) are allowed and contribute 2 to the valence of their vertex.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

import networkx as nx

VertexId = str
Edge = Tuple[VertexId, VertexId]


@dataclass(frozen=True)
class DualGraph:
    """
    Genus-weighted multigraph of a nodal curve.

    Attributes:
        vertices: (id, genus) pairs in declaration order
        edges: (u, v) endpoint pairs; the index of an edge is its id
    """
    vertices: Tuple[Tuple[VertexId, int], ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple((str(v), int(g)) for v, g in self.vertices))
        object.__setattr__(self, "edges", tuple((str(u), str(v)) for u, v in self.edges))
        ids = [v for v, _ in self.vertices]
        if not ids:
            raise ValueError("dual graph has no vertices")
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate vertex ids in {ids}")
        for vid, g in self.vertices:
            if g < 0:
                raise ValueError(f"vertex {vid!r} has negative genus {g}")
        known = set(ids)
        for idx, (u, v) in enumerate(self.edges):
            if u not in known or v not in known:
                raise ValueError(f"edge {idx} joins unknown vertex ({u!r}, {v!r})")

    @property
    def vertex_ids(self) -> Tuple[VertexId, ...]:
        return tuple(v for v, _ in self.vertices)

    @property
    def delta(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        return tuple(range(len(self.edges)))

    @cached_property
    def genera(self) -> Dict[VertexId, int]:
        return dict(self.vertices)

    @cached_property
    def nx_graph(self) -> nx.MultiGraph:
        """networkx view: node attribute "genus", edge key = edge id."""
        graph = nx.MultiGraph()
        for vid, g in self.vertices:
            graph.add_node(vid, genus=g, exceptional=False)
        for idx, (u, v) in enumerate(self.edges):
            graph.add_edge(u, v, key=idx)
        return graph

    def valence(self, vertex: VertexId) -> int:
        return self.nx_graph.degree(vertex)

    def is_connected(self) -> bool:
        return nx.is_connected(self.nx_graph)

    def require_connected(self) -> "DualGraph":
        if not self.is_connected():
            raise ValueError("dual graph is not connected")
        return self

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def endpoint_count(self, vertex: VertexId, edge_ids) -> int:
        """Number of endpoints at vertex among the given edges (a loop counts 2)."""
        count = 0
        for idx in edge_ids:
            u, v = self.edges[idx]
            count += (u == vertex) + (v == vertex)
        return count

    def relabel(self, vertex_map: Dict[VertexId, VertexId], edge_order: List[int]) -> "DualGraph":
        """Isomorphic copy with renamed vertices and permuted edge ids."""
        vertices = tuple((vertex_map[v], g) for v, g in self.vertices)
        edges = tuple((vertex_map[self.edges[i][0]], vertex_map[self.edges[i][1]]) for i in edge_order)
        return DualGraph(vertices=vertices, edges=edges)


def genus(G: DualGraph) -> int:
    """
    Arithmetic genus: sum of component genera plus b1 of the graph.

    Raises:
        ValueError: If G is not connected
    """
    G.require_connected()
    return sum(g for _, g in G.vertices) + G.delta - len(G.vertices) + 1


def is_stable(G: DualGraph) -> bool:
    """True iff every genus-0 vertex has valence at least 3."""
    G.require_connected()
    return all(G.valence(v) >= 3 for v, g in G.vertices if g == 0)


def canonical_multidegree(G: DualGraph) -> Dict[VertexId, int]:
    """
    Degree of the dualizing sheaf on each component: 2g_v - 2 + valence(v).

    The degrees add up to 2*genus(G) - 2.
    """
    G.require_connected()
    return {v: 2 * g - 2 + G.valence(v) for v, g in G.vertices}


def two_component_graph(g1: int, g2: int, delta: int) -> DualGraph:
    """Two smooth components C1, C2 meeting in delta nodes."""
    if delta < 1:
        raise ValueError(f"delta must be at least 1, got {delta}")
    return DualGraph(
        vertices=(("C1", g1), ("C2", g2)),
        edges=tuple(("C1", "C2") for _ in range(delta)),
    )


def is_two_component(G: DualGraph) -> bool:
    """Two vertices, no loops: the shape the singularity criterion covers."""
    return len(G.vertices) == 2 and G.delta >= 1 and not G.has_loops()
