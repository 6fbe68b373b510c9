"""Seeded random connected multigraphs for property suites."""

import random
from typing import Iterator

from ..core.constants import RANDOM_GRAPH_MAX_EDGES, RANDOM_GRAPH_MAX_VERTICES
from .dualgraph import DualGraph


def random_dual_graph(
    rng: random.Random,
    max_vertices: int = RANDOM_GRAPH_MAX_VERTICES,
    max_edges: int = RANDOM_GRAPH_MAX_EDGES,
    max_genus: int = 3,
    loops: bool = True,
) -> DualGraph:
    """
    Sample a connected genus-weighted multigraph.

    A random spanning tree guarantees connectivity; the remaining edge budget
    is spent on parallel edges and (optionally) loops.
    """
    n = rng.randint(1, max(1, min(max_vertices, max_edges + 1)))
    ids = [f"V{i + 1}" for i in range(n)]
    vertices = tuple((vid, rng.randint(0, max_genus)) for vid in ids)
    edges = [(ids[rng.randrange(i)], ids[i]) for i in range(1, n)]
    extra = rng.randint(0, max_edges - len(edges))
    for _ in range(extra):
        u = rng.choice(ids)
        v = rng.choice(ids) if (loops or n == 1) else rng.choice([x for x in ids if x != u] or [u])
        if u == v and not loops:
            continue
        edges.append((u, v))
    rng.shuffle(edges)
    return DualGraph(vertices=vertices, edges=tuple(edges))


def random_dual_graphs(count: int, seed: int, **kwargs) -> Iterator[DualGraph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_dual_graph(rng, **kwargs)
