"""
Curve spec files.

Format:
    {"vertices": [{"id": "C1", "genus": 1}, {"id": "C2", "genus": 1}],
     "edges": [["C1", "C2"], ["C1", "C2"], ["C1", "C2"]]}

Edge order in the file defines the node indices p_1, ..., p_delta.
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

from .dualgraph import DualGraph


def from_json(payload: Any) -> DualGraph:
    """
    Build a connected DualGraph from a parsed curve spec.

    Raises:
        ValueError: On schema violations or a disconnected graph
    """
    if not isinstance(payload, dict):
        raise ValueError("malformed curve spec: top level must be an object")
    vertices = payload.get("vertices")
    edges = payload.get("edges", [])
    if not isinstance(vertices, list) or not vertices:
        raise ValueError("malformed curve spec: 'vertices' must be a non-empty list")
    if not isinstance(edges, list):
        raise ValueError("malformed curve spec: 'edges' must be a list")

    parsed_vertices = []
    for entry in vertices:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ValueError(f"malformed curve spec: bad vertex entry {entry!r}")
        g = entry.get("genus", 0)
        if not isinstance(g, int) or isinstance(g, bool):
            raise ValueError(f"malformed curve spec: genus of {entry['id']!r} must be an integer")
        parsed_vertices.append((str(entry["id"]), g))

    parsed_edges = []
    for entry in edges:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ValueError(f"malformed curve spec: edge {entry!r} must be a pair of vertex ids")
        parsed_edges.append((str(entry[0]), str(entry[1])))

    graph = DualGraph(vertices=tuple(parsed_vertices), edges=tuple(parsed_edges))
    return graph.require_connected()


def to_json(G: DualGraph) -> Dict[str, Any]:
    return {
        "vertices": [{"id": v, "genus": g} for v, g in G.vertices],
        "edges": [[u, v] for u, v in G.edges],
    }


def load_curve(path: Union[str, Path]) -> DualGraph:
    """
    Read a curve spec file.

    Raises:
        ValueError: If the file is unreadable, not valid JSON or violates the schema
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValueError(f"cannot read curve spec {path}: {e.strerror or e}") from e
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed JSON in {path}: {e}") from e
    return from_json(payload)
