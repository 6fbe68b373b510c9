"""Shared fixtures for spinmoduli tests."""

import json

import pytest

from spinmoduli.enriched.curve import TwoComponentCurve
from spinmoduli.graphs.dualgraph import DualGraph, two_component_graph


# ---------------------------------------------------------------------------
# Reference curve: two elliptic components meeting in three nodes
# ---------------------------------------------------------------------------
REFERENCE_CURVE_SPEC = {
    "vertices": [{"id": "C1", "genus": 1}, {"id": "C2", "genus": 1}],
    "edges": [["C1", "C2"], ["C1", "C2"], ["C1", "C2"]],
}

# An irreducible curve of geometric genus 1 with one node (a loop)
NODAL_CURVE_SPEC = {
    "vertices": [{"id": "A", "genus": 1}],
    "edges": [["A", "A"]],
}

DISCONNECTED_SPEC = {
    "vertices": [{"id": "A", "genus": 1}, {"id": "B", "genus": 2}],
    "edges": [],
}


def write_spec(tmp_path, spec, name="curve.json"):
    path = tmp_path / name
    path.write_text(json.dumps(spec), encoding="utf-8")
    return path


@pytest.fixture
def reference_graph() -> DualGraph:
    return two_component_graph(1, 1, 3)


@pytest.fixture
def reference_curve() -> TwoComponentCurve:
    return TwoComponentCurve(1, 1, 3)


@pytest.fixture
def reference_spec_file(tmp_path):
    return write_spec(tmp_path, REFERENCE_CURVE_SPEC)


@pytest.fixture
def triangle_graph() -> DualGraph:
    """Three genus-0 components in a cycle, each with a loop: stable, b1 = 4."""
    return DualGraph(
        vertices=(("A", 0), ("B", 0), ("C", 0)),
        edges=(("A", "B"), ("B", "C"), ("C", "A"), ("A", "A"), ("B", "B"), ("C", "C")),
    )
