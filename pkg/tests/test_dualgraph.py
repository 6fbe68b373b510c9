"""Tests for graphs/dualgraph.py: Genus-weighted dual graphs."""

import pytest

from spinmoduli.graphs.dualgraph import (
    DualGraph,
    canonical_multidegree,
    genus,
    is_stable,
    is_two_component,
    two_component_graph,
)


class TestDualGraph:
    """Tests for DualGraph construction and validation."""

    def test_two_component(self, reference_graph):
        assert reference_graph.vertex_ids == ("C1", "C2")
        assert reference_graph.delta == 3
        assert reference_graph.edge_ids == (0, 1, 2)

    def test_valence_counts_loops_twice(self):
        G = DualGraph(vertices=(("A", 1),), edges=(("A", "A"),))
        assert G.valence("A") == 2
        assert G.has_loops()

    def test_no_vertices(self):
        with pytest.raises(ValueError, match="no vertices"):
            DualGraph(vertices=())

    def test_duplicate_ids(self):
        with pytest.raises(ValueError, match="duplicate"):
            DualGraph(vertices=(("A", 0), ("A", 1)))

    def test_negative_genus(self):
        with pytest.raises(ValueError, match="negative genus"):
            DualGraph(vertices=(("A", -1),))

    def test_unknown_endpoint(self):
        with pytest.raises(ValueError, match="unknown vertex"):
            DualGraph(vertices=(("A", 0),), edges=(("A", "B"),))

    def test_disconnected(self):
        G = DualGraph(vertices=(("A", 1), ("B", 1)))
        assert not G.is_connected()
        with pytest.raises(ValueError, match="not connected"):
            genus(G)

    def test_endpoint_count(self, reference_graph):
        assert reference_graph.endpoint_count("C1", [0, 2]) == 2
        loop = DualGraph(vertices=(("A", 0),), edges=(("A", "A"),))
        assert loop.endpoint_count("A", [0]) == 2

    def test_nx_graph_keys_are_edge_ids(self, reference_graph):
        keys = sorted(k for _, _, k in reference_graph.nx_graph.edges(keys=True))
        assert keys == [0, 1, 2]

    def test_relabel(self, reference_graph):
        other = reference_graph.relabel({"C1": "X", "C2": "Y"}, [2, 0, 1])
        assert other.vertex_ids == ("X", "Y")
        assert genus(other) == genus(reference_graph)


class TestInvariants:
    """Tests for genus(), is_stable() and canonical_multidegree()."""

    def test_reference_genus(self, reference_graph):
        assert genus(reference_graph) == 4

    def test_triangle(self, triangle_graph):
        assert genus(triangle_graph) == 4
        assert is_stable(triangle_graph)
        assert canonical_multidegree(triangle_graph) == {"A": 2, "B": 2, "C": 2}

    def test_unstable_rational_bridge(self):
        G = DualGraph(vertices=(("A", 1), ("P", 0), ("B", 1)), edges=(("A", "P"), ("P", "B")))
        assert not is_stable(G)

    def test_canonical_degree_sum(self, reference_graph):
        degrees = canonical_multidegree(reference_graph)
        assert degrees == {"C1": 3, "C2": 3}
        assert sum(degrees.values()) == 2 * genus(reference_graph) - 2


class TestTwoComponent:
    def test_builder(self):
        G = two_component_graph(2, 1, 4)
        assert G.genera == {"C1": 2, "C2": 1}
        assert is_two_component(G)

    def test_zero_nodes(self):
        with pytest.raises(ValueError, match="delta must be at least 1"):
            two_component_graph(1, 1, 0)

    def test_loops_are_not_two_component(self):
        G = DualGraph(vertices=(("C1", 1), ("C2", 1)), edges=(("C1", "C2"), ("C1", "C1")))
        assert not is_two_component(G)
