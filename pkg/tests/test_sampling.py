"""Tests for graphs/sampling.py: Seeded random multigraphs."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from spinmoduli.graphs.sampling import random_dual_graph, random_dual_graphs
from spinmoduli.spin.enumeration import check_parity_closure, weighted_total
from spinmoduli.graphs.dualgraph import genus


class TestRandomDualGraph:
    """Tests for random_dual_graph()."""

    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_connected_within_bounds(self, seed):
        G = random_dual_graph(random.Random(seed), max_vertices=4, max_edges=6, max_genus=2)
        assert G.is_connected()
        assert len(G.vertices) <= 4
        assert G.delta <= 6
        assert all(0 <= g <= 2 for _, g in G.vertices)

    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_no_loops(self, seed):
        G = random_dual_graph(random.Random(seed), loops=False)
        assert not G.has_loops()

    def test_seeded(self):
        assert list(random_dual_graphs(10, seed=7)) == list(random_dual_graphs(10, seed=7))


class TestDegreeIdentityProperty:
    """The weighted support count equals 2^{2g} on arbitrary connected graphs."""

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_weighted_total(self, seed):
        G = random_dual_graph(random.Random(seed), max_genus=2)
        assert weighted_total(G) == 2 ** (2 * genus(G))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_parity_closure(self, seed):
        G = random_dual_graph(random.Random(seed))
        assert check_parity_closure(G).passed
