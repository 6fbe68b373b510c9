"""Tests for local/ideal.py: Equations of the local model."""

import pytest

from spinmoduli.local.ideal import (
    IdealPresentation,
    codimension,
    dx_ideal,
    invariant_presentation_check,
    invariant_substitution,
    jacobian_rank_at_origin,
    linear_ideal,
    local_ring,
)


class TestLocalRing:
    """Tests for local_ring()."""

    def test_variable_counts(self):
        R = local_ring(3)
        assert len(R.t) == 3
        assert len(R.w) == 6
        assert len(R.alpha) == 6
        assert R.ring.ngens == 15

    def test_symmetric_accessor(self):
        R = local_ring(3)
        assert R.w_(3, 1) == R.w[(1, 3)]

    def test_cached(self):
        assert local_ring(4) is local_ring(4)

    def test_bounds(self):
        with pytest.raises(ValueError, match="at least 1"):
            local_ring(0)
        with pytest.raises(ValueError, match="symbolic chart cap"):
            local_ring(9)


class TestDxIdeal:
    """Tests for dx_ideal()."""

    @pytest.mark.parametrize("delta, quadrics, cubics", [(2, 1, 0), (3, 3, 1), (4, 6, 4), (5, 10, 10)])
    def test_generator_counts(self, delta, quadrics, cubics):
        ideal = dx_ideal(delta)
        assert ideal.quadric_count == quadrics
        assert ideal.cubic_count == cubics
        assert len(ideal.generators) == quadrics + cubics

    def test_quadric_shape(self):
        R = local_ring(2)
        assert dx_ideal(2).generators == (R.w_(1, 1) * R.w_(2, 2) - R.w_(1, 2) ** 2,)

    def test_cubic_shape(self):
        R = local_ring(3)
        cubic = dx_ideal(3).generators[-1]
        assert cubic == R.w_(1, 1) * R.w_(2, 2) * R.w_(3, 3) - R.w_(1, 2) * R.w_(2, 3) * R.w_(1, 3)
        assert dx_ideal(3).labels[-1] == (1, 2, 3)

    def test_smooth_case(self):
        with pytest.raises(ValueError, match="D_X smooth"):
            dx_ideal(1)

    def test_generators_vanish_on_invariants(self):
        ideal = dx_ideal(4)
        subs = invariant_substitution(ideal.local)
        assert all(g.compose(subs) == 0 for g in ideal.generators)


class TestInvariantPresentation:
    """Tests for invariant_presentation_check()."""

    def test_passes(self):
        report = invariant_presentation_check(3, 4)
        assert report.passed
        names = [c.name for c in report.checks]
        assert names == ["generators-vanish", "even-monomials-expressible", "odd-monomials-not-invariant"]

    def test_monomial_counts(self):
        report = invariant_presentation_check(3, 4)
        even = report.checks[1]
        odd = report.checks[2]
        assert even.data["checked"] == 6 + 15
        assert odd.data["checked"] == 3 + 10

    def test_limitation_note(self):
        report = invariant_presentation_check(2, 2)
        assert any("not established" in note for note in report.notes)

    @pytest.mark.parametrize("bound", [0, 3, 5])
    def test_bad_degree_bound(self, bound):
        with pytest.raises(ValueError, match="even integer"):
            invariant_presentation_check(3, bound)


class TestJacobian:
    """Tests for jacobian_rank_at_origin() and codimension()."""

    @pytest.mark.parametrize("delta", [2, 3, 4])
    def test_singular_at_origin(self, delta):
        assert jacobian_rank_at_origin(dx_ideal(delta)) == 0
        assert codimension(delta) > 0

    def test_codimension(self):
        assert codimension(2) == 1
        assert codimension(3) == 3
        assert codimension(4) == 6

    def test_linear_ideal_has_full_rank(self):
        assert jacobian_rank_at_origin(linear_ideal(2, [(1, 1)])) == 1
        assert jacobian_rank_at_origin(linear_ideal(3, [(1, 1), (1, 2), (2, 2)])) == 3

    def test_constant_term(self):
        R = local_ring(2)
        ideal = IdealPresentation(delta=2, generators=(R.ring.one + R.w_(1, 1),))
        with pytest.raises(ValueError, match="does not vanish at the origin"):
            jacobian_rank_at_origin(ideal)

    def test_empty_ideal(self):
        assert jacobian_rank_at_origin(IdealPresentation(delta=2, generators=())) == 0
