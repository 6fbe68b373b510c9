"""Tests for enriched/labels.py and enriched/chi.py: Labels and the map chi."""

import pytest

from spinmoduli.enriched.chi import StratumPoint, chi_inverse, chi_map, transported_action
from spinmoduli.enriched.curve import TwoComponentCurve
from spinmoduli.enriched.labels import (
    EnrichedSpinLabel,
    LabelGroupElement,
    act,
    enriched_count,
    enriched_stable_directions,
    enumerate_labels,
    label_group,
    label_group_generators,
    stratum_label_count,
)
from spinmoduli.scalars import Fq2Elem, FqElem


def fq(*values, q=5):
    return tuple(FqElem(v, q) for v in values)


def keys(point):
    return [x.key for x in point.coordinates]


class TestEnrichedSpinLabel:
    """Tests for EnrichedSpinLabel validation."""

    def test_shape(self):
        label = EnrichedSpinLabel(delta=3, I=(1,), direction=fq(4), j2=0, signs=(1,))
        assert label.k == 1
        assert label.complement == (2, 3)
        assert label.to_dict() == {"I": [1], "direction": [4], "j2": 0, "signs": [1]}

    def test_wrong_lengths(self):
        with pytest.raises(ValueError, match="needs 1 direction entries"):
            EnrichedSpinLabel(delta=3, I=(1,), direction=fq(4, 1), signs=(0,))

    def test_signs_are_bits(self):
        with pytest.raises(ValueError, match="bits"):
            EnrichedSpinLabel(delta=2, I=(), direction=fq(1), signs=(2,))

    def test_improper(self):
        with pytest.raises(ValueError, match="proper subset"):
            EnrichedSpinLabel(delta=2, I=(1, 2))


class TestLabelGroup:
    """Tests for the label group and its action."""

    def test_act(self):
        label = EnrichedSpinLabel(delta=3, I=(1,), direction=fq(4), j2=5, signs=(1,))
        g = LabelGroupElement(j2=3, signs=(1,), scale=fq(2))
        moved = act(g, label)
        assert moved.direction == fq(3)
        assert moved.j2 == 6
        assert moved.signs == (0,)

    def test_identity(self):
        g = LabelGroupElement(j2=3, signs=(1, 0), scale=fq(2, 3))
        assert LabelGroupElement.identity(2, 5) * g == g

    def test_rank_mismatch(self):
        label = EnrichedSpinLabel(delta=2, I=(), direction=fq(1), signs=(0,))
        with pytest.raises(ValueError, match="acting on stratum"):
            act(LabelGroupElement.identity(2, 5), label)

    def test_group_order(self):
        curve = TwoComponentCurve(1, 1, 2)
        assert len(list(label_group(curve, 1, 5))) == 16 * 2 * 4

    def test_generators(self, reference_curve):
        gens = label_group_generators(reference_curve, 2, 5)
        assert len(gens) == 4 + 2 + 2
        assert gens[-1].scale == fq(1, 2)


class TestCounts:
    """Tests for label enumeration and counts."""

    def test_enumerate(self, reference_curve):
        labels = list(enumerate_labels(reference_curve, (1,), 5))
        assert len(labels) == 128
        assert len(set(labels)) == 128
        assert len(list(enumerate_labels(reference_curve, (1,), 5, j2=0))) == 8

    def test_stratum_counts(self, reference_curve):
        assert stratum_label_count(reference_curve, (), 5) == 1024
        assert stratum_label_count(reference_curve, (1,), 5) == 128
        assert stratum_label_count(reference_curve, (1, 2), 5) == 16

    def test_total(self, reference_curve):
        counts = enriched_count(reference_curve, 5)
        assert counts.total == 1456
        assert counts.to_dict()["strata"][0] == {"I": [], "count": 1024}

    def test_even_q(self, reference_curve):
        with pytest.raises(ValueError):
            enriched_count(reference_curve, 4)

    def test_stable_directions(self):
        assert len(enriched_stable_directions(3, 5)) == 16
        assert len(enriched_stable_directions(1, 5)) == 1


class TestChi:
    """Tests for chi_map(), chi_inverse() and transported_action()."""

    def test_square_direction(self, reference_curve):
        label = EnrichedSpinLabel(delta=3, I=(1,), direction=fq(4), j2=7, signs=(1,))
        point = chi_map(label, reference_curve, 5)
        assert keys(point) == [(0, 0), (1, 0), (3, 0)]
        assert point.xi_index == 7
        assert point.incidence == 0b001
        assert point.zero_set == (1,)

    def test_positive_sign(self, reference_curve):
        label = EnrichedSpinLabel(delta=3, I=(1,), direction=fq(4), signs=(0,))
        assert keys(chi_map(label, reference_curve, 5)) == [(0, 0), (1, 0), (2, 0)]

    def test_non_square_direction(self, reference_curve):
        label = EnrichedSpinLabel(delta=3, I=(2,), direction=fq(2), signs=(0,))
        assert keys(chi_map(label, reference_curve, 5)) == [(1, 0), (0, 0), (0, 1)]

    def test_full_stratum_point(self, reference_curve):
        label = EnrichedSpinLabel(delta=3, I=(1, 3))
        assert keys(chi_map(label, reference_curve, 5)) == [(0, 0), (1, 0), (0, 0)]

    def test_zero_direction(self, reference_curve):
        label = EnrichedSpinLabel(delta=3, I=(1,), direction=fq(0), signs=(0,))
        with pytest.raises(ValueError, match="direction entry zero"):
            chi_map(label, reference_curve, 5)

    def test_direction_from_other_field(self, reference_curve):
        label = EnrichedSpinLabel(delta=3, I=(1,), direction=fq(4), signs=(0,))
        with pytest.raises(ValueError, match="lies in F_5, not F_13"):
            chi_map(label, reference_curve, 13)

    def test_j2_outside(self, reference_curve):
        label = EnrichedSpinLabel(delta=3, I=(1, 2), j2=16)
        with pytest.raises(ValueError, match="outside J_2"):
            chi_map(label, reference_curve, 5)

    def test_wrong_curve(self, reference_curve):
        label = EnrichedSpinLabel(delta=2, I=(1,))
        with pytest.raises(ValueError, match="label has 2 nodes"):
            chi_map(label, reference_curve, 5)

    def test_inverse_round_trip(self, reference_curve):
        for I in reference_curve.proper_subsets():
            for label in enumerate_labels(reference_curve, I, 5, j2=3):
                assert chi_inverse(chi_map(label, reference_curve, 5), reference_curve, 5) == label

    def test_inverse_rejects_unnormalized(self, reference_curve):
        two = Fq2Elem.embed(2, 5)
        point = StratumPoint(xi_index=0, coordinates=(two, two, two), incidence=0)
        with pytest.raises(ValueError, match="not normalized"):
            chi_inverse(point, reference_curve, 5)

    def test_transported_action_scales_squares(self, reference_curve):
        label = EnrichedSpinLabel(delta=3, I=(1,), direction=fq(1), signs=(0,))
        point = chi_map(label, reference_curve, 5)
        g = LabelGroupElement(j2=1, signs=(0,), scale=fq(4))
        moved = transported_action(g, point, reference_curve, 5)
        assert moved.xi_index == 1
        x, y = point.coordinates[2], moved.coordinates[2]
        assert y * y == x * x * 4
        assert keys(moved) == [(0, 0), (1, 0), (2, 0)]
