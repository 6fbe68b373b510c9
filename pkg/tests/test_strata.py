"""Tests for enriched/strata.py: Stratification reports."""

import json
from pathlib import Path

import pytest

from spinmoduli.core.constants import (
    AUT_HYPOTHESIS_NOTE,
    MAX_STRATA_NODES,
    REFERENCE_SINGULAR_COUNT,
    REFERENCE_STRATA_DIMENSIONS,
    SCHEMA_VERSION,
)
from spinmoduli.enriched.curve import TwoComponentCurve
from spinmoduli.enriched.strata import stratification_report

DATA_DIR = Path(__file__).parent / "data"


class TestStratificationReport:
    """Tests for stratification_report()."""

    def test_reference_dimensions(self, reference_curve):
        report = stratification_report(reference_curve)
        assert tuple(report.dimensions) == REFERENCE_STRATA_DIMENSIONS
        assert report.singular_count == REFERENCE_SINGULAR_COUNT

    def test_groups(self, reference_curve):
        groups = stratification_report(reference_curve).groups()
        assert {size: len(rows) for size, rows in groups.items()} == {0: 1, 1: 3, 2: 3}

    def test_rows(self, reference_curve):
        rows = stratification_report(reference_curve).rows
        assert rows[0].support == "C"
        assert rows[0].torsor == "J2 x (Z/2)^2 x (C*)^2"
        assert rows[1].support == "X_{1}"
        assert rows[1].contained_in == (1,)
        assert rows[1].avoids == (2, 3)
        assert rows[-1].torsor == "J2"
        assert all(row.j2_order == 16 for row in rows)
        assert all(row.sign_exponent == row.dimension for row in rows)

    def test_to_dict_without_q(self, reference_curve):
        out = stratification_report(reference_curve).to_dict()
        assert out["schema"] == SCHEMA_VERSION
        assert out["genus"] == 4
        assert out["singular_spin_curves"] == 16
        assert out["notes"] == [AUT_HYPOTHESIS_NOTE]
        assert "q" not in out
        assert "label_count" not in out["strata"][0]

    def test_label_counts(self, reference_curve):
        out = stratification_report(reference_curve, q=5).to_dict()
        assert out["q"] == 5
        assert out["total_labels"] == 1456
        assert [row["label_count"] for row in out["strata"]] == [1024, 128, 128, 128, 16, 16, 16]

    def test_single_node(self):
        report = stratification_report(TwoComponentCurve(2, 1, 1))
        assert report.dimensions == [0]
        assert report.singular_count == 64

    def test_composite_q(self, reference_curve):
        with pytest.raises(ValueError, match="composite"):
            stratification_report(reference_curve, q=9)

    def test_delta_above_cap(self):
        with pytest.raises(ValueError, match="out of bounds"):
            stratification_report(TwoComponentCurve(1, 1, MAX_STRATA_NODES + 1))

    def test_jobs_keep_row_order(self, reference_curve):
        single = stratification_report(reference_curve, q=5)
        parallel = stratification_report(reference_curve, q=5, jobs=3)
        assert parallel.to_dict() == single.to_dict()


class TestGoldenReport:
    """The reference curve report matches tests/data/reference_strata.json exactly."""

    @pytest.fixture
    def golden(self):
        return json.loads((DATA_DIR / "reference_strata.json").read_text(encoding="utf-8"))

    def test_without_q(self, reference_curve, golden):
        assert stratification_report(reference_curve).to_dict() == golden["plain"]

    def test_with_q(self, reference_curve, golden):
        assert stratification_report(reference_curve, q=5).to_dict() == golden["q5"]
