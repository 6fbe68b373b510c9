"""Tests for pipeline/reporting.py: JSON and text rendering."""

import json

import pytest

from spinmoduli.core.types import RunConfig
from spinmoduli.pipeline.orchestrator import run_local, run_strata, run_supports, run_verify
from spinmoduli.pipeline.reporting import render, render_json, render_text


class TestRenderJson:
    """Tests for render_json()."""

    def test_sorted_single_line(self):
        out = render_json({"b": 1, "a": {"d": 2, "c": 3}})
        assert out == '{"a": {"c": 3, "d": 2}, "b": 1}\n'

    def test_unicode_kept(self):
        assert "✓" in render_json({"mark": "✓"})


class TestRenderText:
    """Tests for the per-command text renderers."""

    def test_supports(self, reference_spec_file):
        payload, _ = run_supports(RunConfig(command="supports", input_path=reference_spec_file))
        text = render_text("supports", payload)
        assert "genus 4, weighted total 256" in text
        assert "✓ degree-identity" in text
        assert text.endswith("PASS\n")

    def test_local(self):
        payload, _ = run_local(RunConfig(command="local", delta=2))
        text = render_text("local", payload)
        assert "delta 2: 1 quadrics, 0 cubics" in text
        assert "residuals: all zero" in text
        assert "Jacobian rank at origin 0, codimension 1" in text

    def test_strata_with_q(self):
        payload, _ = run_strata(RunConfig(command="strata", g1=1, g2=1, delta=3, q=5))
        text = render_text("strata", payload)
        assert "total over F_5: 1456" in text
        assert "note: Aut(C) = {id} is assumed" in text

    def test_verify(self):
        payload, _ = run_verify(RunConfig(command="verify", g1=1, g2=1, delta=2, q=5))
        text = render_text("verify", payload)
        assert "✓ I=[]: 128 labels, image 128" in text
        assert text.endswith("PASS\n")

    def test_failure_shows_witness(self):
        payload = {
            "checks": 1,
            "passed": False,
            "first_failure": {"name": "x", "passed": False, "detail": "d", "witness": {"k": 1}},
        }
        text = render_text("all", payload)
        assert "✗ x: d" in text
        assert 'witness: {"k": 1}' in text
        assert text.endswith("FAIL\n")


class TestRender:
    def test_formats_agree_on_verdict(self):
        payload, _ = run_strata(RunConfig(command="strata", g1=1, g2=1, delta=2))
        assert json.loads(render("strata", payload, "json"))["passed"] is True
        assert render("strata", payload, "text").endswith("PASS\n")

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="unknown output format"):
            render("strata", {}, "yaml")
