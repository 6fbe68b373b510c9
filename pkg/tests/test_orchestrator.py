"""Tests for pipeline/orchestrator.py: Command runners and the acceptance run."""

import io
import json

import pytest

from spinmoduli.core.constants import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED
from spinmoduli.core.types import RunConfig, VerifyBounds
from spinmoduli.local.ideal import dx_ideal
from spinmoduli.pipeline.orchestrator import (
    COMMAND_RUNNERS,
    STAGES,
    run,
    run_local,
    run_supports,
    verify_all,
)
from spinmoduli.pipeline.workers import run_parallel
from spinmoduli.spin import enumeration
from spinmoduli.utils.logging import get_log_file

SMALL = VerifyBounds(max_delta=2, max_genus=1, torsor_max_delta=2, random_graphs=3)


class TestRunParallel:
    """Tests for workers.run_parallel()."""

    def test_order_preserved(self):
        assert run_parallel(lambda x: x * x, range(20), jobs=4) == [x * x for x in range(20)]

    def test_inline(self):
        assert run_parallel(str, [1, 2], jobs=1) == ["1", "2"]

    def test_empty(self):
        assert run_parallel(str, [], jobs=3) == []


class TestRun:
    """Tests for run() and the exit code contract."""

    def setup_method(self):
        self.out = io.StringIO()
        self.err = io.StringIO()

    def test_pass(self, reference_spec_file):
        code = run(RunConfig(command="supports", input_path=reference_spec_file), self.out, self.err)
        assert code == EXIT_OK
        assert json.loads(self.out.getvalue())["weighted_total"] == 256
        assert self.err.getvalue() == ""

    def test_input_error_prints_only_diagnostic(self):
        code = run(RunConfig(command="verify", g1=1, g2=1, delta=2, q=4), self.out, self.err)
        assert code == EXIT_INPUT_ERROR
        assert self.out.getvalue() == ""
        assert self.err.getvalue().startswith("error: q must be odd")

    def test_verification_failure(self, reference_spec_file, monkeypatch):
        monkeypatch.setattr(enumeration, "multiplicity", lambda G, s: 1)
        code = run(RunConfig(command="supports", input_path=reference_spec_file), self.out, self.err)
        assert code == EXIT_VERIFICATION_FAILED
        payload = json.loads(self.out.getvalue())
        assert payload["passed"] is False
        assert payload["checks"][0]["witness"]["weighted_total"] == 112

    def test_one_line_json(self):
        run(RunConfig(command="strata", g1=1, g2=2, delta=2), self.out, self.err)
        assert self.out.getvalue().count("\n") == 1

    def test_runners_cover_commands(self):
        assert set(COMMAND_RUNNERS) == {"supports", "local", "strata", "verify", "all"}


class TestRunners:
    """Tests for individual command payloads."""

    def test_supports_checks(self, reference_spec_file):
        payload, passed = run_supports(RunConfig(command="supports", input_path=reference_spec_file))
        assert passed
        assert [c["name"] for c in payload["checks"]] == ["degree-identity", "parity-closure"]

    def test_local(self):
        payload, passed = run_local(RunConfig(command="local", delta=2))
        assert passed
        assert payload["generators"] == [str(g) for g in dx_ideal(2).generators]
        names = [c["name"] for c in payload["checks"]]
        assert names == [
            "chart-smoothness",
            "singular-at-origin",
            "quotient-consistency-U1",
            "quotient-consistency-U2",
        ]


class TestVerifyAll:
    """Tests for verify_all()."""

    def teardown_method(self):
        assert get_log_file() is None

    def test_stage_order(self):
        assert [name for name, _ in STAGES] == [
            "two-component degree identities",
            "random-graph degree identities",
            "reference curve",
            "chart smoothness",
            "invariant presentation",
            "torsor bijections",
            "hyperplane identity",
            "line-limit cross-oracle",
            "deck group",
        ]

    def test_small_bounds_pass(self):
        report = verify_all(SMALL)
        assert report.passed
        assert report.first_failure is None

    def test_delta_one_notes(self):
        report = verify_all(VerifyBounds(max_delta=1, max_genus=1, torsor_max_delta=1, random_graphs=0))
        assert report.passed
        assert any("no charts to check" in note for note in report.notes)
        assert any("pure J_2 torsor" in note for note in report.notes)

    def test_stops_at_first_failure(self, monkeypatch):
        monkeypatch.setattr(enumeration, "multiplicity", lambda G, s: 2)
        report = verify_all(SMALL)
        assert not report.passed
        assert report.first_failure.name == "degree-identity g1=1 g2=1 delta=1"
        assert len(report.checks) == 1

    def test_log_file_closed(self, tmp_path):
        log_path = tmp_path / "run.log"
        verify_all(SMALL, log_path=str(log_path))
        text = log_path.read_text(encoding="utf-8")
        assert "Bounds: max_delta=2 max_genus=1" in text
        assert "✓ passed" in text

    def test_debug_goes_to_stderr(self, capsys):
        verify_all(SMALL, debug=True)
        captured = capsys.readouterr()
        assert "[VERIFY] stage 9/9: deck group" in captured.err
        assert captured.out == ""

    def test_jobs_do_not_change_report(self):
        assert verify_all(SMALL, jobs=4).to_dict() == verify_all(SMALL).to_dict()

    def test_invalid_bounds(self):
        with pytest.raises(ValueError):
            verify_all(VerifyBounds(primes=(4,)))

    @pytest.mark.slow
    def test_default_bounds(self):
        assert verify_all(jobs=4).passed
