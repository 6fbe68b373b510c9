from spinmoduli import local, strata, supports, verify, verify_all
from spinmoduli.core.types import VerifyBounds
from conftest import REFERENCE_CURVE_SPEC, write_spec


def test_supports_returns_table(tmp_path) -> None:
    table = supports(write_spec(tmp_path, REFERENCE_CURVE_SPEC))
    assert table.genus == 4
    assert table.weighted_total == 256
    assert len(table.supports) == 4


def test_local_returns_charts() -> None:
    charts = local(3)
    assert [c.s for c in charts] == [1, 2, 3]


def test_strata_report() -> None:
    report = strata(1, 1, 3, q=5)
    assert report.dimensions == [2, 1, 1, 1, 0, 0, 0]
    assert report.to_dict()["total_labels"] == 1456


def test_verify_merges_strata() -> None:
    report = verify(1, 1, 2, 5)
    assert report.passed
    assert len(report.checks) == 3 * 5


def test_verify_all_wrapper() -> None:
    report = verify_all(VerifyBounds(max_delta=1, max_genus=1, torsor_max_delta=1, random_graphs=0))
    assert report.passed
