"""Minimal public API wrappers for spinmoduli."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .core.types import VerificationReport, VerifyBounds
from .enriched.curve import TwoComponentCurve
from .enriched.strata import StratificationReport, stratification_report
from .enriched.verification import verify_torsor_bijection
from .graphs.io import load_curve
from .local.charts import Chart, blowup_charts
from .spin.enumeration import SpinTable, spin_table


def supports(path: Union[str, Path], jobs: int = 1, debug: bool = False) -> SpinTable:
    """Spin table of the curve spec at path."""
    return spin_table(load_curve(path), jobs=jobs, debug=debug)


def local(delta: int, jobs: int = 1, debug: bool = False) -> list[Chart]:
    """Blow-up charts of the local model at a singular spin curve with delta nodes."""
    return blowup_charts(delta, jobs=jobs, debug=debug)


def strata(g1: int, g2: int, delta: int, q: Optional[int] = None, jobs: int = 1) -> StratificationReport:
    """Stratification of the enriched spin curves of a two-component curve."""
    return stratification_report(TwoComponentCurve(g1, g2, delta), q=q, jobs=jobs)


def verify(
    g1: int,
    g2: int,
    delta: int,
    q: int,
    jobs: int = 1,
    debug: bool = False,
) -> VerificationReport:
    """Torsor bijections of every stratum, merged into one report."""
    curve = TwoComponentCurve(g1, g2, delta)
    merged = VerificationReport(title=f"verify g1={g1} g2={g2} delta={delta} q={q}")
    for I in curve.proper_subsets():
        merged.extend(verify_torsor_bijection(curve, I, q, jobs=jobs, debug=debug))
    return merged


def verify_all(
    bounds: Optional[VerifyBounds] = None,
    jobs: int = 1,
    debug: bool = False,
    log_path: Optional[str] = None,
) -> VerificationReport:
    """Thin wrapper around the acceptance run."""
    from .pipeline.orchestrator import verify_all as run_verify_all

    return run_verify_all(bounds, jobs=jobs, debug=debug, log_path=log_path)
