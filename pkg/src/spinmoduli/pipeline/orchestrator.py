"""
Verification orchestrator - runs every command of the spin CLI.

Each command builds a JSON-able payload and a verdict; run() renders the
payload and maps the verdict to the exit code contract:

    0  every verification passed
    1  a verification failed (the payload carries the first witness)
    2  input error (only the diagnostic is printed, on stderr)

verify_all() runs the acceptance stages in a fixed order and stops at the
first failing stage.
"""

import sys
from itertools import product
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

from ..core.constants import (
    CROSS_ORACLE_MAX_DELTA,
    CROSS_ORACLE_PRIME,
    DEFAULT_DEGREE_BOUND,
    DEFAULT_PRESENTATION_MAX_DELTA,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    MAX_SYMBOLIC_NODES,
    RANDOM_GRAPH_MAX_EDGES,
    RANDOM_GRAPH_MAX_VERTICES,
    REFERENCE_CURVE,
    REFERENCE_SINGULAR_COUNT,
    REFERENCE_STRATA_DIMENSIONS,
    REFERENCE_SUPPORTS,
    REFERENCE_WEIGHTED_TOTAL,
    SCHEMA_VERSION,
)
from ..core.types import CheckResult, RunConfig, VerificationReport, VerifyBounds
from ..enriched.curve import TwoComponentCurve
from ..enriched.labels import enriched_count
from ..enriched.strata import stratification_report
from ..enriched.verification import hyperplane_identity, line_limit_cross_check, verify_torsor_bijection
from ..graphs.dualgraph import two_component_graph
from ..graphs.io import load_curve
from ..graphs.sampling import random_dual_graphs
from ..local.charts import blowup_charts, check_chart_smoothness, quotient_consistency
from ..local.exceptional import check_deck_action
from ..local.ideal import codimension, dx_ideal, invariant_presentation_check, jacobian_rank_at_origin
from ..scalars.fields import ExtensionField, RationalField
from ..spin.enumeration import (
    check_degree_identity,
    check_parity_closure,
    singular_spin_count,
    spin_table,
)
from ..utils.logging import log, run_log
from .reporting import render

Payload = Dict[str, Any]


# ============================================================================
# Single commands
# ============================================================================

def run_supports(config: RunConfig) -> Tuple[Payload, bool]:
    """Spin table of the curve in config.input_path."""
    G = load_curve(config.input_path)
    identity = check_degree_identity(G)
    if not identity.passed:
        return {"schema": SCHEMA_VERSION, "checks": [identity.to_dict()], "passed": False}, False
    table = spin_table(G, jobs=config.jobs, debug=config.debug)
    closure = check_parity_closure(G)
    payload = table.to_dict()
    payload["checks"] = [identity.to_dict(), closure.to_dict()]
    payload["passed"] = closure.passed
    return payload, closure.passed


def run_local(config: RunConfig) -> Tuple[Payload, bool]:
    """Equations, charts, residuals and Jacobian rank of the local model."""
    delta = config.delta
    ideal = dx_ideal(delta)
    charts = blowup_charts(delta, jobs=config.jobs, debug=config.debug)
    rank = jacobian_rank_at_origin(ideal)
    codim = codimension(delta)
    consistency = quotient_consistency(delta)
    checks = [
        check_chart_smoothness(delta, jobs=config.jobs),
        CheckResult(
            name="singular-at-origin",
            passed=rank < codim,
            detail=f"Jacobian rank {rank} < codimension {codim}",
        ),
    ] + consistency.checks
    passed = all(c.passed for c in checks)
    payload = {
        "schema": SCHEMA_VERSION,
        "delta": delta,
        "generators": [str(g) for g in ideal.generators],
        "quadrics": ideal.quadric_count,
        "cubics": ideal.cubic_count,
        "charts": [chart.to_dict() for chart in charts],
        "jacobian_rank": rank,
        "codimension": codim,
        "checks": [c.to_dict() for c in checks],
        "passed": passed,
    }
    return payload, passed


def run_strata(config: RunConfig) -> Tuple[Payload, bool]:
    """Stratification report, with F_q label counts when q is given."""
    curve = TwoComponentCurve(config.g1, config.g2, config.delta)
    payload = stratification_report(curve, q=config.q, jobs=config.jobs).to_dict()
    payload["passed"] = True
    return payload, True


def run_verify(config: RunConfig) -> Tuple[Payload, bool]:
    """Torsor bijection of every stratum over F_q."""
    curve = TwoComponentCurve(config.g1, config.g2, config.delta)
    q = config.q
    reports = [
        verify_torsor_bijection(curve, I, q, jobs=config.jobs, debug=config.debug)
        for I in curve.proper_subsets()
    ]
    counts = enriched_count(curve, q)
    strata = []
    for I, report in zip(curve.proper_subsets(), reports):
        image = next((c.data.get("image") for c in report.checks if c.name == "chi-image"), None)
        strata.append({
            "I": list(I),
            "labels": counts.strata[I],
            "image": image,
            "passed": report.passed,
        })
    passed = all(r.passed for r in reports)
    payload = {
        "schema": SCHEMA_VERSION,
        "curve": {"g1": curve.g1, "g2": curve.g2, "delta": curve.delta},
        "q": q,
        "strata": strata,
        "total_labels": counts.total,
        "reports": [r.to_dict() for r in reports],
        "passed": passed,
    }
    return payload, passed


# ============================================================================
# Acceptance run
# ============================================================================

def _stage_two_component(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="two-component-degree-identity")
    genera = range(1, bounds.max_genus + 1)
    for g1, g2, delta in product(genera, genera, range(1, bounds.max_delta + 1)):
        check = check_degree_identity(two_component_graph(g1, g2, delta))
        check.name = f"degree-identity g1={g1} g2={g2} delta={delta}"
        report.add(check)
        if not check.passed:
            break
    return report


def _stage_random_graphs(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="random-graph-degree-identity")
    graphs = random_dual_graphs(
        bounds.random_graphs,
        bounds.seed,
        max_vertices=RANDOM_GRAPH_MAX_VERTICES,
        max_edges=RANDOM_GRAPH_MAX_EDGES,
        max_genus=bounds.max_genus,
    )
    for n, G in enumerate(graphs):
        for check in (check_degree_identity(G), check_parity_closure(G)):
            check.name = f"{check.name} graph={n}"
            report.add(check)
            if not check.passed:
                return report
    return report


def _stage_reference_curve(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="reference-curve")
    g1, g2, delta = REFERENCE_CURVE
    G = two_component_graph(g1, g2, delta)
    try:
        table = spin_table(G, jobs=jobs, debug=debug)
    except RuntimeError as exc:
        report.add(CheckResult(name="reference-spin-table", passed=False, detail=str(exc)))
        return report
    grouped: Dict[int, List[Tuple[int, int]]] = {}
    for row in table.supports:
        grouped.setdefault(len(row.delta), []).append((row.root_count, row.multiplicity))
    observed = {
        size: (len(rows), rows[0][0], rows[0][1])
        for size, rows in grouped.items()
        if len(set(rows)) == 1
    }
    report.add(CheckResult(
        name="reference-spin-table",
        passed=observed == REFERENCE_SUPPORTS and table.weighted_total == REFERENCE_WEIGHTED_TOTAL,
        detail=f"weighted total {table.weighted_total}",
        witness=None if observed == REFERENCE_SUPPORTS else {
            str(size): list(rows) for size, rows in sorted(grouped.items())
        },
    ))
    strata = stratification_report(TwoComponentCurve(g1, g2, delta), jobs=jobs)
    dims = tuple(strata.dimensions)
    report.add(CheckResult(
        name="reference-strata",
        passed=dims == REFERENCE_STRATA_DIMENSIONS,
        detail=f"{len(dims)} strata of dimensions {list(dims)}",
        witness=None if dims == REFERENCE_STRATA_DIMENSIONS else {"dimensions": list(dims)},
    ))
    singular = singular_spin_count(G)
    report.add(CheckResult(
        name="reference-singular-count",
        passed=singular == REFERENCE_SINGULAR_COUNT == strata.singular_count,
        detail=f"{singular} singular spin curves",
    ))
    return report


def _symbolic_range(bounds: VerifyBounds, cap: int) -> range:
    return range(2, min(bounds.max_delta, cap) + 1)


def _stage_charts(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="chart-smoothness")
    deltas = _symbolic_range(bounds, MAX_SYMBOLIC_NODES)
    if not deltas:
        report.notes.append("delta=1: D_X is smooth, no charts to check")
    for delta in deltas:
        report.add(check_chart_smoothness(delta, jobs=jobs))
        rank = jacobian_rank_at_origin(dx_ideal(delta))
        report.add(CheckResult(
            name=f"jacobian-rank delta={delta}",
            passed=rank == 0 and codimension(delta) > 0,
            detail=f"rank {rank}, codimension {codimension(delta)}",
            witness=None if rank == 0 else {"delta": delta, "rank": rank},
        ))
        report.extend(quotient_consistency(delta))
        if not report.passed:
            break
    return report


def _stage_presentation(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="invariant-presentation")
    for delta in _symbolic_range(bounds, DEFAULT_PRESENTATION_MAX_DELTA):
        report.extend(invariant_presentation_check(delta, DEFAULT_DEGREE_BOUND))
        if not report.passed:
            break
    return report


def _stage_torsor(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="torsor-bijection")
    top = min(bounds.torsor_max_delta, bounds.max_delta)
    if top < 2:
        report.notes.append("delta=1: the only stratum is a pure J_2 torsor; torsor sections are trivial")
    for delta in range(1, top + 1):
        curve = TwoComponentCurve(1, 1, delta)
        for q in bounds.primes:
            for I in curve.proper_subsets():
                sub = verify_torsor_bijection(curve, I, q, jobs=jobs, debug=debug)
                for check in sub.checks:
                    check.name = f"{check.name} delta={delta} I={list(I)} q={q}"
                report.extend(sub)
                if not report.passed:
                    return report
    return report


def _stage_hyperplanes(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="hyperplane-identity")
    for delta, q in product(range(1, bounds.max_delta + 1), bounds.primes):
        report.add(hyperplane_identity(delta, q))
        if not report.passed:
            break
    return report


def _stage_cross_oracle(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="line-limit-cross-check")
    for delta in range(1, min(CROSS_ORACLE_MAX_DELTA, bounds.max_delta) + 1):
        report.extend(line_limit_cross_check(TwoComponentCurve(1, 1, delta), CROSS_ORACLE_PRIME))
        if not report.passed:
            break
    return report


def _stage_deck_group(bounds: VerifyBounds, jobs: int, debug: bool = False) -> VerificationReport:
    report = VerificationReport(title="deck-group")
    for delta in _symbolic_range(bounds, DEFAULT_PRESENTATION_MAX_DELTA):
        report.add(check_deck_action([i * i for i in range(1, delta + 1)], RationalField()))
        for q in bounds.primes:
            report.add(check_deck_action(list(range(1, delta + 1)), ExtensionField(q)))
        if not report.passed:
            break
    return report


STAGES: List[Tuple[str, Callable[..., VerificationReport]]] = [
    ("two-component degree identities", _stage_two_component),
    ("random-graph degree identities", _stage_random_graphs),
    ("reference curve", _stage_reference_curve),
    ("chart smoothness", _stage_charts),
    ("invariant presentation", _stage_presentation),
    ("torsor bijections", _stage_torsor),
    ("hyperplane identity", _stage_hyperplanes),
    ("line-limit cross-oracle", _stage_cross_oracle),
    ("deck group", _stage_deck_group),
]


def verify_all(
    bounds: Optional[VerifyBounds] = None,
    jobs: int = 1,
    debug: bool = False,
    log_path: Optional[str] = None,
) -> VerificationReport:
    """
    Run every acceptance stage and stop at the first failure.

    Args:
        bounds: Bounds of the run (defaults: delta <= 6, genera <= 3, q in {5, 13})
        jobs: Worker count for the parallel sub-tasks
        debug: Enable debug logging
        log_path: Optional log file, closed when the run ends

    Returns:
        Aggregate VerificationReport; .first_failure holds the witness
    """
    bounds = (bounds or VerifyBounds()).validate()
    header = [
        f"Bounds: max_delta={bounds.max_delta} max_genus={bounds.max_genus} "
        f"torsor_max_delta={bounds.torsor_max_delta} primes={list(bounds.primes)} "
        f"random_graphs={bounds.random_graphs} seed={bounds.seed}"
    ]
    aggregate = VerificationReport(title="verify-all")
    with run_log(log_path, header) as log_file:
        verbose = debug or log_file is not None
        for number, (name, stage) in enumerate(STAGES, start=1):
            if verbose:
                log(f"[VERIFY] stage {number}/{len(STAGES)}: {name}")
            result = stage(bounds, jobs, debug)
            aggregate.extend(result)
            if verbose:
                status = "✓ passed" if result.passed else "✗ FAILED"
                log(f"[VERIFY]   {status} ({len(result.checks)} checks)")
            if not result.passed:
                break
    return aggregate


def run_all(config: RunConfig) -> Tuple[Payload, bool]:
    bounds = config.bounds
    report = verify_all(
        bounds,
        jobs=config.jobs,
        debug=config.debug,
        log_path=str(config.log_file) if config.log_file else None,
    )
    failure = report.first_failure
    payload = {
        "schema": SCHEMA_VERSION,
        "passed": report.passed,
        "checks": len(report.checks),
        "notes": list(report.notes),
    }
    if failure is not None:
        payload["first_failure"] = failure.to_dict()
    return payload, report.passed


COMMAND_RUNNERS: Dict[str, Callable[[RunConfig], Tuple[Payload, bool]]] = {
    "supports": run_supports,
    "local": run_local,
    "strata": run_strata,
    "verify": run_verify,
    "all": run_all,
}


def run(config: RunConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Execute one command and write its report.

    Args:
        config: Run configuration
        out: Report stream (default stdout)
        err: Diagnostic stream (default stderr)

    Returns:
        Exit code: 0 pass, 1 verification failure, 2 input error
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config.validate()
        payload, passed = COMMAND_RUNNERS[config.command](config)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT_ERROR
    out.write(render(config.command, payload, config.output_format))
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILED
