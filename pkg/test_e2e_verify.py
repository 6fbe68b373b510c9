#!/usr/bin/env python3
"""
End-to-end verification script for spin-moduli.

This script runs the whole pipeline on the reference curve (two elliptic
components meeting in three nodes) and then the acceptance suite:
1. Enumerate spin supports from a curve spec file
2. Build the local model and its blow-up charts
3. Stratify the enriched spin curves and count them over F_5
4. Exhaustively verify the torsor bijections over F_5
5. Run every acceptance stage with the default bounds
"""

import json
import os
import sys
import tempfile
import time
from pathlib import Path


REFERENCE_SPEC = {
    "vertices": [{"id": "C1", "genus": 1}, {"id": "C2", "genus": 1}],
    "edges": [["C1", "C2"], ["C1", "C2"], ["C1", "C2"]],
}


# ============================================================================
# Step 1: Spin supports
# ============================================================================
def test_supports():
    """Enumerate supports of the reference curve from a spec file."""
    print("\n" + "=" * 70)
    print("STEP 1: Spin supports of the reference curve")
    print("=" * 70)

    from spinmoduli import supports

    tmpdir = tempfile.mkdtemp(prefix="spin_e2e_")
    path = Path(tmpdir) / "reference.json"
    path.write_text(json.dumps(REFERENCE_SPEC), encoding="utf-8")
    print(f"Curve spec: {path}")

    table = supports(path)
    for row in table.supports:
        print(f"  delta={list(row.delta)} roots={row.root_count} mult={row.multiplicity}")
    print(f"Weighted total: {table.weighted_total} (2^{2 * table.genus})")

    if table.weighted_total != 256:
        print("FAILED: weighted total differs from 256")
        return False
    print("SUCCESS: degree identity holds")
    return True


# ============================================================================
# Step 2: Local model
# ============================================================================
def test_local_model():
    """Blow up the local model at a singular spin curve with three nodes."""
    print("\n" + "=" * 70)
    print("STEP 2: Local model and blow-up charts (delta=3)")
    print("=" * 70)

    from spinmoduli import local
    from spinmoduli.local import codimension, dx_ideal, jacobian_rank_at_origin

    ideal = dx_ideal(3)
    print(f"Equations: {ideal.quadric_count} quadrics, {ideal.cubic_count} cubics")
    rank = jacobian_rank_at_origin(ideal)
    print(f"Jacobian rank at origin: {rank}, codimension: {codimension(3)}")

    charts = local(3)
    for chart in charts:
        nonzero = [r for r in chart.residuals if r]
        print(f"  U_{chart.s}: {len(chart.coordinates)} coordinates, {len(nonzero)} nonzero residuals")
        if nonzero:
            print("FAILED: a chart is not affine space")
            return False

    print("SUCCESS: every chart is smooth")
    return rank < codimension(3)


# ============================================================================
# Step 3: Stratification
# ============================================================================
def test_strata():
    """Stratify the enriched spin curves and count labels over F_5."""
    print("\n" + "=" * 70)
    print("STEP 3: Stratification over F_5")
    print("=" * 70)

    from spinmoduli import strata

    report = strata(1, 1, 3, q=5)
    for row in report.rows:
        print(f"  {row.support:<10} dim={row.dimension} {row.torsor:<24} labels={row.label_count}")
    total = report.to_dict()["total_labels"]
    print(f"Singular spin curves: {report.singular_count}, total labels: {total}")

    return report.dimensions == [2, 1, 1, 1, 0, 0, 0] and total == 1456


# ============================================================================
# Step 4: Torsor bijections
# ============================================================================
def test_torsor_bijections():
    """Exhaustively verify chi and the label group action on every stratum."""
    print("\n" + "=" * 70)
    print("STEP 4: Torsor bijections over F_5")
    print("=" * 70)

    from spinmoduli import verify

    start = time.time()
    report = verify(1, 1, 3, 5, jobs=4)
    print(f"{len(report.checks)} checks in {time.time() - start:.1f}s")
    if not report.passed:
        failure = report.first_failure
        print(f"FAILED: {failure.name}: {failure.detail}")
        print(f"  witness: {failure.witness}")
        return False
    for note in report.notes:
        print(f"  note: {note}")
    print("SUCCESS: every stratum is a torsor")
    return True


# ============================================================================
# Step 5: Acceptance suite
# ============================================================================
def test_acceptance_suite():
    """Run every acceptance stage with the default bounds."""
    print("\n" + "=" * 70)
    print("STEP 5: Acceptance suite (spin all)")
    print("=" * 70)

    from spinmoduli import verify_all

    log_path = Path(tempfile.mkdtemp(prefix="spin_e2e_")) / "verify.log"
    start = time.time()
    report = verify_all(jobs=os.cpu_count() or 1, log_path=str(log_path))
    print(f"{len(report.checks)} checks in {time.time() - start:.1f}s, log: {log_path}")

    if not report.passed:
        failure = report.first_failure
        print(f"FAILED: {failure.name}: {failure.detail}")
        return False
    print("SUCCESS: all stages passed")
    return True


def main():
    print("=" * 70)
    print("spin-moduli End-to-End Verification")
    print("=" * 70)
    print(f"Python: {sys.version}")
    print(f"Working dir: {os.getcwd()}")

    all_results = {}
    all_results["supports"] = "PASS" if test_supports() else "FAIL"
    all_results["local_model"] = "PASS" if test_local_model() else "FAIL"
    all_results["strata"] = "PASS" if test_strata() else "FAIL"
    all_results["torsor_bijections"] = "PASS" if test_torsor_bijections() else "FAIL"

    if "--quick" in sys.argv:
        all_results["acceptance_suite"] = "SKIP (--quick)"
    else:
        all_results["acceptance_suite"] = "PASS" if test_acceptance_suite() else "FAIL"

    _print_summary(all_results)

    failed = [k for k, v in all_results.items() if v == "FAIL"]
    return 1 if failed else 0


def _print_summary(results):
    print("\n" + "=" * 70)
    print("VERIFICATION SUMMARY")
    print("=" * 70)
    for name, status in results.items():
        icon = "✓" if status == "PASS" else ("⊘" if "SKIP" in str(status) else "✗")
        print(f"  {icon} {name}: {status}")

    passed = sum(1 for v in results.values() if v == "PASS")
    skipped = sum(1 for v in results.values() if "SKIP" in str(v))
    failed = len(results) - passed - skipped
    print(f"\n  Total: {passed} passed, {skipped} skipped, {failed} failed")


if __name__ == "__main__":
    sys.exit(main())
