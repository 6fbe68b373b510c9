"""
Exhaustive finite-field verification of the enriched spin stratification.

Every statement about strata over C becomes a finite statement over F_q:
chi is a bijection from the labels of a stratum onto the F_q-direction
points of the matching hyperplane stratum, and the label group acts freely
and transitively.
"""

from collections import Counter
from itertools import combinations, product
from math import comb
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..core.constants import (
    AUT_HYPOTHESIS_NOTE,
    GEOMETRIC_ACTION_NOTE,
    HYPERPLANE_EXHAUSTIVE_POINTS,
    MAX_TORSOR_NODES,
)
from ..core.types import CheckResult, VerificationReport, validate_prime
from ..local.exceptional import incidence_mask, line_limit, projective_points, projective_size, stratum_size
from ..pipeline.workers import run_parallel
from ..scalars.fields import ExtensionField
from ..scalars.finite_field import Fq2Elem, extension_elements, nonzero_elements
from ..utils.logging import log
from .chi import StratumPoint, chi_map, transported_action
from .curve import NodeSet, TwoComponentCurve
from .labels import (
    EnrichedSpinLabel,
    LabelGroupElement,
    act,
    enumerate_labels,
    label_group,
    label_group_generators,
)


def base_square_roots(q: int) -> List[Fq2Elem]:
    """Elements of F_{q^2} whose square is a nonzero element of F_q: 2(q-1) of them."""
    return [x for x in extension_elements(q) if x and (x * x).in_base_field()]


def predicted_points(curve: TwoComponentCurve, I: NodeSet, q: int) -> Iterator[StratumPoint]:
    """
    F_q-direction points of the stratum on exactly the hyperplanes in I, for every xi.

    Built without chi: x_{n_0} = 1 and x_{n_t}^2 in F_q^* for the later nodes.
    """
    subset = curve.check_subset(I)
    rest = curve.complement(subset)
    zero, one = Fq2Elem.embed(0, q), Fq2Elem.embed(1, q)
    roots = base_square_roots(q)
    for xi in range(curve.j2_order):
        for tail in product(roots, repeat=len(rest) - 1):
            coords = [zero] * curve.delta
            coords[rest[0] - 1] = one
            for node, x in zip(rest[1:], tail):
                coords[node - 1] = x
            point = tuple(coords)
            yield StratumPoint(xi_index=xi, coordinates=point, incidence=incidence_mask(point))


def _point_key(point: StratumPoint) -> Tuple:
    return (point.xi_index, tuple(x.key for x in point.coordinates))


def _transport_rule_holds(
    g: LabelGroupElement, point: StratumPoint, moved: StratumPoint, rest: NodeSet
) -> bool:
    """
    xi moves by j2, zero coordinates and x_{n_0} stay, x_{n_t}^2 scales by
    the group factor, and a pure sign flip negates x_{n_t}.
    """
    if moved.xi_index != point.xi_index ^ g.j2 or moved.incidence != point.incidence:
        return False
    for idx, node in enumerate(rest):
        x, y = point.coordinates[node - 1], moved.coordinates[node - 1]
        if idx == 0:
            if y != x:
                return False
            continue
        lam = g.scale[idx - 1]
        if y * y != x * x * lam:
            return False
        if int(lam) == 1 and y != (-x if g.signs[idx - 1] else x):
            return False
    return True


def verify_torsor_bijection(
    curve: TwoComponentCurve,
    I: NodeSet,
    q: int,
    jobs: int = 1,
    debug: bool = False,
) -> VerificationReport:
    """
    Exhaustively check the torsor description of stratum I over F_q.

    (a) chi is injective on the labels of I;
    (b) its image is exactly the set of F_q-direction points of incidence I;
    (c) every xi receives 2^k (q-1)^k points, k = delta - |I| - 1;
    (d) the label group acts freely and transitively, and chi transports
        the action to the image.

    Args:
        curve: Two-component curve with delta <= MAX_TORSOR_NODES
        I: Proper node subset, 1-based
        q: Odd prime
        jobs: Worker count; labels are partitioned by j2
        debug: Enable debug logging

    Raises:
        ValueError: For delta above the cap, a bad q or an improper I
    """
    if curve.delta > MAX_TORSOR_NODES:
        raise ValueError(f"delta={curve.delta} exceeds the torsor enumeration cap {MAX_TORSOR_NODES}")
    validate_prime(q)
    subset = curve.check_subset(I)
    k = curve.delta - len(subset) - 1
    rest = curve.complement(subset)
    report = VerificationReport(
        title=f"torsor-bijection I={list(subset)} q={q}",
        notes=[AUT_HYPOTHESIS_NOTE, GEOMETRIC_ACTION_NOTE],
    )

    def chi_partition(j2: int) -> List[Tuple[EnrichedSpinLabel, StratumPoint]]:
        return [(label, chi_map(label, curve, q)) for label in enumerate_labels(curve, subset, q, j2=j2)]

    partitions = run_parallel(chi_partition, range(curve.j2_order), jobs)
    pairs = [pair for part in partitions for pair in part]
    labels = [label for label, _ in pairs]
    if debug:
        log(f"[TORSOR] I={list(subset)} q={q}: {len(labels)} labels in {len(partitions)} partitions")

    # (a)
    seen: Dict[StratumPoint, EnrichedSpinLabel] = {}
    collision: Optional[Dict[str, Any]] = None
    for label, point in pairs:
        if point in seen:
            collision = {"first": seen[point].to_dict(), "second": label.to_dict(), "point": point.to_dict()}
            break
        seen[point] = label
    report.add(CheckResult(
        name="chi-injective",
        passed=collision is None,
        detail=f"{len(labels)} labels, {len(seen)} distinct images",
        witness=collision,
        data={"labels": len(labels)},
    ))

    # (b)
    image = set(seen)
    predicted = set(predicted_points(curve, subset, q))
    missing = sorted(predicted - image, key=_point_key)
    extra = sorted(image - predicted, key=_point_key)
    report.add(CheckResult(
        name="chi-image",
        passed=not missing and not extra,
        detail=f"image {len(image)} points, predicted {len(predicted)}",
        witness=None if not missing and not extra else {
            "missing": missing[0].to_dict() if missing else None,
            "extra": extra[0].to_dict() if extra else None,
        },
        data={"image": len(image), "predicted": len(predicted)},
    ))

    # (c)
    expected = 2 ** k * (q - 1) ** k
    per_xi = Counter(point.xi_index for point in image)
    wrong = [xi for xi in range(curve.j2_order) if per_xi.get(xi, 0) != expected]
    report.add(CheckResult(
        name="per-xi-cardinality",
        passed=not wrong,
        detail=f"{curve.j2_order} copies of P^{curve.delta - 1}, {expected} points each",
        witness={"xi": wrong[0], "count": per_xi.get(wrong[0], 0), "expected": expected} if wrong else None,
        data={"per_xi": expected},
    ))

    # (d) orbit of one label; the group is abelian, so freeness at one point suffices.
    # Free and transitive together mean |orbit| = |G| = |labels|.
    group_order = curve.j2_order * 2 ** k * (q - 1) ** k
    label_set = set(labels)
    base = labels[0]
    orbit: set = set()
    stray = None
    size = 0
    for g in label_group(curve, k, q):
        size += 1
        moved = act(g, base)
        if moved not in label_set:
            stray = moved
            break
        orbit.add(moved)
    free = stray is None and len(orbit) == size == group_order
    transitive = stray is None and len(orbit) == len(label_set)
    report.add(CheckResult(
        name="label-action-free-transitive",
        passed=free and transitive,
        detail=f"group of order {group_order} acting on {len(label_set)} labels",
        witness=None if free and transitive else {
            "free": free,
            "transitive": transitive,
            "orbit": len(orbit),
            "outside": stray.to_dict() if stray is not None else None,
        },
        data={"group_order": group_order},
    ))

    transport_witness = None
    checked = 0
    generators = label_group_generators(curve, k, q)
    for label, point in partitions[0]:
        if any(label.signs):
            continue
        for g in generators:
            checked += 1
            moved = transported_action(g, point, curve, q)
            if moved != chi_map(act(g, label), curve, q) or not _transport_rule_holds(g, point, moved, rest):
                transport_witness = {"label": label.to_dict(), "moved": moved.to_dict()}
                break
        if transport_witness:
            break
    report.add(CheckResult(
        name="transported-action",
        passed=transport_witness is None,
        detail=f"{checked} generator moves on the slice j2 = 0, signs = 0",
        witness=transport_witness,
    ))
    return report


def hyperplane_identity(
    delta: int, q: int, exhaustive_limit: int = HYPERPLANE_EXHAUSTIVE_POINTS
) -> CheckResult:
    """
    sum over proper I of (q-1)^{delta-|I|-1} equals |P^{delta-1}(F_q)|.

    Below exhaustive_limit points, every stratum of P^{delta-1}(F_q) is also
    counted point by point.
    """
    validate_prime(q)
    total = sum(comb(delta, h) * (q - 1) ** (delta - h - 1) for h in range(delta))
    size = projective_size(delta, q)
    witness = None if total == size else {"sum": total, "points": size}
    exhaustive = size <= exhaustive_limit
    if exhaustive and witness is None:
        strata = projective_points(delta, q)
        for h in range(delta):
            for I in combinations(range(1, delta + 1), h):
                found = len(strata.get(I, []))
                if found != stratum_size(delta, q, h):
                    witness = {"I": list(I), "points": found, "expected": stratum_size(delta, q, h)}
                    break
            if witness:
                break
    return CheckResult(
        name="hyperplane-identity",
        passed=witness is None,
        detail=f"delta={delta} q={q}: sum {total}, (q^delta-1)/(q-1) = {size}",
        witness=witness,
        data={"delta": delta, "q": q, "points": size, "exhaustive": exhaustive},
    )


def _directions(curve: TwoComponentCurve, I: NodeSet, q: int) -> Iterator[Tuple[int, ...]]:
    units = [int(a) for a in nonzero_elements(q)]
    rest = curve.complement(I)
    for values in product(units, repeat=len(rest)):
        d = [0] * curve.delta
        for node, v in zip(rest, values):
            d[node - 1] = v
        yield tuple(d)


def line_limit_cross_check(curve: TwoComponentCurve, q: int) -> VerificationReport:
    """
    Stratum by stratum, the limit points of all F_q-directions equal the
    image of chi on one copy of the exceptional space; images of distinct
    strata are disjoint.
    """
    validate_prime(q)
    field = ExtensionField(q)
    report = VerificationReport(title=f"line-limit-cross-check q={q}", notes=[AUT_HYPOTHESIS_NOTE])
    union = set()
    sizes = 0
    for I in curve.proper_subsets():
        limits = set()
        for d in _directions(curve, I, q):
            limits.update(line_limit(d, field))
        images = {chi_map(label, curve, q).coordinates for label in enumerate_labels(curve, I, q, j2=0)}
        union |= images
        sizes += len(images)
        diff = sorted(limits ^ images, key=lambda p: [x.key for x in p])
        report.add(CheckResult(
            name=f"cross-oracle I={list(I)}",
            passed=not diff,
            detail=f"{len(limits)} limit points, {len(images)} chi images",
            witness={"point": [str(x) for x in diff[0]]} if diff else None,
        ))
    report.add(CheckResult(
        name="strata-disjoint",
        passed=len(union) == sizes,
        detail=f"{sizes} points over {curve.delta} nodes",
    ))
    return report
