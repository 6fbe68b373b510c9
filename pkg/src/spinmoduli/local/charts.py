"""
Affine charts of the blow-up of D_X at (w_11, w_12, ..., w_1delta).

Chart U_s has the delta coordinates {a_is : i != s} and w_ss:

    w_is = a_is w_ss   (i < s)
    w_si = a_is w_ss   (s < i)
    w_ij = a_is a_js w_ss   (i, j != s, including i == j)
    w_ss = w_ss

Every generator of D_X becomes the zero polynomial, so U_s is affine
delta-space and the blow-up is smooth. The exceptional divisor meets U_s
in {w_ss = 0} and a_is = x_i / x_s are the affine coordinates of the
exceptional projective space there.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..core.types import CheckResult, VerificationReport
from ..pipeline.workers import run_parallel
from ..utils.logging import log
from .ideal import IdealPresentation, LocalRing, Poly, dx_ideal, local_ring


@dataclass(frozen=True)
class Chart:
    """
    One affine chart U_s of the blow-up.

    Attributes:
        s: Chart index, 1-based
        coordinates: Chart coordinates, a_is for i != s followed by w_ss
        substitution: Image of every w_ij, keyed by (i, j) with i <= j
        exceptional_locus: Equation of the exceptional divisor in this chart
    """
    s: int
    coordinates: Tuple[Poly, ...]
    substitution: Dict[Tuple[int, int], Poly]
    exceptional_locus: Poly
    residuals: Tuple[Poly, ...] = field(default=())

    @property
    def delta(self) -> int:
        return len(self.coordinates)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "coordinates": [str(c) for c in self.coordinates],
            "substitution": {
                f"w{i}_{j}": str(p) for (i, j), p in sorted(self.substitution.items())
            },
            "exceptional_locus": f"{self.exceptional_locus} = 0",
            "residuals": [str(r) for r in self.residuals],
        }


def chart_substitution(delta: int, s: int) -> Dict[Tuple[int, int], Poly]:
    """Images of the w_ij in chart U_s."""
    if not 1 <= s <= delta:
        raise ValueError(f"chart index {s} out of range 1..{delta}")
    R = local_ring(delta)
    w_ss = R.w_(s, s)

    def a(i: int) -> Poly:
        return R.alpha[(i, s)]

    images: Dict[Tuple[int, int], Poly] = {}
    for i, j in R.w_pairs():
        if i == s and j == s:
            images[(i, j)] = w_ss
        elif i == s:
            images[(i, j)] = a(j) * w_ss
        elif j == s:
            images[(i, j)] = a(i) * w_ss
        else:
            images[(i, j)] = a(i) * a(j) * w_ss
    return images


def chart_residuals(ideal: IdealPresentation, substitution: Dict[Tuple[int, int], Poly]) -> Tuple[Poly, ...]:
    R = ideal.local
    pairs = [(R.w[key], image) for key, image in sorted(substitution.items())]
    return tuple(g.compose(pairs) for g in ideal.generators)


def build_chart(delta: int, s: int) -> Chart:
    """
    Chart U_s with its residuals.

    Raises:
        RuntimeError: If a generator does not vanish in the chart
    """
    R = local_ring(delta)
    ideal = dx_ideal(delta)
    substitution = chart_substitution(delta, s)
    residuals = chart_residuals(ideal, substitution)
    bad = [(label, r) for label, r in zip(ideal.labels, residuals) if r]
    if bad:
        label, r = bad[0]
        raise RuntimeError(f"chart U_{s}: generator {label} has nonzero residual {r}")
    coordinates = tuple(R.alpha[(i, s)] for i in range(1, delta + 1) if i != s) + (R.w_(s, s),)
    return Chart(
        s=s,
        coordinates=coordinates,
        substitution=substitution,
        exceptional_locus=R.w_(s, s),
        residuals=residuals,
    )


def blowup_charts(delta: int, jobs: int = 1, debug: bool = False) -> List[Chart]:
    """
    All delta charts of the blow-up, in order of s.

    Args:
        delta: Number of nodes, at least 2
        jobs: Worker count; one chart per task
        debug: Enable debug logging

    Returns:
        Charts U_1..U_delta, each with delta coordinates and zero residuals
    """
    dx_ideal(delta)
    charts = run_parallel(lambda s: build_chart(delta, s), list(range(1, delta + 1)), jobs)
    if debug:
        log(f"[CHARTS] delta={delta}: {len(charts)} charts, all residuals zero")
    return charts


def check_chart_smoothness(delta: int, jobs: int = 1) -> CheckResult:
    """Residuals vanish and every chart has exactly delta coordinates."""
    try:
        charts = blowup_charts(delta, jobs)
    except RuntimeError as exc:
        return CheckResult(name="chart-smoothness", passed=False, detail=str(exc), witness={"delta": delta})
    wrong = [c.s for c in charts if c.delta != delta]
    return CheckResult(
        name="chart-smoothness",
        passed=not wrong,
        detail=f"delta={delta}: {len(charts)} charts, {delta} coordinates each",
        witness={"delta": delta, "charts": wrong} if wrong else None,
    )


def _clear_denominators(R: LocalRing, s: int, p: Poly, power: int) -> Poly:
    """
    t_s^power * p(a_is = t_i / t_s, w_ss = t_s^2) as a polynomial in t.

    Every term of p must have total a-degree at most power.
    """
    ring = R.ring
    images = {ring.index(R.alpha[(i, s)]): R.t[i - 1] for i in range(1, R.delta + 1) if i != s}
    alpha_positions = set(images)
    images[ring.index(R.w_(s, s))] = R.t[s - 1] ** 2
    result = ring.zero
    for monom, coeff in p.terms():
        a_degree = sum(monom[pos] for pos in alpha_positions)
        if a_degree > power:
            raise ValueError(f"term of a-degree {a_degree} exceeds clearing power {power}")
        piece = ring.ground_new(coeff) * R.t[s - 1] ** (power - a_degree)
        for pos, e in enumerate(monom):
            if e:
                if pos not in images:
                    raise ValueError(f"{ring.gens[pos]} is not a coordinate of chart U_{s}")
                piece *= images[pos] ** e
        result += piece
    return result


def quotient_consistency(delta: int) -> VerificationReport:
    """
    Compose each chart with w_ij = t_i t_j and a_is = t_i / t_s.

    After multiplying through by t_s^2 every chart image of w_ij must equal
    t_s^2 t_i t_j exactly.
    """
    R = local_ring(delta)
    report = VerificationReport(title="quotient-consistency")
    for chart in blowup_charts(delta):
        s = chart.s
        witness = None
        for (i, j), image in sorted(chart.substitution.items()):
            lhs = _clear_denominators(R, s, image, 2)
            rhs = R.t[s - 1] ** 2 * R.t[i - 1] * R.t[j - 1]
            if lhs != rhs:
                witness = {"chart": s, "w": [i, j], "got": str(lhs), "expected": str(rhs)}
                break
        report.add(CheckResult(
            name=f"quotient-consistency-U{s}",
            passed=witness is None,
            detail=f"{len(chart.substitution)} w-images in chart U_{s}",
            witness=witness,
        ))
    return report
