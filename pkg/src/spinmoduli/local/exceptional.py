"""
The exceptional projective space of the blown-up local model.

Homogeneous coordinates [x_1 : ... : x_delta] are the limits of
[w_11 : ... : w_1delta]; H_i = {x_i = 0}. A line of D_C in direction d pulls
back to 2^{delta-1} lines of D_X (for d off the coordinate hyperplanes), and
their strict transforms meet the exceptional space at x_i = +-sqrt(d_i).
"""

from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Sequence, Tuple

from ..core.constants import MAX_PROJECTIVE_POINTS
from ..core.types import CheckResult
from ..scalars.finite_field import FqElem
from .ideal import Poly, dx_ideal, local_ring

Point = Tuple[Any, ...]
Incidence = Tuple[int, ...]


def normalize_point(coords: Sequence[Any]) -> Point:
    """
    Divide by the first nonzero coordinate.

    Raises:
        ValueError: If every coordinate is zero
    """
    for x in coords:
        if x:
            return tuple(c / x for c in coords)
    raise ValueError("zero direction")


def incidence(point: Sequence[Any]) -> Incidence:
    """1-based indices of the hyperplanes H_i containing the point."""
    return tuple(i for i, x in enumerate(point, start=1) if not x)


def incidence_mask(point: Sequence[Any]) -> int:
    return sum(1 << (i - 1) for i in incidence(point))


@dataclass(frozen=True)
class ExceptionalSpace:
    """P^{delta-1} with its coordinate hyperplanes H_1..H_delta."""
    delta: int

    def __post_init__(self) -> None:
        if self.delta < 1:
            raise ValueError(f"delta must be at least 1, got {self.delta}")

    @property
    def hyperplanes(self) -> Tuple[int, ...]:
        return tuple(range(1, self.delta + 1))

    def _check(self, point: Sequence[Any]) -> None:
        if len(point) != self.delta:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.delta}")

    def incidence(self, point: Sequence[Any]) -> int:
        """Bitmask of hyperplanes containing point (bit i-1 for H_i)."""
        self._check(point)
        return incidence_mask(point)

    def transition(self, point: Sequence[Any], s: int) -> Dict[int, Any]:
        """
        Affine coordinates a_is = x_i / x_s of point in chart s.

        Raises:
            ValueError: If the point lies on H_s
        """
        self._check(point)
        x_s = point[s - 1]
        if not x_s:
            raise ValueError(f"point lies on H_{s}, outside chart {s}")
        return {i: point[i - 1] / x_s for i in self.hyperplanes if i != s}

    def from_chart(self, alpha: Dict[int, Any], s: int, one: Any) -> Point:
        """Normalized homogeneous point with x_s = 1 and x_i = a_is."""
        coords = [alpha[i] if i != s else one for i in self.hyperplanes]
        return normalize_point(coords)

    def check_chart_overlaps(self, points: Sequence[Sequence[Any]], one: Any) -> CheckResult:
        """
        On every overlap of charts r and s: a_ir = a_is / a_rs, and chart
        coordinates map back to the same projective point.
        """
        checked = 0
        for point in points:
            target = normalize_point(point)
            charts = [s for s in self.hyperplanes if point[s - 1]]
            for s in charts:
                alpha_s = self.transition(point, s)
                if self.from_chart(alpha_s, s, one) != target:
                    return CheckResult(
                        name="chart-overlaps",
                        passed=False,
                        detail=f"chart {s} does not invert to the point",
                        witness={"point": [str(x) for x in point], "chart": s},
                    )
                for r in charts:
                    if r == s:
                        continue
                    alpha_r = self.transition(point, r)
                    for i in self.hyperplanes:
                        if i in (r, s):
                            continue
                        checked += 1
                        if alpha_r[i] != alpha_s[i] / alpha_s[r]:
                            return CheckResult(
                                name="chart-overlaps",
                                passed=False,
                                detail=f"transition U_{s} -> U_{r} inconsistent at i={i}",
                                witness={"point": [str(x) for x in point], "charts": [s, r], "i": i},
                            )
        return CheckResult(
            name="chart-overlaps",
            passed=True,
            detail=f"{len(points)} points, {checked} transition identities",
        )


def _square_root_lifts(d: Sequence[Any], field: Any) -> List[List[Any]]:
    """Vectors c with c_i^2 = d_i, one per sign class; the first nonzero entry is the first root."""
    values = [field.coerce(x) for x in d]
    if not any(values):
        raise ValueError("zero direction")
    support = [i for i, x in enumerate(values) if x]
    roots = [field.square_roots(values[i]) for i in support]
    lifts = []
    for signs in product((0, 1), repeat=len(support) - 1):
        c = [field.zero] * len(values)
        c[support[0]] = roots[0][0]
        for k, sign in enumerate(signs, start=1):
            c[support[k]] = roots[k][sign]
        lifts.append(c)
    return lifts


def line_limit(d: Sequence[Any], field: Any) -> List[Point]:
    """
    Limit points on the exceptional space of the lines over direction d.

    x_i = 0 where d_i = 0 and x_i = +-sqrt(d_i) elsewhere, modulo a global
    sign. There are 2^{delta-|I|-1} of them for I the zero set of d.

    Args:
        d: Direction entries in the base field
        field: RationalField() or ExtensionField(q)

    Returns:
        Normalized points sorted by their field representation

    Raises:
        ValueError: For d == 0, or a field lacking the needed square roots
    """
    points = {normalize_point(c) for c in _square_root_lifts(d, field)}
    return sorted(points, key=lambda p: [field.sort_key(x) for x in p])


def phi_map(w: Dict[Tuple[int, int], Any], delta: int) -> Tuple[Any, ...]:
    """phi: D_X -> D_C, w -> (w_11, ..., w_deltadelta)."""
    return tuple(w[(i, i)] for i in range(1, delta + 1))


def phi_fiber(d: Sequence[Any], field: Any) -> List[Dict[Tuple[int, int], Any]]:
    """
    Points w of D_X with phi(w) = d: w_ij = c_i c_j with c_i^2 = d_i, c up to sign.

    The fiber has 2^{m-1} points for m nonzero entries of d, so 2^{delta-1}
    over the complement of the coordinate hyperplanes.
    """
    delta = len(d)
    return [
        {(i, j): c[i - 1] * c[j - 1] for i in range(1, delta + 1) for j in range(i, delta + 1)}
        for c in _square_root_lifts(d, field)
    ]


def deck_group(delta: int) -> List[Tuple[int, ...]]:
    """Sign vectors with first entry +1: (Z/2)^delta / +-1, of order 2^{delta-1}."""
    return [(1,) + rest for rest in product((1, -1), repeat=delta - 1)]


def deck_act(epsilon: Sequence[int], w: Dict[Tuple[int, int], Any]) -> Dict[Tuple[int, int], Any]:
    """w_ij -> eps_i eps_j w_ij."""
    return {(i, j): value * (epsilon[i - 1] * epsilon[j - 1]) for (i, j), value in w.items()}


def evaluate(poly: Poly, values: Dict[Tuple[int, int], Any], field: Any) -> Any:
    """Evaluate a polynomial in the w-variables at field values."""
    ring = poly.ring
    delta = max(j for _, j in values)
    R = local_ring(delta)
    position = {ring.index(R.w[key]): key for key in R.w_pairs()}
    total = field.zero
    for monom, coeff in poly.terms():
        term = field.one * int(coeff.numerator) / int(coeff.denominator)
        for pos, e in enumerate(monom):
            if e:
                if pos not in position:
                    raise ValueError(f"{ring.gens[pos]} is not a w-variable")
                term = term * values[position[pos]] ** e
        total = total + term
    return total


def check_deck_action(d: Sequence[Any], field: Any) -> CheckResult:
    """
    The deck group of phi acts freely and transitively on the fiber over d.

    Every fiber point satisfies the equations of D_X and maps to d.

    Raises:
        ValueError: If d has a zero entry (ramified fiber)
    """
    delta = len(d)
    values = [field.coerce(x) for x in d]
    if not all(values):
        raise ValueError("deck action is checked only off the coordinate hyperplanes")
    fiber = phi_fiber(values, field)
    group = deck_group(delta)

    def key(w: Dict[Tuple[int, int], Any]) -> Tuple:
        return tuple(field.sort_key(w[k]) for k in sorted(w))

    if delta >= 2:
        ideal = dx_ideal(delta)
        for w in fiber:
            for label, g in zip(ideal.labels, ideal.generators):
                if evaluate(g, w, field):
                    return CheckResult(
                        name="deck-action",
                        passed=False,
                        detail=f"fiber point violates generator {label}",
                        witness={"d": [str(x) for x in d], "generator": list(label)},
                    )
    fiber_keys = {key(w) for w in fiber}
    base = fiber[0]
    orbit = [deck_act(eps, base) for eps in group]
    orbit_keys = [key(w) for w in orbit]
    free = len(set(orbit_keys)) == len(group)
    transitive = set(orbit_keys) == fiber_keys
    target = tuple(field.one * x for x in values)
    over_d = all(phi_map(w, delta) == target for w in orbit)
    passed = free and transitive and over_d and len(fiber) == 2 ** (delta - 1)
    return CheckResult(
        name="deck-action",
        passed=passed,
        detail=f"fiber of {len(fiber)} points, deck group of order {len(group)}",
        witness=None if passed else {
            "d": [str(x) for x in d],
            "free": free,
            "transitive": transitive,
            "over_d": over_d,
        },
        data={"fiber": len(fiber), "group": len(group)},
    )


def projective_size(delta: int, q: int) -> int:
    """|P^{delta-1}(F_q)| = (q^delta - 1) / (q - 1)."""
    return (q ** delta - 1) // (q - 1)


def stratum_size(delta: int, q: int, fixed: int) -> int:
    """Points of P^{delta-1}(F_q) on exactly the hyperplanes of a set of size fixed."""
    return (q - 1) ** (delta - fixed - 1)


def projective_points(delta: int, q: int) -> Dict[Incidence, List[Tuple[FqElem, ...]]]:
    """
    Normalized F_q-points of P^{delta-1}, grouped by hyperplane incidence.

    Raises:
        ValueError: If the point count exceeds MAX_PROJECTIVE_POINTS
    """
    if delta < 1:
        raise ValueError(f"delta must be at least 1, got {delta}")
    if projective_size(delta, q) > MAX_PROJECTIVE_POINTS:
        raise ValueError(
            f"P^{delta - 1}(F_{q}) has {projective_size(delta, q)} points, "
            f"above the cap {MAX_PROJECTIVE_POINTS}"
        )
    strata: Dict[Incidence, List[Tuple[FqElem, ...]]] = {}
    for lead in range(delta):
        for tail in product(range(q), repeat=delta - lead - 1):
            point = tuple(FqElem(v, q) for v in (0,) * lead + (1,) + tail)
            strata.setdefault(incidence(point), []).append(point)
    return dict(sorted(strata.items(), key=lambda kv: (len(kv[0]), kv[0])))
