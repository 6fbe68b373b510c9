"""
Limit square roots of (C, omega_C): supports, root counts and multiplicities.

A spin curve supported on the blow-up X at Delta is determined by O(1) on each
exceptional component and a square root of (pi^* omega)|_X~ twisted down at the
two attachment points of every exceptional component. Delta is a valid
support iff that bundle has even degree on every component of X~. The roots of
a fixed even-multidegree bundle form a torsor under the 2-torsion of Pic(X~),
which has order 2^(2 sum g_v + b1) on each connected component.

The point of the moduli space supported on X has multiplicity 2^{b1(Sigma_X)},
and summing root_count * multiplicity over all supports recovers the degree
2^{2g} of the forgetful map.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Tuple

from ..core.constants import MAX_SUPPORT_NODES, SCHEMA_VERSION
from ..core.types import CheckResult
from ..graphs.blowup import blow_up, sigma_graph
from ..graphs.dualgraph import DualGraph, VertexId, genus, is_two_component
from ..pipeline.workers import run_parallel
from ..utils.logging import log

Support = Tuple[int, ...]


@dataclass
class SpinSupport:
    """
    One support Delta with its roots and scheme multiplicity.

    Attributes:
        delta: Sorted edge ids of the blown-up nodes
        per_component_degree: deg (pi^* omega)|_v minus attachment points, per vertex
        root_count: Number of spin curves supported on the blow-up at delta
        multiplicity: 2^{b1(Sigma_X)}
        is_singular_point: Two-component curves only: delta is every node and delta >= 2
        aut_order: Two-component curves only: 2 when delta is every node, else 1
    """
    delta: Support
    per_component_degree: Dict[VertexId, int]
    root_count: int
    multiplicity: int
    is_singular_point: Optional[bool] = None
    aut_order: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "delta": list(self.delta),
            "root_count": self.root_count,
            "multiplicity": self.multiplicity,
        }
        if self.is_singular_point is not None:
            out["singular"] = self.is_singular_point
        if self.aut_order is not None:
            out["aut_order"] = self.aut_order
        return out


@dataclass
class SpinTable:
    """All supports of a curve with the weighted total 2^{2g}."""
    graph: DualGraph
    genus: int
    supports: List[SpinSupport] = field(default_factory=list)
    weighted_total: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "genus": self.genus,
            "weighted_total": self.weighted_total,
            "supports": [s.to_dict() for s in self.supports],
        }


def _normalize(G: DualGraph, delta_set: Iterable[int]) -> Support:
    support = tuple(sorted({int(i) for i in delta_set}))
    for idx in support:
        if not 0 <= idx < G.delta:
            raise ValueError(f"unknown edge id {idx} (graph has {G.delta} edges)")
    return support


def per_component_degrees(G: DualGraph, delta_set: Iterable[int]) -> Dict[VertexId, int]:
    """2g_v - 2 + valence(v) - e_v(Delta) for every vertex v."""
    support = _normalize(G, delta_set)
    return {
        v: 2 * g - 2 + G.valence(v) - G.endpoint_count(v, support)
        for v, g in G.vertices
    }


def support_parity_ok(G: DualGraph, delta_set: Iterable[int]) -> bool:
    return all(d % 2 == 0 for d in per_component_degrees(G, delta_set).values())


def _all_subsets(n: int) -> Iterable[Support]:
    """Subsets of range(n) in canonical order: by size, then lexicographically."""
    for size in range(n + 1):
        yield from combinations(range(n), size)


def valid_supports(G: DualGraph) -> List[Support]:
    """
    Every Delta on which a spin curve of G can be supported.

    Supports come back sorted by (|Delta|, edge ids).

    Raises:
        ValueError: If G is disconnected or has more than MAX_SUPPORT_NODES edges
    """
    G.require_connected()
    if G.delta > MAX_SUPPORT_NODES:
        raise ValueError(f"delta={G.delta} exceeds the support enumeration cap {MAX_SUPPORT_NODES}")
    return [s for s in _all_subsets(G.delta) if support_parity_ok(G, s)]


def _require_valid(G: DualGraph, delta_set: Iterable[int]) -> Support:
    support = _normalize(G, delta_set)
    if not support_parity_ok(G, support):
        raise ValueError(f"odd component degree: {list(support)} is not a valid support")
    return support


def root_count(G: DualGraph, delta_set: Iterable[int]) -> int:
    """
    Number of spin curves supported on the blow-up at Delta.

    Product over connected components K of X~ of 2^(2 sum_{v in K} g_v + b1(K)).

    Raises:
        ValueError: "odd component degree" for an invalid support
    """
    support = _require_valid(G, delta_set)
    X = blow_up(G, support)
    exponent = 0
    for comp in X.tilde_components:
        exponent += 2 * sum(G.genera[v] for v in comp) + X.component_b1(comp)
    return 2 ** exponent


def multiplicity(G: DualGraph, delta_set: Iterable[int]) -> int:
    """Scheme multiplicity 2^{b1(Sigma_X)} of the points supported on Delta."""
    support = _require_valid(G, delta_set)
    return 2 ** sigma_graph(blow_up(G, support)).b1


def automorphism_order(G: DualGraph, delta_set: Iterable[int]) -> Optional[int]:
    """
    Order of Aut(xi) for a two-component curve: t -> -t survives only when
    every node is blown up. None outside the two-component case.
    """
    if not is_two_component(G):
        return None
    support = _normalize(G, delta_set)
    return 2 if len(support) == G.delta else 1


def _support_row(G: DualGraph, support: Support) -> SpinSupport:
    two_component = is_two_component(G)
    full = len(support) == G.delta
    return SpinSupport(
        delta=support,
        per_component_degree=per_component_degrees(G, support),
        root_count=root_count(G, support),
        multiplicity=multiplicity(G, support),
        is_singular_point=(full and G.delta >= 2) if two_component else None,
        aut_order=automorphism_order(G, support),
    )


def weighted_total(G: DualGraph) -> int:
    """Sum of root_count * multiplicity over all valid supports."""
    return sum(root_count(G, s) * multiplicity(G, s) for s in valid_supports(G))


def spin_table(G: DualGraph, jobs: int = 1, debug: bool = False) -> SpinTable:
    """
    Enumerate all supports of G and check the degree identity.

    Args:
        G: Connected dual graph
        jobs: Worker count for the per-support computations
        debug: Enable debug logging

    Returns:
        SpinTable with weighted_total == 2^{2 genus(G)}

    Raises:
        RuntimeError: If the degree identity fails
    """
    g = genus(G)
    supports = valid_supports(G)
    if debug:
        log(f"[SUPPORTS] genus={g} delta={G.delta}: {len(supports)} valid supports")
    rows = run_parallel(lambda s: _support_row(G, s), supports, jobs)
    total = sum(r.root_count * r.multiplicity for r in rows)
    if total != 2 ** (2 * g):
        raise RuntimeError(f"degree identity failed: weighted total {total} != 2^{2 * g}")
    return SpinTable(graph=G, genus=g, supports=rows, weighted_total=total)


def singular_spin_count(G: DualGraph) -> int:
    """
    Number of spin curves of a two-component curve at which the moduli space
    is singular: the roots supported on the blow-up at every node.

    Raises:
        ValueError: If G does not have two vertices, no loops and delta >= 2
    """
    if not is_two_component(G) or G.delta < 2:
        raise ValueError("singular_spin_count needs two components joined by at least 2 nodes")
    count = 2 ** (2 * sum(g for _, g in G.vertices))
    full = root_count(G, range(G.delta))
    if count != full:
        raise RuntimeError(f"singular count {count} differs from full-support root count {full}")
    return count


def check_degree_identity(G: DualGraph) -> CheckResult:
    """Degree identity as a report item; a failing identity yields a witness."""
    g = genus(G)
    total = weighted_total(G)
    expected = 2 ** (2 * g)
    return CheckResult(
        name="degree-identity",
        passed=total == expected,
        detail=f"sum root_count*multiplicity = {total}, 2^(2g) = {expected}",
        witness=None if total == expected else {
            "vertices": [[v, gv] for v, gv in G.vertices],
            "edges": [list(e) for e in G.edges],
            "weighted_total": total,
            "expected": expected,
        },
    )


def check_parity_closure(G: DualGraph) -> CheckResult:
    """
    Valid supports form a coset of the cycle space: pairwise symmetric
    differences have even endpoint count everywhere, and there are exactly
    2^{b1(G)} of them.
    """
    supports = [frozenset(s) for s in valid_supports(G)]
    b1 = G.delta - len(G.vertices) + 1
    for a, b in combinations(supports, 2):
        diff = sorted(a ^ b)
        odd = [v for v in G.vertex_ids if G.endpoint_count(v, diff) % 2]
        if odd:
            return CheckResult(
                name="parity-closure",
                passed=False,
                detail="symmetric difference with odd endpoint count",
                witness={"a": sorted(a), "b": sorted(b), "odd_vertices": odd},
            )
    passed = len(supports) == 2 ** b1
    return CheckResult(
        name="parity-closure",
        passed=passed,
        detail=f"{len(supports)} valid supports, 2^b1 = {2 ** b1}",
        witness=None if passed else {"count": len(supports), "b1": b1},
    )
