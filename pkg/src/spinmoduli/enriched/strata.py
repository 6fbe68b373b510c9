"""Stratification of the enriched spin curves of a two-component curve."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..core.constants import AUT_HYPOTHESIS_NOTE, MAX_STRATA_NODES, SCHEMA_VERSION
from ..core.types import validate_prime
from ..pipeline.workers import run_parallel
from .curve import NodeSet, TwoComponentCurve, support_name
from .labels import stratum_label_count


@dataclass
class StratumRow:
    """
    One stratum SE_{X_I}.

    Attributes:
        I: Blown-up nodes
        support: Name of the support X_I
        dimension: Torus dimension delta - |I| - 1
        sign_exponent: Exponent of the (Z/2) factor, equal to the dimension
        j2_order: 2^{2(g1+g2)}
        contained_in: Hyperplanes H_i containing the matching stratum of P^{delta-1}
        avoids: Hyperplanes it avoids
        label_count: Enriched spin curves over F_q, when q is given
    """
    I: NodeSet
    support: str
    dimension: int
    sign_exponent: int
    j2_order: int
    contained_in: NodeSet
    avoids: NodeSet
    label_count: Optional[int] = None

    @property
    def torsor(self) -> str:
        k = self.dimension
        if k == 0:
            return "J2"
        return f"J2 x (Z/2)^{k} x (C*)^{k}"

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "I": list(self.I),
            "support": self.support,
            "dimension": self.dimension,
            "sign_exponent": self.sign_exponent,
            "j2_order": self.j2_order,
            "torsor": self.torsor,
            "hyperplanes": {"contained_in": list(self.contained_in), "avoids": list(self.avoids)},
        }
        if self.label_count is not None:
            out["label_count"] = self.label_count
        return out


@dataclass
class StratificationReport:
    """Rows grouped by |I|, with the singular spin curve count."""
    curve: TwoComponentCurve
    q: Optional[int] = None
    rows: List[StratumRow] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def singular_count(self) -> int:
        return self.curve.j2_order

    @property
    def dimensions(self) -> List[int]:
        return [row.dimension for row in self.rows]

    def groups(self) -> Dict[int, List[StratumRow]]:
        grouped: Dict[int, List[StratumRow]] = {}
        for row in self.rows:
            grouped.setdefault(len(row.I), []).append(row)
        return grouped

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "curve": {"g1": self.curve.g1, "g2": self.curve.g2, "delta": self.curve.delta},
            "genus": self.curve.genus,
            "singular_spin_curves": self.singular_count,
            "strata": [row.to_dict() for row in self.rows],
            "notes": list(self.notes),
        }
        if self.q is not None:
            out["q"] = self.q
            out["total_labels"] = sum(row.label_count for row in self.rows)
        return out


def stratification_report(curve: TwoComponentCurve, q: Optional[int] = None, jobs: int = 1) -> StratificationReport:
    """
    One row per proper node subset I, ordered by |I| then lexicographically.

    Args:
        curve: Two-component curve
        q: Optional odd prime; adds the F_q label count of each stratum
        jobs: Worker count for building rows

    Raises:
        ValueError: If delta exceeds MAX_STRATA_NODES or q is not an admissible prime

    Returns:
        StratificationReport
    """
    if curve.delta > MAX_STRATA_NODES:
        raise ValueError(f"delta={curve.delta} out of bounds: strata are listed for delta <= {MAX_STRATA_NODES}")
    if q is not None:
        validate_prime(q)

    def row(I: NodeSet) -> StratumRow:
        k = curve.delta - len(I) - 1
        return StratumRow(
            I=I,
            support=support_name(I),
            dimension=k,
            sign_exponent=k,
            j2_order=curve.j2_order,
            contained_in=I,
            avoids=curve.complement(I),
            label_count=stratum_label_count(curve, I, q) if q is not None else None,
        )

    rows = run_parallel(row, curve.proper_subsets(), jobs)
    return StratificationReport(curve=curve, q=q, rows=rows, notes=[AUT_HYPOTHESIS_NOTE])
