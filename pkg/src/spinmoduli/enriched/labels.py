"""
Labels of enriched spin curves on a two-component curve.

An enriched spin curve supported on the blow-up X_I is labelled by
(j2, signs, direction):

* j2 in J_2(C^nu) = (Z/2)^{2(g1+g2)}, stored as a bitmask;
* signs in (Z/2)^k, one bit per node after the first outside I;
* direction in (F_q^*)^k, the parameters a_i of the curve germ
  (t^2, ..., t^2, t, a_{h+2} t, ..., a_delta t) once I is moved to {1..h};

with k = delta - |I| - 1. The label group acts coordinate-wise and the
labels of a stratum form a torsor under it.
"""

from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Tuple

from sympy.ntheory import primitive_root

from ..local.exceptional import projective_points
from ..scalars.finite_field import FqElem, nonzero_elements, prime_field
from .curve import NodeSet, TwoComponentCurve


@dataclass(frozen=True)
class EnrichedSpinLabel:
    """
    One enriched spin curve of stratum I.

    Attributes:
        delta: Number of nodes of the curve
        I: Blown-up nodes, sorted, 1-based, a proper subset
        direction: Entries a_i for the nodes after the first outside I
        j2: Element of (Z/2)^{2(g1+g2)} as a bitmask
        signs: One bit per direction entry
    """
    delta: int
    I: NodeSet
    direction: Tuple[FqElem, ...] = ()
    j2: int = 0
    signs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.I) >= self.delta:
            raise ValueError(f"I={list(self.I)} must be a proper subset of {self.delta} nodes")
        k = self.k
        if len(self.direction) != k or len(self.signs) != k:
            raise ValueError(
                f"stratum I={list(self.I)} needs {k} direction entries and signs, "
                f"got {len(self.direction)} and {len(self.signs)}"
            )
        if any(s not in (0, 1) for s in self.signs):
            raise ValueError(f"signs must be bits, got {list(self.signs)}")
        if self.j2 < 0:
            raise ValueError(f"j2 must be a non-negative bitmask, got {self.j2}")

    @property
    def k(self) -> int:
        return self.delta - len(self.I) - 1

    @property
    def complement(self) -> NodeSet:
        return tuple(i for i in range(1, self.delta + 1) if i not in self.I)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "I": list(self.I),
            "direction": [int(a) for a in self.direction],
            "j2": self.j2,
            "signs": list(self.signs),
        }


@dataclass(frozen=True)
class LabelGroupElement:
    """
    Element of (Z/2)^{2(g1+g2)} x (Z/2)^k x (F_q^*)^k.

    Attributes:
        j2: Bitmask added to the j2 part
        signs: Bits added to the signs
        scale: Factors multiplying the direction entries
    """
    j2: int
    signs: Tuple[int, ...]
    scale: Tuple[FqElem, ...]

    @classmethod
    def identity(cls, k: int, q: int) -> "LabelGroupElement":
        return cls(j2=0, signs=(0,) * k, scale=tuple(FqElem(1, q) for _ in range(k)))

    def __mul__(self, other: "LabelGroupElement") -> "LabelGroupElement":
        return LabelGroupElement(
            j2=self.j2 ^ other.j2,
            signs=tuple(a ^ b for a, b in zip(self.signs, other.signs)),
            scale=tuple(a * b for a, b in zip(self.scale, other.scale)),
        )


def act(g: LabelGroupElement, label: EnrichedSpinLabel) -> EnrichedSpinLabel:
    """Coordinate-wise action: XOR on j2 and signs, multiplication on direction."""
    if len(g.signs) != label.k or len(g.scale) != label.k:
        raise ValueError(f"group element of rank {len(g.signs)} acting on stratum with k={label.k}")
    return EnrichedSpinLabel(
        delta=label.delta,
        I=label.I,
        direction=tuple(a * b for a, b in zip(label.direction, g.scale)),
        j2=label.j2 ^ g.j2,
        signs=tuple(a ^ b for a, b in zip(label.signs, g.signs)),
    )


def label_group(curve: TwoComponentCurve, k: int, q: int) -> Iterator[LabelGroupElement]:
    """Every element of the label group, in canonical order."""
    units = list(nonzero_elements(q))
    for j2 in range(curve.j2_order):
        for signs in product((0, 1), repeat=k):
            for scale in product(units, repeat=k):
                yield LabelGroupElement(j2=j2, signs=signs, scale=scale)


def label_group_generators(curve: TwoComponentCurve, k: int, q: int) -> List[LabelGroupElement]:
    """One bit of j2 or signs at a time, and a primitive root on one direction entry."""
    unit = FqElem(1, q)
    root = _primitive_root(q)
    gens = []
    for bit in range(curve.j2_rank):
        gens.append(LabelGroupElement(j2=1 << bit, signs=(0,) * k, scale=(unit,) * k))
    for t in range(k):
        signs = tuple(int(i == t) for i in range(k))
        gens.append(LabelGroupElement(j2=0, signs=signs, scale=(unit,) * k))
    for t in range(k):
        scale = tuple(root if i == t else unit for i in range(k))
        gens.append(LabelGroupElement(j2=0, signs=(0,) * k, scale=scale))
    return gens


def _primitive_root(q: int) -> FqElem:
    prime_field(q)
    return FqElem(primitive_root(q), q)


def enumerate_labels(curve: TwoComponentCurve, I: NodeSet, q: int, j2: Optional[int] = None) -> Iterator[EnrichedSpinLabel]:
    """
    Every label of stratum I over F_q, ordered by (j2, signs, direction).

    Args:
        curve: Two-component curve
        I: Proper node subset
        q: Odd prime
        j2: Restrict to one J_2 element
    """
    subset = curve.check_subset(I)
    prime_field(q)
    k = curve.delta - len(subset) - 1
    units = list(nonzero_elements(q))
    j2_values = range(curve.j2_order) if j2 is None else (j2,)
    for j in j2_values:
        for signs in product((0, 1), repeat=k):
            for direction in product(units, repeat=k):
                yield EnrichedSpinLabel(
                    delta=curve.delta, I=subset, direction=direction, j2=j, signs=signs,
                )


def stratum_label_count(curve: TwoComponentCurve, I: NodeSet, q: int) -> int:
    """2^{2(g1+g2)} * 2^k * (q-1)^k with k = delta - |I| - 1."""
    k = curve.delta - len(curve.check_subset(I)) - 1
    return curve.j2_order * 2 ** k * (q - 1) ** k


@dataclass
class EnrichedCount:
    """Label counts per stratum and their total."""
    q: int
    strata: Dict[NodeSet, int]

    @property
    def total(self) -> int:
        return sum(self.strata.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "strata": [{"I": list(I), "count": n} for I, n in self.strata.items()],
            "total": self.total,
        }


def enriched_count(curve: TwoComponentCurve, q: int) -> EnrichedCount:
    """Number of enriched spin curves over F_q in every stratum."""
    prime_field(q)
    return EnrichedCount(
        q=q,
        strata={I: stratum_label_count(curve, I, q) for I in curve.proper_subsets()},
    )


def enriched_stable_directions(delta: int, q: int) -> List[Tuple[FqElem, ...]]:
    """
    Enriched stable curves over F_q: directions of D_C off the coordinate
    hyperplanes, (q-1)^{delta-1} normalized points.
    """
    prime_field(q)
    return projective_points(delta, q).get((), [])
