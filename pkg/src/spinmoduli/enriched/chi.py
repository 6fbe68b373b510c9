"""
The correspondence chi between enriched spin labels and points of the
exceptional spaces P^{delta-1}_xi, one copy per singular spin curve xi.

For a label of stratum I with nodes outside I taken in order n_0 < n_1 < ...:
x_i = 0 on I, x_{n_0} = 1, and x_{n_t} = +-sqrt(a_{n_t}) with the canonical
root of F_{q^2} and the sign given by the label. The image lies on exactly
the hyperplanes H_i, i in I.
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ..local.exceptional import incidence, incidence_mask
from ..scalars.finite_field import Fq2Elem, FqElem, canonical_sqrt
from .curve import TwoComponentCurve
from .labels import EnrichedSpinLabel, LabelGroupElement, act


@dataclass(frozen=True)
class StratumPoint:
    """
    Point of P^{delta-1}_xi over F_{q^2}.

    Attributes:
        xi_index: Singular spin curve, as an element of the J_2 torsor
        coordinates: Normalized coordinates, first nonzero equal to 1
        incidence: Bitmask of the hyperplanes containing the point
    """
    xi_index: int
    coordinates: Tuple[Fq2Elem, ...]
    incidence: int

    @property
    def zero_set(self) -> Tuple[int, ...]:
        return incidence(self.coordinates)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "xi": self.xi_index,
            "coordinates": [str(x) for x in self.coordinates],
            "incidence": self.incidence,
        }


def _check_curve(label: EnrichedSpinLabel, curve: TwoComponentCurve) -> None:
    if label.delta != curve.delta:
        raise ValueError(f"label has {label.delta} nodes, curve has {curve.delta}")
    if label.j2 >= curve.j2_order:
        raise ValueError(f"j2={label.j2} outside J_2 of order {curve.j2_order}")


def chi_map(label: EnrichedSpinLabel, curve: TwoComponentCurve, q: int) -> StratumPoint:
    """
    Image of an enriched spin label on the exceptional space of xi = j2.

    Raises:
        ValueError: "direction entry zero" for a zero direction entry
            or a direction entry from another prime field
    """
    _check_curve(label, curve)
    coords = [Fq2Elem.embed(0, q)] * curve.delta
    rest = label.complement
    coords[rest[0] - 1] = Fq2Elem.embed(1, q)
    for t, node in enumerate(rest[1:]):
        a = label.direction[t]
        if not isinstance(a, FqElem):
            a = FqElem(int(a), q)
        elif a.q != q:
            raise ValueError(f"direction entry {a} lies in F_{a.q}, not F_{q}")
        if not a:
            raise ValueError("direction entry zero")
        r = canonical_sqrt(a)
        coords[node - 1] = -r if label.signs[t] else r
    point = tuple(coords)
    return StratumPoint(xi_index=label.j2, coordinates=point, incidence=incidence_mask(point))


def chi_inverse(point: StratumPoint, curve: TwoComponentCurve, q: int) -> EnrichedSpinLabel:
    """
    Label whose image is point.

    Raises:
        ValueError: If the point is not in the image of chi
    """
    coords = point.coordinates
    if len(coords) != curve.delta:
        raise ValueError(f"point has {len(coords)} coordinates, curve has {curve.delta} nodes")
    I = incidence(coords)
    rest = tuple(i for i in curve.nodes if i not in I)
    if not rest or coords[rest[0] - 1] != Fq2Elem.embed(1, q):
        raise ValueError("point is not normalized")
    direction = []
    signs = []
    for node in rest[1:]:
        x = coords[node - 1]
        square = x * x
        if not square.in_base_field():
            raise ValueError(f"x_{node}^2 = {square} is not in F_{q}")
        a = square.a
        r = canonical_sqrt(a)
        direction.append(a)
        signs.append(0 if x == r else 1)
    return EnrichedSpinLabel(
        delta=curve.delta,
        I=I,
        direction=tuple(direction),
        j2=point.xi_index,
        signs=tuple(signs),
    )


def transported_action(
    g: LabelGroupElement, point: StratumPoint, curve: TwoComponentCurve, q: int
) -> StratumPoint:
    """Label group acting on the image of chi: chi o g o chi^{-1}."""
    return chi_map(act(g, chi_inverse(point, curve, q)), curve, q)
