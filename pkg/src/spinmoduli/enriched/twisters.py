"""
Twisters of a nodal curve.

A tuple (T_1, ..., T_gamma), one per component, comes from a smoothing iff
T_i has degree -n_i on C_i (n_i the nodes joining C_i to the rest) and
#(nodes between C_i and C_v) on every other C_v, the multidegrees add up to
zero, and the gluing data multiply to a constant, i.e. the tensor product is
trivial.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from ..graphs.dualgraph import DualGraph, VertexId
from .curve import TwoComponentCurve


@dataclass(frozen=True)
class TwisterData:
    """
    Candidate twister attached to one component.

    Attributes:
        owner: Vertex id of the component C_i
        multidegree: Degree on each component; missing vertices count as 0
        gluing: Gluing scalar at each node, nonzero, up to a global scalar
    """
    owner: VertexId
    multidegree: Dict[VertexId, int] = field(default_factory=dict)
    gluing: Tuple[Any, ...] = ()

    def degree_on(self, vertex: VertexId) -> int:
        return self.multidegree.get(vertex, 0)


def _edges_between(G: DualGraph, u: VertexId, v: VertexId) -> int:
    return sum(1 for a, b in G.edges if {a, b} == {u, v} and a != b)


def _outgoing(G: DualGraph, v: VertexId) -> int:
    return sum(1 for a, b in G.edges if (a == v) != (b == v))


def _check_arity(G: DualGraph, twisters: Sequence[TwisterData]) -> None:
    owners = [t.owner for t in twisters]
    if sorted(owners) != sorted(G.vertex_ids):
        raise ValueError(f"arity mismatch: twisters for {owners}, components {list(G.vertex_ids)}")
    for t in twisters:
        if len(t.gluing) != G.delta:
            raise ValueError(
                f"arity mismatch: twister of {t.owner} has {len(t.gluing)} gluing entries, "
                f"curve has {G.delta} nodes"
            )
        unknown = set(t.multidegree) - set(G.vertex_ids)
        if unknown:
            raise ValueError(f"twister of {t.owner} has degrees on unknown components {sorted(unknown)}")


def degree_condition(G: DualGraph, twister: TwisterData) -> bool:
    """-n_i on the owner, #edges(owner, v) on every other component."""
    owner = twister.owner
    if twister.degree_on(owner) != -_outgoing(G, owner):
        return False
    return all(
        twister.degree_on(v) == _edges_between(G, owner, v)
        for v in G.vertex_ids if v != owner
    )


def _gluing_product(twisters: Sequence[TwisterData]) -> List[Any]:
    product = list(twisters[0].gluing)
    for t in twisters[1:]:
        product = [a * b for a, b in zip(product, t.gluing)]
    return product


def check_twister_tuple(G: DualGraph, twisters: Sequence[TwisterData]) -> bool:
    """
    Whether the tuple is a compatible tuple of twisters of G.

    Raises:
        ValueError: On arity mismatch or a zero gluing entry
    """
    _check_arity(G, twisters)
    for t in twisters:
        if any(not x for x in t.gluing):
            raise ValueError(f"twister of {t.owner} has a zero gluing entry")
    if not all(degree_condition(G, t) for t in twisters):
        return False
    for v in G.vertex_ids:
        if sum(t.degree_on(v) for t in twisters) != 0:
            return False
    product = _gluing_product(twisters)
    return all(x == product[0] for x in product)


def canonical_twisters(curve: TwoComponentCurve, direction: Sequence[Any]) -> Tuple[TwisterData, TwisterData]:
    """
    (T_{C_1}, T_{C_2}) glued along direction and its inverse.

    Raises:
        ValueError: If direction has the wrong length
    """
    if len(direction) != curve.delta:
        raise ValueError(f"direction has {len(direction)} entries, curve has {curve.delta} nodes")
    d = curve.delta
    first = TwisterData(owner="C1", multidegree={"C1": -d, "C2": d}, gluing=tuple(direction))
    second = TwisterData(
        owner="C2",
        multidegree={"C1": d, "C2": -d},
        gluing=tuple(x ** -1 for x in direction),
    )
    return first, second
