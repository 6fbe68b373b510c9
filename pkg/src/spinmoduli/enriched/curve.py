"""Two smooth components of positive genus meeting in delta nodes."""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Tuple

from ..graphs.dualgraph import DualGraph, two_component_graph

NodeSet = Tuple[int, ...]


@dataclass(frozen=True)
class TwoComponentCurve:
    """
    C = C_1 u C_2 with nodes p_1..p_delta.

    Attributes:
        g1: Genus of C_1, at least 1
        g2: Genus of C_2, at least 1
        delta: Number of nodes, at least 1
    """
    g1: int
    g2: int
    delta: int

    def __post_init__(self) -> None:
        if self.g1 < 1 or self.g2 < 1:
            raise ValueError(f"component genera must be at least 1, got g1={self.g1}, g2={self.g2}")
        if self.delta < 1:
            raise ValueError(f"delta must be at least 1, got {self.delta}")

    @property
    def genus(self) -> int:
        return self.g1 + self.g2 + self.delta - 1

    @property
    def j2_rank(self) -> int:
        """Rank of J_2(C^nu) = (Z/2)^{2(g1+g2)}."""
        return 2 * (self.g1 + self.g2)

    @property
    def j2_order(self) -> int:
        return 2 ** self.j2_rank

    @property
    def nodes(self) -> NodeSet:
        return tuple(range(1, self.delta + 1))

    def to_dual_graph(self) -> DualGraph:
        return two_component_graph(self.g1, self.g2, self.delta)

    def proper_subsets(self) -> Iterator[NodeSet]:
        """Proper node subsets I, 1-based, by size then lexicographically."""
        for size in range(self.delta):
            yield from combinations(self.nodes, size)

    def complement(self, I: NodeSet) -> NodeSet:
        return tuple(i for i in self.nodes if i not in I)

    def check_subset(self, I: NodeSet) -> NodeSet:
        """
        Sorted copy of I.

        Raises:
            ValueError: If I is not a proper subset of the nodes
        """
        subset = tuple(sorted(set(I)))
        if any(i not in self.nodes for i in subset):
            raise ValueError(f"node subset {list(I)} is not contained in 1..{self.delta}")
        if len(subset) >= self.delta:
            raise ValueError(f"node subset {list(I)} must be proper")
        return subset


def support_name(I: NodeSet) -> str:
    """C for the empty subset, X_{i,j,...} otherwise."""
    if not I:
        return "C"
    return "X_{" + ",".join(str(i) for i in I) + "}"
