"""
Local equations of D_X at a singular spin curve.

At a spin curve supported on the blow-up at every node of a two-component
curve, Aut(xi) = {id, t -> -t} and D_X = D_C / Aut(xi). The invariants
w_ij = t_i t_j (1 <= i <= j <= delta) satisfy

    w_ii w_jj - w_ij^2                (i < j)
    w_ii w_jj w_kk - w_ij w_jk w_ik   (i < j < k)

All polynomials live in one sympy sparse ring over QQ with graded-lex order
whose variables are t_i, w_ij and the chart coordinates a_is (i != s).
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, List, Tuple

from sympy import Matrix, QQ, symbols
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from ..core.constants import MAX_SYMBOLIC_NODES
from ..core.types import CheckResult, VerificationReport

Poly = PolyElement


@dataclass(frozen=True)
class LocalRing:
    """
    QQ[t_i, w_ij, a_is] for a fixed delta, indices 1-based.

    Attributes:
        delta: Number of nodes
        ring: sympy PolyRing over QQ, grlex order
        t: Generators t_1..t_delta
        w: Generators w_ij keyed by (i, j), i <= j
        alpha: Generators a_is keyed by (i, s), i != s
    """
    delta: int
    ring: PolyRing
    t: Tuple[Poly, ...]
    w: Dict[Tuple[int, int], Poly]
    alpha: Dict[Tuple[int, int], Poly]

    def w_(self, i: int, j: int) -> Poly:
        return self.w[(min(i, j), max(i, j))]

    def w_pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.w)


@lru_cache(maxsize=None)
def local_ring(delta: int) -> LocalRing:
    if delta < 1:
        raise ValueError(f"delta must be at least 1, got {delta}")
    if delta > MAX_SYMBOLIC_NODES:
        raise ValueError(f"delta={delta} exceeds the symbolic chart cap {MAX_SYMBOLIC_NODES}")
    idx = range(1, delta + 1)
    w_keys = [(i, j) for i in idx for j in idx if i <= j]
    a_keys = [(i, s) for s in idx for i in idx if i != s]
    names = (
        [f"t{i}" for i in idx]
        + [f"w{i}_{j}" for i, j in w_keys]
        + [f"a{i}_{s}" for i, s in a_keys]
    )
    ring = PolyRing(symbols(names), QQ, grlex)
    gens = ring.gens
    t = tuple(gens[:delta])
    w = dict(zip(w_keys, gens[delta:delta + len(w_keys)]))
    alpha = dict(zip(a_keys, gens[delta + len(w_keys):]))
    return LocalRing(delta=delta, ring=ring, t=t, w=w, alpha=alpha)


@dataclass(frozen=True)
class IdealPresentation:
    """
    Generators of an ideal in the local ring.

    Attributes:
        delta: Number of nodes
        generators: Polynomials in the w-variables
        labels: Index tuple per generator ((i, j) for quadrics, (i, j, k) for cubics)
    """
    delta: int
    generators: Tuple[Poly, ...]
    labels: Tuple[Tuple[int, ...], ...] = field(default=())

    @property
    def local(self) -> LocalRing:
        return local_ring(self.delta)

    @property
    def quadric_count(self) -> int:
        return sum(1 for label in self.labels if len(label) == 2)

    @property
    def cubic_count(self) -> int:
        return sum(1 for label in self.labels if len(label) == 3)


def dx_ideal(delta: int) -> IdealPresentation:
    """
    Equations of D_X: C(delta,2) quadrics followed by C(delta,3) cubics.

    Raises:
        ValueError: For delta < 2, where D_X is smooth
    """
    if delta < 2:
        raise ValueError("D_X smooth, no local model needed")
    R = local_ring(delta)
    gens: List[Poly] = []
    labels: List[Tuple[int, ...]] = []
    idx = range(1, delta + 1)
    for i, j in combinations(idx, 2):
        gens.append(R.w_(i, i) * R.w_(j, j) - R.w_(i, j) ** 2)
        labels.append((i, j))
    for i, j, k in combinations(idx, 3):
        gens.append(R.w_(i, i) * R.w_(j, j) * R.w_(k, k) - R.w_(i, j) * R.w_(j, k) * R.w_(i, k))
        labels.append((i, j, k))
    return IdealPresentation(delta=delta, generators=tuple(gens), labels=tuple(labels))


def invariant_substitution(R: LocalRing) -> List[Tuple[Poly, Poly]]:
    """w_ij -> t_i t_j."""
    return [(R.w[(i, j)], R.t[i - 1] * R.t[j - 1]) for i, j in R.w_pairs()]


def _monomial(R: LocalRing, exponents: Tuple[int, ...]) -> Poly:
    m = R.ring.one
    for i, e in enumerate(exponents):
        if e:
            m *= R.t[i] ** e
    return m


def _pairing(indices: Tuple[int, ...]) -> List[Tuple[int, int]]:
    """Pair consecutive entries of a sorted index multiset of even length."""
    return [(indices[k], indices[k + 1]) for k in range(0, len(indices), 2)]


def invariant_presentation_check(delta: int, degree_bound: int) -> VerificationReport:
    """
    Check the presentation of D_X as the quotient D_C / (t -> -t).

    (a) every generator vanishes under w_ij = t_i t_j;
    (b) every even-degree monomial in t of degree <= degree_bound is a product
        of the t_i t_j (constructive pairing of its exponent multiset);
    (c) odd-degree monomials are not invariant under t -> -t.

    Raises:
        ValueError: If degree_bound is not an even integer >= 2
    """
    if degree_bound < 2 or degree_bound % 2:
        raise ValueError(f"degree bound must be an even integer >= 2, got {degree_bound}")
    ideal = dx_ideal(delta)
    R = ideal.local
    report = VerificationReport(title="invariant-presentation")
    report.notes.append(
        f"generation of all relations among t_i t_j is not established; "
        f"monomials were checked only up to degree {degree_bound}"
    )

    subs = invariant_substitution(R)
    bad = [str(g) for g in ideal.generators if g.compose(subs)]
    report.add(CheckResult(
        name="generators-vanish",
        passed=not bad,
        detail=f"{len(ideal.generators)} generators under w_ij = t_i t_j",
        witness=bad[0] if bad else None,
    ))

    even_checked = 0
    even_witness = None
    for d in range(2, degree_bound + 1, 2):
        for indices in combinations_with_replacement(range(1, delta + 1), d):
            exponents = tuple(indices.count(i) for i in range(1, delta + 1))
            product = R.ring.one
            for i, j in _pairing(indices):
                product *= R.w_(i, j)
            even_checked += 1
            if product.compose(subs) != _monomial(R, exponents) and even_witness is None:
                even_witness = list(exponents)
    report.add(CheckResult(
        name="even-monomials-expressible",
        passed=even_witness is None,
        detail=f"{even_checked} even monomials of degree <= {degree_bound}",
        witness=even_witness,
        data={"checked": even_checked},
    ))

    beta = [(t, -t) for t in R.t]
    odd_checked = 0
    odd_witness = None
    for d in range(1, degree_bound, 2):
        for indices in combinations_with_replacement(range(1, delta + 1), d):
            exponents = tuple(indices.count(i) for i in range(1, delta + 1))
            m = _monomial(R, exponents)
            odd_checked += 1
            if m.compose(beta) == m and odd_witness is None:
                odd_witness = list(exponents)
    report.add(CheckResult(
        name="odd-monomials-not-invariant",
        passed=odd_witness is None,
        detail=f"{odd_checked} odd monomials of degree < {degree_bound}",
        witness=odd_witness,
        data={"checked": odd_checked},
    ))
    return report


def jacobian_rank_at_origin(ideal: IdealPresentation) -> int:
    """
    Rank of the Jacobian of the generators with respect to the w-variables at w = 0.

    Raises:
        ValueError: If a generator has a constant term
    """
    R = ideal.local
    zero = R.ring.zero_monom
    rows = []
    for g in ideal.generators:
        if g.get(zero, QQ.zero):
            raise ValueError(f"generator {g} does not vanish at the origin")
        row = []
        for key in R.w_pairs():
            partial = g.diff(R.w[key])
            row.append(QQ.to_sympy(partial.get(zero, QQ.zero)))
        rows.append(row)
    if not rows:
        return 0
    return Matrix(rows).rank()


def codimension(delta: int) -> int:
    """Codimension of D_X (dimension delta) in the w-space of dimension C(delta+1, 2)."""
    return comb(delta + 1, 2) - delta


def linear_ideal(delta: int, keys: List[Tuple[int, int]]) -> IdealPresentation:
    """Ideal generated by single w-variables; a smooth reference case for the rank test."""
    R = local_ring(delta)
    return IdealPresentation(
        delta=delta,
        generators=tuple(R.w_(i, j) for i, j in keys),
        labels=tuple(tuple(k) for k in keys),
    )
