"""
Odd prime fields F_q and their quadratic extension F_{q^2} = F_q[u]/(u^2 - n).

n is the smallest positive quadratic non-residue mod q, so the extension is
reproducible. Every nonzero element of F_q has exactly two square roots in
F_{q^2}; roots are compared through their (a, b) representation, and the
lexicographically smaller one is the canonical root.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, Tuple

from sympy import isprime
from sympy.ntheory.residue_ntheory import is_quad_residue, sqrt_mod


@dataclass(frozen=True)
class PrimeField:
    """F_q together with the non-residue defining F_{q^2}."""
    q: int
    nonresidue: int


@lru_cache(maxsize=None)
def prime_field(q: int) -> PrimeField:
    """
    Return the field descriptor for an odd prime q.

    Raises:
        ValueError: If q is even or not prime
    """
    if q % 2 == 0:
        raise ValueError(f"q must be an odd prime, got even {q}")
    if not isprime(q):
        raise ValueError(f"q must be an odd prime, got composite {q}")
    n = next(k for k in range(2, q) if not is_quad_residue(k, q))
    return PrimeField(q=q, nonresidue=n)


@dataclass(frozen=True)
class FqElem:
    """Residue value mod q, always stored in [0, q)."""
    value: int
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.q)

    def _coerce(self, other: "FqElem | int") -> "FqElem":
        if isinstance(other, FqElem):
            if other.q != self.q:
                raise ValueError(f"mixing F_{self.q} and F_{other.q}")
            return other
        return FqElem(int(other), self.q)

    def __add__(self, other: "FqElem | int") -> "FqElem":
        return FqElem(self.value + self._coerce(other).value, self.q)

    __radd__ = __add__

    def __sub__(self, other: "FqElem | int") -> "FqElem":
        return FqElem(self.value - self._coerce(other).value, self.q)

    def __rsub__(self, other: int) -> "FqElem":
        return self._coerce(other) - self

    def __mul__(self, other: "FqElem | int") -> "FqElem":
        return FqElem(self.value * self._coerce(other).value, self.q)

    __rmul__ = __mul__

    def __neg__(self) -> "FqElem":
        return FqElem(-self.value, self.q)

    def __pow__(self, exponent: int) -> "FqElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FqElem(pow(self.value, exponent, self.q), self.q)

    def inverse(self) -> "FqElem":
        if self.value == 0:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.q}")
        return FqElem(pow(self.value, -1, self.q), self.q)

    def __truediv__(self, other: "FqElem | int") -> "FqElem":
        return self * self._coerce(other).inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Fq2Elem:
    """a + b*u with u^2 = n, the fixed non-residue of F_q."""
    a: FqElem
    b: FqElem

    @property
    def q(self) -> int:
        return self.a.q

    @property
    def key(self) -> Tuple[int, int]:
        return (self.a.value, self.b.value)

    @classmethod
    def from_ints(cls, a: int, b: int, q: int) -> "Fq2Elem":
        return cls(FqElem(a, q), FqElem(b, q))

    @classmethod
    def embed(cls, x: "FqElem | int", q: int) -> "Fq2Elem":
        return cls.from_ints(int(x), 0, q)

    def _coerce(self, other: "Fq2Elem | FqElem | int") -> "Fq2Elem":
        if isinstance(other, Fq2Elem):
            if other.q != self.q:
                raise ValueError(f"mixing F_{self.q}^2 and F_{other.q}^2")
            return other
        return Fq2Elem.embed(other, self.q)

    def __add__(self, other: "Fq2Elem | FqElem | int") -> "Fq2Elem":
        o = self._coerce(other)
        return Fq2Elem(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: "Fq2Elem | FqElem | int") -> "Fq2Elem":
        o = self._coerce(other)
        return Fq2Elem(self.a - o.a, self.b - o.b)

    def __neg__(self) -> "Fq2Elem":
        return Fq2Elem(-self.a, -self.b)

    def __mul__(self, other: "Fq2Elem | FqElem | int") -> "Fq2Elem":
        o = self._coerce(other)
        n = prime_field(self.q).nonresidue
        return Fq2Elem(self.a * o.a + self.b * o.b * n, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def norm(self) -> FqElem:
        n = prime_field(self.q).nonresidue
        return self.a * self.a - self.b * self.b * n

    def conjugate(self) -> "Fq2Elem":
        return Fq2Elem(self.a, -self.b)

    def inverse(self) -> "Fq2Elem":
        norm = self.norm()
        if not norm:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.q}^2")
        inv = norm.inverse()
        return Fq2Elem(self.a * inv, -self.b * inv)

    def __truediv__(self, other: "Fq2Elem | FqElem | int") -> "Fq2Elem":
        return self * self._coerce(other).inverse()

    def __pow__(self, exponent: int) -> "Fq2Elem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Fq2Elem.embed(1, self.q)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def in_base_field(self) -> bool:
        return not self.b

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}u"
        return f"{self.a}+{self.b}u"


def is_square(a: FqElem) -> bool:
    """
    Quadratic residuosity of a nonzero a in F_q.

    Raises:
        ValueError: For a == 0
    """
    if not a:
        raise ValueError("zero has trivial square root; use sqrt_in_ext")
    return is_quad_residue(a.value, a.q)


def sqrt_in_ext(a: FqElem) -> FrozenSet[Fq2Elem]:
    """
    Both square roots of a nonzero a in F_{q^2}.

    Squares of F_q have their roots in F_q; for a non-square, a/n is a
    square and the roots are ±sqrt(a/n)*u.

    Raises:
        ValueError: "degenerate direction" for a == 0
    """
    if not a:
        raise ValueError("degenerate direction")
    q = a.q
    if is_square(a):
        roots = sqrt_mod(a.value, q, all_roots=True)
        return frozenset(Fq2Elem.from_ints(r, 0, q) for r in roots)
    n = prime_field(q).nonresidue
    b = sqrt_mod((a / n).value, q)
    return frozenset({Fq2Elem.from_ints(0, b, q), Fq2Elem.from_ints(0, -b, q)})


@lru_cache(maxsize=None)
def _canonical_sqrt_table(q: int) -> Tuple[Fq2Elem, ...]:
    table = [Fq2Elem.embed(0, q)]
    for value in range(1, q):
        table.append(min(sqrt_in_ext(FqElem(value, q)), key=lambda r: r.key))
    return tuple(table)


def canonical_sqrt(a: FqElem) -> Fq2Elem:
    """The square root of a with the lexicographically smaller (a, b) pair."""
    if not a:
        raise ValueError("degenerate direction")
    return _canonical_sqrt_table(a.q)[a.value]


def nonzero_elements(q: int) -> Iterator[FqElem]:
    for value in range(1, q):
        yield FqElem(value, q)


def extension_elements(q: int) -> Iterator[Fq2Elem]:
    """All q^2 elements of F_{q^2} in (a, b) order."""
    for a in range(q):
        for b in range(q):
            yield Fq2Elem.from_ints(a, b, q)
