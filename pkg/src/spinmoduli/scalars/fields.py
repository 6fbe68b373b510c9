"""
Coefficient fields in which directions of D_C are pulled back.

Pulling a line of D_C back to the blown-up local model needs square roots of
its direction entries. RationalField only has them for rational squares;
ExtensionField(q) works in F_{q^2}, where every element of F_q has both roots.
"""

from dataclasses import dataclass
from typing import Any, Tuple

from sympy import QQ

from .finite_field import Fq2Elem, FqElem, prime_field, sqrt_in_ext
from .rationals import Rational, as_rational, rational_sqrt


class RationalField:
    """QQ; square roots only for rational squares."""

    name = "QQ"

    @property
    def zero(self) -> Rational:
        return QQ(0)

    @property
    def one(self) -> Rational:
        return QQ(1)

    def coerce(self, value: Any) -> Rational:
        return as_rational(value)

    def square_roots(self, value: Any) -> Tuple[Rational, Rational]:
        """
        (r, -r) with r >= 0.

        Raises:
            ValueError: For zero, or when value is not a square in QQ
        """
        d = self.coerce(value)
        if d == 0:
            raise ValueError("degenerate direction")
        r = rational_sqrt(d)
        if r is None:
            raise ValueError(
                f"{d} has no square root in QQ; use the quadratic extension "
                "F_{q^2} (ExtensionField) instead"
            )
        return (r, -r)

    def sort_key(self, value: Rational) -> Tuple[int, int]:
        return (int(value.numerator), int(value.denominator))

    def render(self, value: Rational) -> str:
        return str(value)


@dataclass(frozen=True)
class ExtensionField:
    """F_{q^2} over F_q; direction entries are taken in F_q."""
    q: int

    def __post_init__(self) -> None:
        prime_field(self.q)

    @property
    def name(self) -> str:
        return f"F_{self.q}^2"

    @property
    def zero(self) -> Fq2Elem:
        return Fq2Elem.embed(0, self.q)

    @property
    def one(self) -> Fq2Elem:
        return Fq2Elem.embed(1, self.q)

    def coerce(self, value: Any) -> FqElem:
        if isinstance(value, FqElem):
            if value.q != self.q:
                raise ValueError(f"element of F_{value.q} used over F_{self.q}")
            return value
        return FqElem(int(value), self.q)

    def square_roots(self, value: Any) -> Tuple[Fq2Elem, Fq2Elem]:
        """Both roots, lexicographically smaller (a, b) pair first."""
        roots = sorted(sqrt_in_ext(self.coerce(value)), key=lambda r: r.key)
        return (roots[0], roots[1])

    def sort_key(self, value: Fq2Elem) -> Tuple[int, int]:
        return value.key

    def render(self, value: Fq2Elem) -> str:
        return str(value)
