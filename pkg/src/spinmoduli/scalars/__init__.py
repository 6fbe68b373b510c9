"""Exact arithmetic: rationals, odd prime fields and their quadratic extension."""

from .fields import ExtensionField, RationalField
from .finite_field import (
    Fq2Elem,
    FqElem,
    PrimeField,
    canonical_sqrt,
    extension_elements,
    is_square,
    nonzero_elements,
    prime_field,
    sqrt_in_ext,
)
from .rationals import Rational, as_rational, rational, rational_sqrt

__all__ = [
    "ExtensionField",
    "Fq2Elem",
    "FqElem",
    "PrimeField",
    "Rational",
    "RationalField",
    "as_rational",
    "canonical_sqrt",
    "extension_elements",
    "is_square",
    "nonzero_elements",
    "prime_field",
    "rational",
    "rational_sqrt",
    "sqrt_in_ext",
]
