"""
Exact rational coefficients.

Coefficients of the local model are elements of sympy's QQ domain, which keeps
every value reduced with a positive denominator.
"""

from typing import Optional, Union

from sympy import QQ, integer_nthroot

Rational = QQ.dtype

RationalLike = Union[int, Rational]


def rational(numerator: int, denominator: int = 1) -> Rational:
    """
    Build a reduced rational numerator/denominator.

    Raises:
        ValueError: If denominator is zero
    """
    if denominator == 0:
        raise ValueError("rational with zero denominator")
    return QQ(numerator, denominator)


def as_rational(value: RationalLike) -> Rational:
    if isinstance(value, Rational):
        return value
    return QQ(int(value))


def rational_sqrt(value: RationalLike) -> Optional[Rational]:
    """
    Return the non-negative square root of value when it lies in QQ.

    Args:
        value: A rational number

    Returns:
        r >= 0 with r*r == value, or None when value is not a rational square

    Example:
        >>> rational_sqrt(QQ(9, 4))
        3/2
    """
    r = as_rational(value)
    if r < 0:
        return None
    num, num_exact = integer_nthroot(int(r.numerator), 2)
    den, den_exact = integer_nthroot(int(r.denominator), 2)
    if not (num_exact and den_exact):
        return None
    return QQ(num, den)
