"""
Exact counting - binomial and multinomial coefficients, rational wire format

No floating point anywhere: weights are Fractions and every tightness claim
is an exact integer comparison.
"""

import math
from collections.abc import Sequence
from fractions import Fraction

from .error_types import ValidationError

# Weights of Eq. (1)/(4)/(8) and LYM sums
ExactRational = Fraction


def binomial(n: int, k: int) -> int:
    """
    C(n, k), zero outside 0 <= k <= n

    Raises:
        ValidationError: If n < 0
    """
    if n < 0:
        raise ValidationError(f"binomial needs n >= 0, got {n}", field="n")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    """
    (a_1 + ... + a_d)! / (a_1! ... a_d!)

    Raises:
        ValidationError: If any part is negative
    """
    total = 0
    result = 1
    for part in parts:
        if part < 0:
            raise ValidationError(f"multinomial parts must be >= 0, got {list(parts)}", field="parts")
        total += part
        result *= math.comb(total, part)
    return result


def format_rational(value: Fraction | int) -> str:
    """Always "p/q", including integers ("3/1")"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Inverse of format_rational (also accepts a bare integer)

    Raises:
        ValidationError: If the text is not a rational
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"Not a rational: {text!r}", field="rational") from exc
