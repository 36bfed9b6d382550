"""Exact rational helpers: square roots, squarefree parts, heights and text forms."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from sympy import factorint

from conic_progressions.errors import InvalidInputError

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; floats are refused."""
    if isinstance(value, bool):
        raise InvalidInputError("Booleans are not rationals.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInputError(f"Expected an exact rational, got {type(value).__name__}.")


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise InvalidInputError(f"'{text}' is not of the form p or p/q.")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InvalidInputError(f"'{text}' has a zero denominator.")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rat_sqrt(value: RationalLike) -> Fraction | None:
    """Return the nonnegative square root of ``value`` if it is a rational square."""
    q = as_rational(value)
    if q < 0:
        return None
    num_root = math.isqrt(q.numerator)
    if num_root * num_root != q.numerator:
        return None
    den_root = math.isqrt(q.denominator)
    if den_root * den_root != q.denominator:
        return None
    return Fraction(num_root, den_root)


def is_square(value: RationalLike) -> bool:
    return rat_sqrt(value) is not None


def squarefree_decompose(value: RationalLike) -> tuple[int, Fraction]:
    """Write ``value`` as m²·d with d a squarefree integer and m > 0."""
    q = as_rational(value)
    if q == 0:
        raise InvalidInputError("Zero has no squarefree decomposition.")
    # p/q = (p*q) / q**2, so only the integer p*q needs factoring.
    squared_part, squarefree = _split_integer(abs(q.numerator) * q.denominator)
    sign = -1 if q < 0 else 1
    return sign * squarefree, Fraction(squared_part, q.denominator)


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return _split_integer(abs(n))[0] == 1


@lru_cache(maxsize=4096)
def _split_integer(n: int) -> tuple[int, int]:
    root, free = 1, 1
    for prime, exponent in factorint(n).items():
        root *= prime ** (exponent // 2)
        if exponent % 2:
            free *= prime
    return root, free


def height(value: RationalLike) -> int:
    q = as_rational(value)
    return max(abs(q.numerator), q.denominator)


def rationals_of_height(h: int) -> list[Fraction]:
    """All rationals of height exactly ``h``, sorted by value."""
    if h < 1:
        return []
    if h == 1:
        return [Fraction(-1), Fraction(0), Fraction(1)]
    values = set()
    for other in range(1, h + 1):
        if math.gcd(h, other) != 1:
            continue
        values.add(Fraction(h, other))
        values.add(Fraction(-h, other))
        if other < h:
            values.add(Fraction(other, h))
            values.add(Fraction(-other, h))
    return sorted(values)


def rationals_by_height(bound: int) -> Iterator[Fraction]:
    """Every rational of height ≤ ``bound`` once, by height then value."""
    for h in range(1, bound + 1):
        yield from rationals_of_height(h)
