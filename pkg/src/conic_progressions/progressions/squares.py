"""Squares in arithmetic progression: three squares, four squares and the X₀(24) curve."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from conic_progressions.arith.quadratic import Field, QuadExtElem, simplify, square_root_in, surd
from conic_progressions.arith.rational import RationalLike, as_rational, is_square
from conic_progressions.curves.family import ORIGIN, X024, twist_x024
from conic_progressions.curves.weierstrass import INFINITY, CurvePoint
from conic_progressions.errors import ExcludedLocusError, InvalidInputError, NotOnCurveError

Quadruple = tuple[Fraction, Fraction, Fraction, Fraction]

# Sign patterns of the rational 4-term square progressions and their images on X024.
_ROWS = (
    ((-1, -1, 1, 1), ORIGIN),
    ((-1, 1, -1, 1), INFINITY),
    ((-1, -1, -1, 1), CurvePoint(Fraction(-2), Fraction(2))),
    ((-1, 1, 1, 1), CurvePoint(Fraction(-2), Fraction(-2))),
    ((1, 1, 1, 1), CurvePoint(Fraction(-1), Fraction(0))),
    ((1, -1, -1, 1), CurvePoint(Fraction(-4), Fraction(0))),
    ((1, 1, -1, 1), CurvePoint(Fraction(2), Fraction(-6))),
    ((1, -1, 1, 1), CurvePoint(Fraction(2), Fraction(6))),
)
TABLE_ONE: tuple[tuple[Quadruple, CurvePoint], ...] = tuple(
    ((Fraction(a), Fraction(b), Fraction(c), Fraction(d)), point)
    for (a, b, c, d), point in _ROWS
)

FIVE_SQUARES_409: tuple[Fraction, ...] = tuple(Fraction(n) for n in (49, 169, 289, 409, 529))


def three_squares_roots(t: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    t = as_rational(t)
    return (t * t - 2 * t - 1, t * t + 1, t * t + 2 * t - 1)


def three_squares_param(t: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """((t²−2t−1)² : (t²+1)² : (t²+2t−1)²), with both gaps equal to 4(t³ − t)."""
    x1, x2, x3 = three_squares_roots(t)
    return (x1 * x1, x2 * x2, x3 * x3)


def three_squares_recover(x1: RationalLike, x2: RationalLike, x3: RationalLike) -> Fraction:
    """t = (x1 − x3)/(x1 − 2x2 + x3) for roots x1, x2, x3 of the squares."""
    x1, x2, x3 = as_rational(x1), as_rational(x2), as_rational(x3)
    den = x1 - 2 * x2 + x3
    if den == 0:
        raise ExcludedLocusError("x1 − 2x2 + x3 = 0; the roots are themselves in progression.")
    return (x1 - x3) / den


def four_squares_to_curve(
    x1: RationalLike, x2: RationalLike, x3: RationalLike, x4: RationalLike
) -> CurvePoint:
    """(2N1/S, 6N2/S) with S = x1 + 3x2 + 3x3 + x4, as a point of X024."""
    x1, x2, x3, x4 = (as_rational(x) for x in (x1, x2, x3, x4))
    s = x1 + 3 * x2 + 3 * x3 + x4
    n1 = x1 - 3 * x2 - 3 * x3 + x4
    n2 = x1 - x2 + x3 - x4
    if s != 0:
        return CurvePoint(2 * n1 / s, 6 * n2 / s)
    if n1 == 0 and n2 == 0:
        if x1 == 0:
            raise InvalidInputError("(0 : 0 : 0 : 0) is not a valid 4-tuple.")
        # (x : x : −x : −x) is the base point of the map.
        return ORIGIN
    if n1 == 0:
        return INFINITY
    raise ExcludedLocusError(f"({x1} : {x2} : {x3} : {x4}) maps off the curve (S = 0).")


def four_squares_from_point(point: CurvePoint) -> Quadruple:
    """The inverse ratio map from X024 back to (x1 : x2 : x3 : x4)."""
    if not X024.contains(point):
        raise NotOnCurveError(f"{point!r} is not on {X024}.")
    if point.is_infinity:
        return (Fraction(-1), Fraction(1), Fraction(-1), Fraction(1))
    if point == ORIGIN:
        return (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))
    x, y = point.X, point.Y
    return (
        6 * x + 3 * x * x - 2 * y + x * y,
        2 * x - x * x - 2 * y - x * y,
        2 * x - x * x + 2 * y + x * y,
        6 * x + 3 * x * x + 2 * y - x * y,
    )


def proportional(first: Sequence[Field], second: Sequence[Field]) -> bool:
    """True when the two tuples agree up to one nonzero scalar."""
    if len(first) != len(second):
        return False
    if not any(first) or not any(second):
        return False
    return all(
        not simplify(first[i] * second[j] - first[j] * second[i])
        for i in range(len(first))
        for j in range(i + 1, len(first))
    )


def twist_square_roots(
    k: RationalLike, U: RationalLike, V: RationalLike
) -> tuple[Field, Field, Field, Field]:
    """Roots y1..y4 over Q(√k) whose squares are in progression."""
    k, U, V = as_rational(k), as_rational(U), as_rational(V)
    twist = twist_x024(k)
    point = CurvePoint(U, V)
    if not twist.contains(point):
        raise NotOnCurveError(f"{point!r} is not on the twist {twist}.")
    if V == 0:
        raise InvalidInputError("V = 0 is a 2-torsion point and gives no progression.")
    root = surd(k)
    outer = 3 * k * U * (2 * k + U)
    inner = k * U * (2 * k - U)
    return (
        simplify(outer - root * V * (2 * k - U)),
        simplify(inner - root * V * (2 * k + U)),
        simplify(inner + root * V * (2 * k + U)),
        simplify(outer + root * V * (2 * k - U)),
    )


def four_squares_from_twist(
    k: RationalLike, U: RationalLike, V: RationalLike
) -> tuple[Field, Field, Field, Field]:
    roots = twist_square_roots(k, U, V)
    return tuple(simplify(r * r) for r in roots)  # type: ignore[return-value]


def _radicand_of(values: Sequence[Field]) -> int | None:
    for value in values:
        if isinstance(value, QuadExtElem):
            return value.radicand
    return None


def is_square_progression(values: Sequence[Field], radicand: int | None = None) -> bool:
    """Equal consecutive gaps and every term a square in Q or Q(√radicand)."""
    if len(values) < 2:
        return False
    radicand = radicand if radicand is not None else _radicand_of(values)
    terms = [simplify(v) for v in values]
    gap = simplify(terms[1] - terms[0])
    if any(simplify(b - a) != gap for a, b in zip(terms, terms[1:])):
        return False
    if radicand is None:
        return all(isinstance(v, Fraction) and is_square(v) for v in terms)
    return all(square_root_in(v, radicand) is not None for v in terms)
