"""Congruent numbers and their Frey-curve generalization.

A nonzero δ is a congruum when any of these equivalent objects exists:
three squares x1², x2², x3² with common gap δ, a point with Y ≠ 0 on
Y² = X³ − δ²X, or a rational right triangle of area δ. Around a general
conic the gaps on either side of t differ, and the same maps run through
the quantities A, B, C of :class:`FreyTriple` and the curve Y² = X(X − A)(X + B).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from conic_progressions.arith.rational import RationalLike, as_rational
from conic_progressions.curves.family import congruent_curve
from conic_progressions.curves.search import rational_points
from conic_progressions.curves.weierstrass import CurvePoint, WeierstrassCurve
from conic_progressions.errors import (
    ExcludedLocusError,
    InvalidInputError,
    NotOnCurveError,
    PointNotFoundError,
    TrivialProgressionError,
)
from conic_progressions.geometry.conic import QuadPoly

LOGGER = logging.getLogger(__name__)

Squares = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True, slots=True)
class Triangle:
    """Sides a, b, c with a² − 2ab·cosθ + b² = c²; cosθ = 0 for right triangles."""

    a: Fraction
    b: Fraction
    c: Fraction
    cos_theta: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "cos_theta"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        self.validate()

    def validate(self) -> None:
        lhs = self.a**2 - 2 * self.a * self.b * self.cos_theta + self.b**2
        if lhs != self.c**2:
            raise InvalidInputError(
                f"Sides ({self.a}, {self.b}, {self.c}) violate the cosine law for cosθ={self.cos_theta}."
            )

    @property
    def area_squared_times_four(self) -> Fraction:
        """(ab·sinθ)², kept rational as (ab)²(1 − cos²θ)."""
        return (self.a * self.b) ** 2 * (1 - self.cos_theta**2)


@dataclass(frozen=True, slots=True)
class FreyTriple:
    """Gaps of Disc around t: A = Disc(t) − Disc(t−δ), B = Disc(t+δ) − Disc(t), C = A + B."""

    gap_a: Fraction
    gap_b: Fraction
    gap_c: Fraction

    def __post_init__(self) -> None:
        for name in ("gap_a", "gap_b", "gap_c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.gap_c != self.gap_a + self.gap_b:
            raise InvalidInputError("C must equal A + B.")

    @classmethod
    def congruum(cls, delta: RationalLike) -> "FreyTriple":
        delta = as_rational(delta)
        return cls(delta, delta, 2 * delta)

    @property
    def cos_theta(self) -> Fraction:
        if self.gap_c == 0:
            raise ExcludedLocusError("C = 0; the angle is undefined.")
        return (self.gap_b - self.gap_a) / self.gap_c


def frey_quantities(disc: QuadPoly, t: RationalLike, delta: RationalLike) -> FreyTriple:
    t, delta = as_rational(t), as_rational(delta)
    return FreyTriple(
        disc(t) - disc(t - delta),
        disc(t + delta) - disc(t),
        disc(t + delta) - disc(t - delta),
    )


def frey_quantities_taylor(disc: QuadPoly, t: RationalLike, delta: RationalLike) -> FreyTriple:
    """The same gaps from Disc′ and Disc″; equal to :func:`frey_quantities` exactly."""
    t, delta = as_rational(t), as_rational(delta)
    first = disc.derivative(t) * delta
    second = disc.second_derivative(t) * delta * delta / 2
    return FreyTriple(first - second, first + second, 2 * first)


def frey_curve(triple: FreyTriple) -> WeierstrassCurve:
    """Y² = X(X − A)(X + B) = X³ + (B − A)X² − ABX."""
    a, b = triple.gap_a, triple.gap_b
    return WeierstrassCurve(Fraction(0), b - a, Fraction(0), -a * b, Fraction(0))


def frey_ap_to_curve(
    x1: RationalLike, x2: RationalLike, x3: RationalLike, triple: FreyTriple
) -> CurvePoint:
    x1, x2, x3 = as_rational(x1), as_rational(x2), as_rational(x3)
    a, b, c = triple.gap_a, triple.gap_b, triple.gap_c
    if x2 * x2 - x1 * x1 != a or x3 * x3 - x2 * x2 != b:
        raise InvalidInputError(f"({x1}, {x2}, {x3}) do not have square gaps ({a}, {b}).")
    if a * b * c == 0:
        raise TrivialProgressionError("A, B and C must all be nonzero.")
    den = b * x1 - c * x2 + a * x3
    if den == 0:
        raise ExcludedLocusError("B·x1 − C·x2 + A·x3 = 0.")
    return CurvePoint(a * b * (x1 - x3) / den, -a * b * c / den)


def frey_curve_to_ap(point: CurvePoint, triple: FreyTriple) -> Squares:
    curve = frey_curve(triple)
    if not curve.contains(point):
        raise NotOnCurveError(f"{point!r} is not on {curve}.")
    if point.is_infinity or point.Y == 0:
        raise ExcludedLocusError("Y = 0 gives no square progression.")
    x, y = point.X, point.Y
    ab = triple.gap_a * triple.gap_b
    return (
        (x * x - 2 * triple.gap_a * x - ab) / (2 * y),
        (x * x + ab) / (2 * y),
        (x * x + 2 * triple.gap_b * x - ab) / (2 * y),
    )


def frey_curve_to_triangle(point: CurvePoint, triple: FreyTriple) -> Triangle:
    curve = frey_curve(triple)
    if not curve.contains(point):
        raise NotOnCurveError(f"{point!r} is not on {curve}.")
    if point.is_infinity or point.Y == 0:
        raise ExcludedLocusError("Y = 0 gives no triangle.")
    x, y = point.X, point.Y
    a, b, c = triple.gap_a, triple.gap_b, triple.gap_c
    return Triangle(
        (x * x + (b - a) * x - a * b) / y,
        c * x / y,
        (x * x + a * b) / y,
        triple.cos_theta,
    )


def frey_triangle_to_curve(triangle: Triangle, triple: FreyTriple) -> CurvePoint:
    a, b, c = triple.gap_a, triple.gap_b, triple.gap_c
    den = (b - a) * triangle.b + c * (triangle.c - triangle.a)
    if den == 0:
        raise ExcludedLocusError("(B − A)·b + C·(c − a) = 0.")
    return CurvePoint(2 * a * b * triangle.b / den, 2 * a * b * c / den)


def _nonzero_delta(delta: RationalLike) -> Fraction:
    delta = as_rational(delta)
    if delta == 0:
        raise InvalidInputError("δ must be nonzero.")
    return delta


def congruum_ap_to_curve(
    x1: RationalLike, x2: RationalLike, x3: RationalLike, delta: RationalLike
) -> CurvePoint:
    """X = (x1 − x3)δ/(x1 − 2x2 + x3), Y = −2δ²/(x1 − 2x2 + x3)."""
    x1, x2, x3 = as_rational(x1), as_rational(x2), as_rational(x3)
    if x1 == x2 == x3:
        raise TrivialProgressionError("Equal squares give δ = 0.")
    delta = _nonzero_delta(delta)
    if x2 * x2 - x1 * x1 != delta or x3 * x3 - x2 * x2 != delta:
        raise InvalidInputError(f"{x1}², {x2}², {x3}² are not in progression with gap {delta}.")
    den = x1 - 2 * x2 + x3
    if den == 0:
        raise ExcludedLocusError("x1 − 2x2 + x3 = 0.")
    return CurvePoint((x1 - x3) * delta / den, -2 * delta * delta / den)


def congruum_curve_to_ap(point: CurvePoint, delta: RationalLike) -> Squares:
    delta = _nonzero_delta(delta)
    curve = congruent_curve(delta)
    if not curve.contains(point):
        raise NotOnCurveError(f"{point!r} is not on {curve}.")
    if point.is_infinity or point.Y == 0:
        raise ExcludedLocusError("Y = 0 gives no square progression.")
    x, y = point.X, point.Y
    d2 = delta * delta
    return (
        (x * x - 2 * delta * x - d2) / (2 * y),
        (x * x + d2) / (2 * y),
        (x * x + 2 * delta * x - d2) / (2 * y),
    )


def congruum_curve_to_triangle(point: CurvePoint, delta: RationalLike) -> Triangle:
    """a = (X² − δ²)/Y, b = 2δX/Y, c = (X² + δ²)/Y; a right triangle of area δ."""
    delta = _nonzero_delta(delta)
    curve = congruent_curve(delta)
    if not curve.contains(point):
        raise NotOnCurveError(f"{point!r} is not on {curve}.")
    if point.is_infinity or point.Y == 0:
        raise ExcludedLocusError("Y = 0 gives no triangle.")
    x, y = point.X, point.Y
    d2 = delta * delta
    return Triangle((x * x - d2) / y, 2 * delta * x / y, (x * x + d2) / y)


def congruum_triangle_to_curve(triangle: Triangle, delta: RationalLike | None = None) -> CurvePoint:
    """X = bδ/(c − a), Y = 2δ²/(c − a); δ defaults to the area ab/2."""
    if triangle.cos_theta != 0:
        raise InvalidInputError("A congruum triangle must be right-angled.")
    area = triangle.a * triangle.b / 2
    delta = area if delta is None else _nonzero_delta(delta)
    if delta != area:
        raise InvalidInputError(f"Triangle area {area} differs from δ = {delta}.")
    if delta == 0:
        raise InvalidInputError("A degenerate triangle has area 0.")
    den = triangle.c - triangle.a
    if den == 0:
        raise ExcludedLocusError("c = a; the triangle is degenerate.")
    return CurvePoint(triangle.b * delta / den, 2 * delta * delta / den)


def congruent_point_search(delta: RationalLike, height_bound: int, workers: int = 1) -> CurvePoint:
    """First point with Y ≠ 0 on Y² = X³ − δ²X in height order."""
    delta = _nonzero_delta(delta)
    for point in rational_points(congruent_curve(delta), height_bound, workers):
        if not point.is_infinity and point.Y != 0:
            LOGGER.info("δ=%s: found %r", delta, point)
            return point
    raise PointNotFoundError(
        f"No point with Y ≠ 0 on Y² = X³ − ({delta})²X with height(X) <= {height_bound}."
    )
