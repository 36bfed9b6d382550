"""Rational parametrization of the singular member k = 1."""

from __future__ import annotations

from fractions import Fraction

from conic_progressions.arith.rational import RationalLike, as_rational
from conic_progressions.curves.family import singular_cubic
from conic_progressions.curves.weierstrass import CurvePoint
from conic_progressions.errors import ExcludedLocusError, NotOnCurveError, PoleError

SINGULAR_POINT = CurvePoint(Fraction(-2), Fraction(2))


def singular_param(t: RationalLike) -> CurvePoint:
    """(−4t/(t+1)², 4(t−1)/(t+1)³) on Y² + 4XY + 4Y = X³ + X²."""
    t = as_rational(t)
    if t == -1:
        raise PoleError("t = −1 is the pole of the parametrization.")
    s = t + 1
    return CurvePoint(-4 * t / (s * s), 4 * (t - 1) / s**3)


def singular_param_inverse(point: CurvePoint) -> Fraction:
    """t = −(Y + 3X + 4)/(Y + X)."""
    if not singular_cubic().contains(point):
        raise NotOnCurveError(f"{point!r} is not on the singular cubic.")
    if point.is_infinity or point.X + point.Y == 0:
        raise ExcludedLocusError(f"Y + X = 0 at {point!r}.")
    return -(point.Y + 3 * point.X + 4) / (point.Y + point.X)
