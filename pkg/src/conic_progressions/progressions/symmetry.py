"""The dihedral action generated by σ = translation by (0, 0) and τ = negation on E_k."""

from __future__ import annotations

from fractions import Fraction

from conic_progressions.arith.rational import RationalLike, as_rational
from conic_progressions.curves.family import ORIGIN, ek_weierstrass
from conic_progressions.curves.weierstrass import CurvePoint
from conic_progressions.errors import ExcludedLocusError, NotOnCurveError
from conic_progressions.progressions.seed import SlopePair


def _require_on_ek(k: Fraction, point: CurvePoint) -> None:
    if not ek_weierstrass(k).contains(point):
        raise NotOnCurveError(f"{point!r} is not on E_{k}.")


def sigma_action(k: RationalLike, point: CurvePoint) -> CurvePoint:
    """σ(P) = (0, 0) ⊕ P, i.e. (X, Y) ↦ (−4kY/X², 4k²(X² − 4Y)/X³) where X ≠ 0."""
    k = as_rational(k)
    _require_on_ek(k, point)
    if point.is_infinity or point.X == 0:
        return ek_weierstrass(k).add(ORIGIN, point)
    x, y = point.X, point.Y
    return CurvePoint(-4 * k * y / (x * x), 4 * k * k * (x * x - 4 * y) / x**3)


def tau_action(k: RationalLike, point: CurvePoint) -> CurvePoint:
    """τ(P) = ⊖P, i.e. (X, Y) ↦ (X, −Y − 4X − 4k)."""
    k = as_rational(k)
    _require_on_ek(k, point)
    if point.is_infinity:
        return point
    return CurvePoint(point.X, -point.Y - 4 * point.X - 4 * k)


def sigma_uv(c1: RationalLike, c2: RationalLike, pair: SlopePair) -> SlopePair:
    c1, c2 = as_rational(c1), as_rational(c2)
    den = 2 * pair.v + c1
    if den == 0:
        raise ExcludedLocusError(f"2v + c1 = 0 for {pair!r}.")
    return SlopePair((c1 * pair.v + 2 * c2) / den, -pair.u)


def tau_uv(pair: SlopePair) -> SlopePair:
    return SlopePair(-pair.v, -pair.u)
