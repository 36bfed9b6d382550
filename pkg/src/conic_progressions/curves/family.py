"""The 4-torsion family E_k and the other named curves of the construction."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from conic_progressions.arith.quadratic import surd
from conic_progressions.arith.rational import RationalLike, as_rational
from conic_progressions.curves.weierstrass import (
    INFINITY,
    CurvePoint,
    WeierstrassChange,
    WeierstrassCurve,
)
from conic_progressions.errors import (
    InvalidInputError,
    NotOnCurveError,
    NotOrderFourError,
    SingularCurveError,
)

LOGGER = logging.getLogger(__name__)

ProjectiveTriple = tuple[Fraction, Fraction, Fraction]

ORIGIN = CurvePoint(Fraction(0), Fraction(0))

X024 = WeierstrassCurve(Fraction(0), Fraction(5), Fraction(0), Fraction(4), Fraction(0))


def ek_weierstrass(k: RationalLike) -> WeierstrassCurve:
    """Y² + 4XY + 4kY = X³ + kX² without any smoothness check."""
    k = as_rational(k)
    return WeierstrassCurve(Fraction(4), k, 4 * k, Fraction(0), Fraction(0))


@dataclass(frozen=True, slots=True)
class EkCurve:
    """E_k: Y² + 4XY + 4kY = X³ + kX², with (0, 0) of order 4."""

    k: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", as_rational(self.k))
        if self.k in (0, 1):
            raise SingularCurveError(f"E_k is singular for k = {self.k}.")

    @property
    def curve(self) -> WeierstrassCurve:
        return ek_weierstrass(self.k)

    @property
    def base_point(self) -> CurvePoint:
        return ORIGIN

    def contains(self, point: CurvePoint) -> bool:
        return self.curve.contains(point)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        return self.curve.add(p, q)

    def neg(self, p: CurvePoint) -> CurvePoint:
        return self.curve.neg(p)

    def mul(self, n: int, p: CurvePoint) -> CurvePoint:
        return self.curve.mul(n, p)

    def j_invariant(self) -> Fraction:
        return self.curve.j_invariant()


def singular_cubic() -> WeierstrassCurve:
    """The k = 1 member Y² + 4XY + 4Y = X³ + X², singular at (−2, 2)."""
    return ek_weierstrass(1)


def four_mult_formula(k2: RationalLike, k3: RationalLike) -> ProjectiveTriple:
    """[4](0:0:1) on Y² + 4XY + 4k3·Y = X³ + k2·X² as a projective triple."""
    k2, k3 = as_rational(k2), as_rational(k3)
    curve = WeierstrassCurve(Fraction(4), k2, 4 * k3, Fraction(0), Fraction(0))
    curve.require_elliptic()
    gap = k3 - k2
    return (
        4 * k2 * gap * (16 * k3 * k3 - 16 * k3 * k2 + k2**3),
        k2**3 * (32 * k3 * k3 - 48 * k3 * k2 + 16 * k2 * k2 + k2**3),
        64 * gap**3,
    )


def projective_to_point(triple: ProjectiveTriple) -> CurvePoint:
    x, y, z = triple
    if z == 0:
        if y == 0:
            raise InvalidInputError("(0 : 0 : 0) is not a projective point.")
        return INFINITY
    return CurvePoint(x / z, y / z)


@dataclass(frozen=True, slots=True)
class NormalizationResult:
    k: Fraction
    change: WeierstrassChange
    curve: WeierstrassCurve


def normalize_four_torsion(curve: WeierstrassCurve, point: CurvePoint) -> NormalizationResult:
    """Carry ``curve`` to E_k so that the order-4 point ``point`` lands on (0, 0)."""
    curve.require_elliptic()
    if point.is_infinity:
        raise NotOrderFourError("The point at infinity has order 1.")
    if not curve.contains(point):
        raise NotOnCurveError(f"{point!r} is not on {curve}.")
    x0, y0 = point.X, point.Y
    if not isinstance(x0, Fraction) or not isinstance(y0, Fraction):
        raise InvalidInputError("Normalization needs a rational point.")

    tangent = 2 * y0 + curve.a1 * x0 + curve.a3
    den = 6 * x0 * x0 + curve.b2 * x0 + curve.b4
    if tangent == 0:
        raise NotOrderFourError(f"{point!r} has order 2.")
    if den == 0:
        raise NotOrderFourError(f"{point!r} is a flex of the curve and cannot have order 4.")

    k1 = tangent / den
    k2 = 16 * (
        3 * x0**4 + curve.b2 * x0**3 + 3 * curve.b4 * x0**2 + 3 * curve.b6 * x0 + curve.b8
    ) / den**2
    k3 = 16 * tangent**4 / den**3
    if k2 != k3:
        raise NotOrderFourError(f"{point!r} does not have order 4 (k2={k2}, k3={k3}).")
    k = k2
    if k in (0, 1):
        raise SingularCurveError(f"The normalized curve E_{k} is singular.")

    change = WeierstrassChange(
        u=1 / (4 * k1),
        r=x0,
        s=(1 - curve.a1 * k1) / (2 * k1),
        t=y0,
    )
    image = change.apply_to_curve(curve)
    if image != ek_weierstrass(k) or change.push_point(point) != ORIGIN:
        raise NotOrderFourError(f"Normalization of {point!r} did not reach E_{k}.")
    LOGGER.debug("Normalized %s with P=%r to E_%s", curve, point, k)
    return NormalizationResult(k=k, change=change, curve=image)


def twist_x024(k: RationalLike) -> WeierstrassCurve:
    """Y² = X³ + 5kX² + 4k²X."""
    k = as_rational(k)
    if k == 0:
        raise InvalidInputError("The twist parameter k must be nonzero.")
    return WeierstrassCurve(Fraction(0), 5 * k, Fraction(0), 4 * k * k, Fraction(0))


def lift_twist_point(k: RationalLike, point: CurvePoint) -> CurvePoint:
    """Send (U, V) on the k-twist to (U/k, V·√k/k²) on Y² = X³ + 5X² + 4X over Q(√k)."""
    k = as_rational(k)
    twist = twist_x024(k)
    if not twist.contains(point):
        raise NotOnCurveError(f"{point!r} is not on the twist {twist}.")
    if point.is_infinity:
        return point
    return CurvePoint(point.X / k, point.Y * surd(k) / (k * k))


def congruent_curve(delta: RationalLike) -> WeierstrassCurve:
    """Y² = X³ − δ²X."""
    delta = as_rational(delta)
    if delta == 0:
        raise InvalidInputError("δ must be nonzero.")
    return WeierstrassCurve(Fraction(0), Fraction(0), Fraction(0), -delta * delta, Fraction(0))
