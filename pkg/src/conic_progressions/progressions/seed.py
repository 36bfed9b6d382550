"""From a conic, a map ℓ and a base value t0 to 3-term progressions via E_k."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from conic_progressions.arith.rational import RationalLike, as_rational, rat_sqrt
from conic_progressions.curves.family import ek_weierstrass
from conic_progressions.curves.weierstrass import CurvePoint, WeierstrassCurve
from conic_progressions.errors import (
    DegenerateConicError,
    DegenerateModulusError,
    ExcludedLocusError,
    FlatDiscriminantError,
    NonSquareDiscriminantError,
    NotOnCurveError,
    PoleError,
    TrivialProgressionError,
    ZeroDiscriminantError,
)
from conic_progressions.geometry.conic import (
    Conic,
    ConicKind,
    LinFracMap,
    ProjPoint,
    QuadPoly,
    Sign,
    classify_conic,
    disc_poly,
    eval_map,
    on_conic,
    point_at,
)

LOGGER = logging.getLogger(__name__)


def modulus_k(disc: QuadPoly, t0: RationalLike) -> Fraction:
    """k = (Disc′² − 2·Disc·Disc″) / Disc′² at t0."""
    t0 = as_rational(t0)
    value = disc(t0)
    if value == 0:
        raise ZeroDiscriminantError(f"Disc({t0}) = 0; the Taylor ratios are undefined.")
    slope = disc.derivative(t0)
    if slope == 0:
        raise FlatDiscriminantError(f"Disc′({t0}) = 0; k is undefined.")
    return (slope * slope - 2 * value * disc.second_derivative(t0)) / (slope * slope)


@dataclass(frozen=True, slots=True)
class ProgressionSeed:
    conic: Conic
    lin_map: LinFracMap
    t0: Fraction
    disc: QuadPoly
    sqrt_disc_t0: Fraction
    k: Fraction

    @property
    def is_singular(self) -> bool:
        """k = 1: the cubic is singular and points come from its parametrization."""
        return self.k == 1

    @property
    def c1(self) -> Fraction:
        return self.disc.taylor_ratios(self.t0)[1]

    @property
    def c2(self) -> Fraction:
        return self.disc.taylor_ratios(self.t0)[2]


def build_seed(conic: Conic, lin_map: LinFracMap, t0: RationalLike) -> ProgressionSeed:
    t0 = as_rational(t0)
    if classify_conic(conic) is ConicKind.DEGENERATE:
        raise DegenerateConicError("Progressions need a smooth conic (nonzero determinant).")
    disc = disc_poly(conic, lin_map)
    value = disc(t0)
    if value == 0:
        raise ZeroDiscriminantError(f"Disc({t0}) = 0.")
    if disc.derivative(t0) == 0:
        raise FlatDiscriminantError(f"Disc′({t0}) = 0.")
    root = rat_sqrt(value)
    if root is None:
        raise NonSquareDiscriminantError(f"Disc({t0}) = {value} is not a rational square.")
    k = modulus_k(disc, t0)
    if k == 0:
        raise DegenerateModulusError(f"k = 0 at t0 = {t0}; no construction exists.")
    LOGGER.debug("Seed t0=%s Disc=%s k=%s", t0, disc, k)
    return ProgressionSeed(conic, lin_map, t0, disc, root, k)


def common_difference(
    disc: QuadPoly,
    t0: RationalLike,
    k: RationalLike,
    point: CurvePoint,
) -> Fraction:
    """δ = −(Disc(t0)/Disc′(t0))·4XY / (Y² + 2XY + kX²); zero on the trivial orbit."""
    if point.is_infinity:
        return Fraction(0)
    t0, k = as_rational(t0), as_rational(k)
    x, y = point.X, point.Y
    if x * y == 0:
        return Fraction(0)
    den = y * y + 2 * x * y + k * x * x
    if den == 0:
        raise ExcludedLocusError(f"Y² + 2XY + kX² vanishes at {point!r}.")
    slope = disc.derivative(t0)
    if slope == 0:
        raise FlatDiscriminantError(f"Disc′({t0}) = 0.")
    return -(disc(t0) / slope) * 4 * x * y / den


@dataclass(frozen=True, slots=True)
class ApTriple:
    """Three conic points whose ℓ-values are t0 − δ, t0, t0 + δ."""

    P1: ProjPoint
    P2: ProjPoint
    P3: ProjPoint
    delta: Fraction
    t_values: tuple[Fraction, Fraction, Fraction]

    def validate(self, conic: Conic, lin_map: LinFracMap) -> None:
        if self.delta == 0:
            raise TrivialProgressionError("A progression needs δ ≠ 0.")
        for point, t in zip((self.P1, self.P2, self.P3), self.t_values):
            if not on_conic(conic, point):
                raise NotOnCurveError(f"{point!r} is not on the conic.")
            if eval_map(lin_map, point) != t:
                raise NotOnCurveError(f"ℓ({point!r}) differs from {t}.")
        t1, t2, t3 = self.t_values
        if t2 - t1 != self.delta or t3 - t2 != self.delta:
            raise TrivialProgressionError("The ℓ-values are not in progression with step δ.")

    @property
    def points(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return (self.P1, self.P2, self.P3)


def curve_for(seed: ProgressionSeed) -> WeierstrassCurve:
    """The cubic carrying the seed's points: E_k, or the singular k = 1 member."""
    return ek_weierstrass(seed.k)


def three_term_ap(seed: ProgressionSeed, point: CurvePoint, sign: Sign = "+") -> ApTriple:
    if not curve_for(seed).contains(point):
        raise NotOnCurveError(f"{point!r} is not on E_{seed.k}.")
    delta = common_difference(seed.disc, seed.t0, seed.k, point)
    if delta == 0:
        raise TrivialProgressionError(f"{point!r} gives the constant progression (δ = 0).")
    t_values = (seed.t0 - delta, seed.t0, seed.t0 + delta)
    for t in t_values:
        if rat_sqrt(seed.disc(t)) is None:
            raise NonSquareDiscriminantError(f"Disc({t}) is not a rational square.")
    p1, p2, p3 = (point_at(seed.conic, seed.lin_map, t, sign) for t in t_values)
    triple = ApTriple(p1, p2, p3, delta, t_values)
    triple.validate(seed.conic, seed.lin_map)
    return triple


def extend_sequence(disc: QuadPoly, t: RationalLike, u: RationalLike) -> Fraction:
    """Next t′ = t + δ with δ = (c1 − 2u)/(u² − c2); √Disc(t′) is rational again."""
    t, u = as_rational(t), as_rational(u)
    value = disc(t)
    if value == 0:
        raise ZeroDiscriminantError(f"Disc({t}) = 0.")
    if rat_sqrt(value) is None:
        raise NonSquareDiscriminantError(f"Disc({t}) = {value} is not a rational square.")
    _, c1, c2 = disc.taylor_ratios(t)
    return t + delta_from_slope(c1, c2, u)


def progression_sequence(
    disc: QuadPoly,
    t: RationalLike,
    slopes: Iterable[RationalLike],
) -> list[Fraction]:
    """t1 = t followed by one extension per slope; every √Disc(ti) is rational."""
    values = [as_rational(t)]
    for u in slopes:
        values.append(extend_sequence(disc, values[-1], u))
    return values


def delta_from_slope(c1: RationalLike, c2: RationalLike, u: RationalLike) -> Fraction:
    c1, c2, u = as_rational(c1), as_rational(c2), as_rational(u)
    den = u * u - c2
    if den == 0:
        raise PoleError(f"u² = c2 = {c2}; δ is infinite.")
    return (c1 - 2 * u) / den


@dataclass(frozen=True, slots=True)
class SlopePair:
    """u = (√Disc(t+δ) − √Disc(t))/(δ√Disc(t)) and v = (√Disc(t−δ) − √Disc(t))/(δ√Disc(t))."""

    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", as_rational(self.u))
        object.__setattr__(self, "v", as_rational(self.v))


def uv_to_xy(k: RationalLike, c1: RationalLike, pair: SlopePair) -> CurvePoint:
    k, c1 = as_rational(k), as_rational(c1)
    den = pair.v - pair.u - c1
    if den == 0:
        raise ExcludedLocusError(f"v − u − c1 = 0 for {pair!r}.")
    return CurvePoint(2 * k * c1 / den, 2 * k * (2 * pair.u - c1) / den)


def xy_to_uv(k: RationalLike, c1: RationalLike, point: CurvePoint) -> SlopePair:
    k, c1 = as_rational(k), as_rational(c1)
    if point.is_infinity or point.X == 0:
        raise ExcludedLocusError(f"X = 0 at {point!r}; slopes are undefined.")
    x, y = point.X, point.Y
    return SlopePair(c1 * (y + x) / (2 * x), c1 * (y + 3 * x + 4 * k) / (2 * x))
