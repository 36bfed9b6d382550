"""Projective conics, linear fractional maps and the fibers of ℓ over t.

Coordinates are ordered ``(x1, x2, x0)`` throughout, so the symmetric
coefficient matrix of ``A x1² + 2B x1x2 + C x2² + 2D x1x0 + 2E x2x0 + F x0²``
is ``[[A, B, D], [B, C, E], [D, E, F]]``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from enum import Enum
from fractions import Fraction
from typing import Literal, Union

from conic_progressions.arith.quadratic import Field, simplify, surd
from conic_progressions.arith.rational import RationalLike, as_rational
from conic_progressions.errors import (
    DegenerateFiberError,
    ExcludedLocusError,
    ImaginaryPointError,
    IndeterminateError,
    InvalidInputError,
    ZeroDiscriminantError,
)

LOGGER = logging.getLogger(__name__)

Sign = Literal["+", "-"]
Matrix3 = tuple[tuple[Fraction, Fraction, Fraction], ...]

# Cyclic relabellings of (x1, x2, x0); chart[i] is the old index of new coordinate i.
_CHARTS: tuple[tuple[int, int, int], ...] = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


class ConicKind(str, Enum):
    SMOOTH = "smooth"
    DEGENERATE = "degenerate"


class _Infinity(Enum):
    INFINITY = "infinity"

    def __repr__(self) -> str:
        return "P1_INFINITY"


P1_INFINITY = _Infinity.INFINITY
P1Value = Union[Field, _Infinity]


def _det3(m: Matrix3 | list[list[Field]]) -> Field:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


@dataclass(frozen=True, slots=True)
class Conic:
    A: Fraction = Fraction(0)
    B: Fraction = Fraction(0)
    C: Fraction = Fraction(0)
    D: Fraction = Fraction(0)
    E: Fraction = Fraction(0)
    F: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for item in fields(self):
            object.__setattr__(self, item.name, as_rational(getattr(self, item.name)))
        if not any(getattr(self, item.name) for item in fields(self)):
            raise InvalidInputError("A conic needs at least one nonzero coefficient.")

    def matrix(self) -> Matrix3:
        return (
            (self.A, self.B, self.D),
            (self.B, self.C, self.E),
            (self.D, self.E, self.F),
        )

    def determinant(self) -> Fraction:
        return _det3(self.matrix())

    def adjugate(self) -> Matrix3:
        A, B, C, D, E, F = self.A, self.B, self.C, self.D, self.E, self.F
        return (
            (C * F - E * E, D * E - B * F, B * E - C * D),
            (D * E - B * F, A * F - D * D, B * D - A * E),
            (B * E - C * D, B * D - A * E, A * C - B * B),
        )

    def scaled(self, factor: RationalLike) -> "Conic":
        lam = as_rational(factor)
        if lam == 0:
            raise InvalidInputError("Scaling factor must be nonzero.")
        return Conic(*(lam * getattr(self, item.name) for item in fields(self)))

    def evaluate(self, point: "ProjPoint") -> Field:
        x1, x2, x0 = point.x1, point.x2, point.x0
        return simplify(
            self.A * x1 * x1
            + 2 * self.B * x1 * x2
            + self.C * x2 * x2
            + 2 * self.D * x1 * x0
            + 2 * self.E * x2 * x0
            + self.F * x0 * x0
        )


@dataclass(frozen=True, slots=True)
class LinFracMap:
    """ℓ(x1 : x2 : x0) = (a x1 + b x2 + c x0) / (d x1 + e x2 + f x0)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)
    e: Fraction = Fraction(0)
    f: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for item in fields(self):
            object.__setattr__(self, item.name, as_rational(getattr(self, item.name)))
        num, den = self.numerator_row(), self.denominator_row()
        minors = (
            num[0] * den[1] - num[1] * den[0],
            num[0] * den[2] - num[2] * den[0],
            num[1] * den[2] - num[2] * den[1],
        )
        if not any(minors):
            raise InvalidInputError(
                "Map rows must be nonzero and not proportional (ℓ would be constant)."
            )

    def numerator_row(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def denominator_row(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.d, self.e, self.f)

    def fiber_line(self, t: Fraction) -> tuple[Fraction, Fraction, Fraction]:
        """Coefficients of the line ℓ = t, i.e. (a − dt, b − et, c − ft)."""
        return (self.a - self.d * t, self.b - self.e * t, self.c - self.f * t)


@dataclass(frozen=True, slots=True, eq=False)
class ProjPoint:
    """A point (x1 : x2 : x0) of the projective plane over Q or Q(√d)."""

    x1: Field
    x2: Field
    x0: Field

    def __post_init__(self) -> None:
        for name in ("x1", "x2", "x0"):
            value = getattr(self, name)
            if isinstance(value, str):
                value = as_rational(value)
            object.__setattr__(self, name, simplify(value))
        if not (self.x1 or self.x2 or self.x0):
            raise InvalidInputError("(0 : 0 : 0) is not a projective point.")

    def coordinates(self) -> tuple[Field, Field, Field]:
        return (self.x1, self.x2, self.x0)

    @property
    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coordinates())

    def normalized(self) -> "ProjPoint":
        """Scale so the last nonzero coordinate (order x0, x2, x1) equals 1."""
        pivot = next(c for c in (self.x0, self.x2, self.x1) if c)
        return ProjPoint(self.x1 / pivot, self.x2 / pivot, self.x0 / pivot)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.normalized().coordinates() == other.normalized().coordinates()

    def __hash__(self) -> int:
        return hash(self.normalized().coordinates())

    def __repr__(self) -> str:
        return f"ProjPoint({self.x1!s} : {self.x2!s} : {self.x0!s})"


@dataclass(frozen=True, slots=True)
class QuadPoly:
    """Disc(t) = c0p + c1p·t + c2p·t²."""

    c0p: Fraction
    c1p: Fraction
    c2p: Fraction

    def __post_init__(self) -> None:
        for name in ("c0p", "c1p", "c2p"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    def __call__(self, t: RationalLike) -> Fraction:
        x = as_rational(t)
        return self.c0p + self.c1p * x + self.c2p * x * x

    def derivative(self, t: RationalLike) -> Fraction:
        return self.c1p + 2 * self.c2p * as_rational(t)

    def second_derivative(self, t: RationalLike | None = None) -> Fraction:
        return 2 * self.c2p

    def taylor_ratios(self, t: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
        """(c0, c1, c2) with cn = Discⁿ(t) / (n! Disc(t)); c0 is always 1."""
        value = self(t)
        if value == 0:
            raise ZeroDiscriminantError(f"Disc({as_rational(t)}) = 0.")
        return (Fraction(1), self.derivative(t) / value, self.c2p / value)

    def scaled(self, factor: RationalLike) -> "QuadPoly":
        lam = as_rational(factor)
        return QuadPoly(lam * self.c0p, lam * self.c1p, lam * self.c2p)


def classify_conic(conic: Conic) -> ConicKind:
    return ConicKind.SMOOTH if conic.determinant() != 0 else ConicKind.DEGENERATE


def disc_poly(conic: Conic, lin_map: LinFracMap) -> QuadPoly:
    """Expand vᵀ N v in t with v = (a − dt, b − et, c − ft) and N = −adj(M)."""
    adj = conic.adjugate()
    n = [[-entry for entry in row] for row in adj]
    p0 = lin_map.numerator_row()
    p1 = tuple(-x for x in lin_map.denominator_row())

    def form(u: tuple[Fraction, ...], w: tuple[Fraction, ...]) -> Fraction:
        return sum((u[i] * n[i][j] * w[j] for i in range(3) for j in range(3)), Fraction(0))

    return QuadPoly(form(p0, p0), 2 * form(p0, p1), form(p1, p1))


def _chart_branches(
    matrix: Matrix3,
    line: tuple[Fraction, Fraction, Fraction],
    root: Field,
    chart: tuple[int, int, int],
) -> tuple[tuple[Field, Field, Field], tuple[Field, Field, Field]]:
    m = [[matrix[chart[i]][chart[j]] for j in range(3)] for i in range(3)]
    alpha, beta, gamma = (line[chart[i]] for i in range(3))
    A, B, C, D, E = m[0][0], m[0][1], m[1][1], m[0][2], m[1][2]

    base1 = B * beta * gamma - C * alpha * gamma - D * beta * beta + E * alpha * beta
    base2 = -A * beta * gamma + B * alpha * gamma + D * alpha * beta - E * alpha * alpha
    x0 = A * beta * beta - 2 * B * alpha * beta + C * alpha * alpha

    plus = (base1 + beta * root, base2 - alpha * root, x0)
    minus = (base1 - beta * root, base2 + alpha * root, x0)
    return _relabel(plus, chart), _relabel(minus, chart)


def _relabel(coords: tuple[Field, Field, Field], chart: tuple[int, int, int]) -> tuple[Field, Field, Field]:
    old: list[Field] = [Fraction(0)] * 3
    for new_index, old_index in enumerate(chart):
        old[old_index] = coords[new_index]
    return (old[0], old[1], old[2])


def _nonzero(coords: tuple[Field, Field, Field]) -> bool:
    return any(bool(c) for c in coords)


def _at_base_point(lin_map: LinFracMap, coords: tuple[Field, Field, Field]) -> bool:
    """True at the common point of every fiber line, where ℓ is 0/0."""
    x1, x2, x0 = coords
    num = simplify(lin_map.a * x1 + lin_map.b * x2 + lin_map.c * x0)
    den = simplify(lin_map.d * x1 + lin_map.e * x2 + lin_map.f * x0)
    return not num and not den


def point_at(
    conic: Conic,
    lin_map: LinFracMap,
    t: RationalLike,
    sign: Sign = "+",
    *,
    real: bool = True,
) -> ProjPoint:
    """Return the fiber point of ℓ over t on the chosen branch.

    ``sign="+"`` puts +√Disc(t) into x1 and −√Disc(t) into x2. Coordinates lie
    in Q(√d) where d is the squarefree part of Disc(t), and collapse to
    rationals when Disc(t) is a square.

    If the conic passes through the base point of ℓ, that point is one of the
    two intersections for every t. Both signs then return the other
    intersection, and a fiber that only meets the base point raises
    :class:`DegenerateFiberError`.
    """
    if sign not in ("+", "-"):
        raise InvalidInputError(f"Sign must be '+' or '-', got {sign!r}.")
    t = as_rational(t)
    value = disc_poly(conic, lin_map)(t)
    if value < 0 and real:
        raise ImaginaryPointError(f"Disc({t}) = {value} is negative; no real fiber point.")
    root = surd(value)
    line = lin_map.fiber_line(t)
    matrix = conic.matrix()

    # If the fiber meets a chart's line at infinity on the conic, that chart
    # only sees the point there; the other one comes from another chart.
    found: list[ProjPoint] = []
    for chart in _CHARTS:
        plus, minus = _chart_branches(matrix, line, root, chart)
        ordered = (plus, minus) if sign == "+" else (minus, plus)
        genuine = [c for c in ordered if _nonzero(c) and not _at_base_point(lin_map, c)]
        if _nonzero(plus) and _nonzero(minus) and genuine:
            if genuine[0] is not ordered[0]:
                LOGGER.debug("Branch %s over t=%s is the base point of ℓ; using the other one", sign, t)
            elif chart != _CHARTS[0]:
                LOGGER.debug("Fiber over t=%s taken in chart %s", t, chart)
            return ProjPoint(*genuine[0])
        for coords in (plus, minus):
            if _nonzero(coords) and not _at_base_point(lin_map, coords):
                candidate = ProjPoint(*coords)
                if candidate not in found:
                    found.append(candidate)
    if not found:
        raise DegenerateFiberError(f"The fiber of ℓ over t={t} degenerates in every chart.")
    LOGGER.debug("Fiber over t=%s assembled from partial charts: %s", t, found)
    if sign == "-" and len(found) > 1:
        return found[1]
    return found[0]


def eval_map(lin_map: LinFracMap, point: ProjPoint) -> P1Value:
    x1, x2, x0 = point.coordinates()
    num = simplify(lin_map.a * x1 + lin_map.b * x2 + lin_map.c * x0)
    den = simplify(lin_map.d * x1 + lin_map.e * x2 + lin_map.f * x0)
    if not den:
        if not num:
            raise IndeterminateError(f"ℓ is 0/0 at {point!r}.")
        return P1_INFINITY
    return simplify(num / den)


def on_conic(conic: Conic, point: ProjPoint) -> bool:
    return not conic.evaluate(point)


def disc_via_determinant(conic: Conic, lin_map: LinFracMap, point: ProjPoint) -> Field:
    """±√Disc(ℓ(p)) as the determinant of the map rows and the gradient row at p."""
    coords = point.coordinates()
    den = simplify(sum((r * x for r, x in zip(lin_map.denominator_row(), coords)), Fraction(0)))
    if not den:
        raise ExcludedLocusError(f"The denominator of ℓ vanishes at {point!r}.")
    gradient = [
        simplify(sum((entry * x for entry, x in zip(row, coords)), Fraction(0)))
        for row in conic.matrix()
    ]
    rows: list[list[Field]] = [
        list(lin_map.numerator_row()),
        list(lin_map.denominator_row()),
        gradient,
    ]
    return simplify(_det3(rows) / den)


def parabola() -> Conic:
    """x1² − x2·x0 = 0."""
    return Conic(A=Fraction(1), E=Fraction(-1, 2))


def circle(radius_squared: RationalLike) -> Conic:
    """x1² + x2² − r²·x0² = 0."""
    return Conic(A=Fraction(1), C=Fraction(1), F=-as_rational(radius_squared))


def graph_conic(c0: RationalLike, c1: RationalLike, c2: RationalLike) -> Conic:
    """x2² = c0 + c1·x1 + c2·x1², whose Disc for ℓ = x1/x0 is c0 + c1 t + c2 t²."""
    return Conic(
        A=-as_rational(c2),
        C=Fraction(1),
        D=-as_rational(c1) / 2,
        F=-as_rational(c0),
    )


def coordinate_map(axis: Literal["x", "y"]) -> LinFracMap:
    if axis == "x":
        return LinFracMap(a=Fraction(1), f=Fraction(1))
    if axis == "y":
        return LinFracMap(b=Fraction(1), f=Fraction(1))
    raise InvalidInputError(f"Unknown coordinate axis {axis!r}.")
