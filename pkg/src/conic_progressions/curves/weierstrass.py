"""Long Weierstrass cubics y² + a1xy + a3y = x³ + a2x² + a4x + a6 and their group law."""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from fractions import Fraction

from conic_progressions.arith.quadratic import Field, simplify
from conic_progressions.arith.rational import RationalLike, as_rational, rat_sqrt
from conic_progressions.errors import (
    InvalidInputError,
    NotOnCurveError,
    SingularCurveError,
)

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CurvePoint:
    """Affine point (X, Y), or the point at infinity when both are None."""

    X: Field | None = None
    Y: Field | None = None

    def __post_init__(self) -> None:
        if (self.X is None) != (self.Y is None):
            raise InvalidInputError("A curve point needs both coordinates or neither.")
        if self.X is not None:
            object.__setattr__(self, "X", simplify(_coerce(self.X)))
            object.__setattr__(self, "Y", simplify(_coerce(self.Y)))

    @property
    def is_infinity(self) -> bool:
        return self.X is None

    @classmethod
    def at(cls, x: RationalLike | Field, y: RationalLike | Field) -> "CurvePoint":
        return cls(_coerce(x), _coerce(y))

    def __repr__(self) -> str:
        if self.is_infinity:
            return "CurvePoint(inf)"
        return f"CurvePoint({self.X!s}, {self.Y!s})"


INFINITY = CurvePoint()


def _coerce(value: object) -> Field:
    if isinstance(value, (str, int)) and not isinstance(value, bool):
        return as_rational(value)
    return value  # type: ignore[return-value]


@dataclass(frozen=True, slots=True)
class WeierstrassCurve:
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)
    a4: Fraction = Fraction(0)
    a6: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for item in fields(self):
            object.__setattr__(self, item.name, as_rational(getattr(self, item.name)))

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self) -> Fraction:
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return self.a1 * self.a3 + 2 * self.a4

    @property
    def b6(self) -> Fraction:
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        a1, a2, a3, a4, a6 = self.coefficients()
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self) -> Fraction:
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def is_singular(self) -> bool:
        return self.discriminant == 0

    def j_invariant(self) -> Fraction:
        delta = self.discriminant
        if delta == 0:
            raise SingularCurveError(f"{self} is singular; j is undefined.")
        return self.c4**3 / delta

    def require_elliptic(self) -> "WeierstrassCurve":
        if self.is_singular:
            raise SingularCurveError(f"{self} has zero discriminant.")
        return self

    def rhs(self, x: Field) -> Field:
        return x * x * x + self.a2 * x * x + self.a4 * x + self.a6

    def contains(self, point: CurvePoint) -> bool:
        if point.is_infinity:
            return True
        x, y = point.X, point.Y
        return not simplify(y * y + self.a1 * x * y + self.a3 * y - self.rhs(x))

    def _check(self, *points: CurvePoint) -> None:
        for point in points:
            if not self.contains(point):
                raise NotOnCurveError(f"{point!r} is not on {self}.")

    def neg(self, point: CurvePoint) -> CurvePoint:
        self._check(point)
        return self._neg(point)

    def _neg(self, point: CurvePoint) -> CurvePoint:
        if point.is_infinity:
            return point
        return CurvePoint(point.X, -point.Y - self.a1 * point.X - self.a3)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        self._check(p, q)
        return self._add(p, q)

    def double(self, p: CurvePoint) -> CurvePoint:
        self._check(p)
        return self._add(p, p)

    def _add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        a1, a2, a3, a4, a6 = self.coefficients()
        x1, y1, x2, y2 = p.X, p.Y, q.X, q.Y
        if x1 == x2:
            if not simplify(y1 + y2 + a1 * x2 + a3):
                return INFINITY
            den = 2 * y1 + a1 * x1 + a3
            if not den:
                # Only reachable at a singular point.
                raise SingularCurveError(f"Cannot double the singular point {p!r}.")
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
            nu = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / den
        else:
            lam = (y2 - y1) / (x2 - x1)
            nu = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return CurvePoint(x3, y3)

    def mul(self, n: int, p: CurvePoint) -> CurvePoint:
        """n-fold sum by double-and-add; negative n multiplies the negation."""
        self._check(p)
        if n < 0:
            return self._neg(self.mul(-n, p))
        result, addend = INFINITY, p
        while n:
            if n & 1:
                result = self._add(result, addend)
            addend = self._add(addend, addend)
            n >>= 1
        return result

    def order(self, p: CurvePoint, cap: int = 12) -> int | None:
        """Exact order of p, or None when it exceeds ``cap`` (possibly infinite)."""
        self._check(p)
        current = p
        for n in range(1, cap + 1):
            if current.is_infinity:
                return n
            current = self._add(current, p)
        return None

    def solve_y(self, x: RationalLike) -> list[Fraction]:
        """All rational Y with (x, Y) on the curve, ascending."""
        x = as_rational(x)
        linear = self.a1 * x + self.a3
        root = rat_sqrt(linear * linear + 4 * self.rhs(x))
        if root is None:
            return []
        return sorted({(-linear + root) / 2, (-linear - root) / 2})

    def __str__(self) -> str:
        a1, a2, a3, a4, a6 = self.coefficients()
        return f"[{a1}, {a2}, {a3}, {a4}, {a6}]"


@dataclass(frozen=True, slots=True)
class WeierstrassChange:
    """The substitution x = u²x′ + r, y = u³y′ + su²x′ + t."""

    u: Fraction = Fraction(1)
    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)
    t: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for item in fields(self):
            object.__setattr__(self, item.name, as_rational(getattr(self, item.name)))
        if self.u == 0:
            raise InvalidInputError("The scaling u of a change of variables must be nonzero.")

    @classmethod
    def identity(cls) -> "WeierstrassChange":
        return cls()

    def apply_to_curve(self, curve: WeierstrassCurve) -> WeierstrassCurve:
        u, r, s, t = self.u, self.r, self.s, self.t
        a1, a2, a3, a4, a6 = curve.coefficients()
        return WeierstrassCurve(
            (a1 + 2 * s) / u,
            (a2 - s * a1 + 3 * r - s * s) / u**2,
            (a3 + r * a1 + 2 * t) / u**3,
            (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4,
            (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / u**6,
        )

    def push_point(self, point: CurvePoint) -> CurvePoint:
        """Old coordinates (x, y) to new coordinates (x′, y′)."""
        if point.is_infinity:
            return point
        dx = point.X - self.r
        return CurvePoint(dx / self.u**2, (point.Y - self.s * dx - self.t) / self.u**3)

    def pull_point(self, point: CurvePoint) -> CurvePoint:
        """New coordinates (x′, y′) back to old coordinates (x, y)."""
        if point.is_infinity:
            return point
        u2 = self.u**2
        return CurvePoint(
            u2 * point.X + self.r,
            u2 * self.u * point.Y + self.s * u2 * point.X + self.t,
        )

    def compose(self, then: "WeierstrassChange") -> "WeierstrassChange":
        """The change equal to applying ``self`` first and ``then`` second."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = then.u, then.r, then.s, then.t
        return WeierstrassChange(
            u1 * u2,
            r1 + u1 * u1 * r2,
            s1 + u1 * s2,
            t1 + u1 * u1 * s1 * r2 + u1**3 * t2,
        )

    def inverse(self) -> "WeierstrassChange":
        u, r, s, t = self.u, self.r, self.s, self.t
        return WeierstrassChange(1 / u, -r / u**2, -s / u, (r * s - t) / u**3)
