"""JSON request models and response payloads for the command line interface.

Every number crosses the boundary as an exact string ("3", "-7/25",
"9 - 5*sqrt(6)"); floats are rejected on input and never produced.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, model_validator

from conic_progressions.arith.quadratic import format_quad
from conic_progressions.arith.rational import as_rational, format_rational
from conic_progressions.curves.family import NormalizationResult
from conic_progressions.curves.weierstrass import CurvePoint, WeierstrassChange, WeierstrassCurve
from conic_progressions.geometry.conic import Conic, LinFracMap, ProjPoint, Sign
from conic_progressions.progressions.congruum import Triangle
from conic_progressions.progressions.seed import ApTriple


RationalStr = Annotated[
    Fraction,
    PlainValidator(as_rational),
    PlainSerializer(format_rational, return_type=str),
]


class _Request(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class ConicModel(_Request):
    """A·x1² + 2B·x1x2 + C·x2² + 2D·x1x0 + 2E·x2x0 + F·x0² (the symmetric matrix entries)."""

    A: RationalStr = Fraction(0)
    B: RationalStr = Fraction(0)
    C: RationalStr = Fraction(0)
    D: RationalStr = Fraction(0)
    E: RationalStr = Fraction(0)
    F: RationalStr = Fraction(0)

    def to_conic(self) -> Conic:
        return Conic(self.A, self.B, self.C, self.D, self.E, self.F)


class MapModel(_Request):
    """ℓ = (a·x1 + b·x2 + c·x0)/(d·x1 + e·x2 + f·x0)."""

    a: RationalStr = Fraction(0)
    b: RationalStr = Fraction(0)
    c: RationalStr = Fraction(0)
    d: RationalStr = Fraction(0)
    e: RationalStr = Fraction(0)
    f: RationalStr = Fraction(0)

    def to_map(self) -> LinFracMap:
        return LinFracMap(self.a, self.b, self.c, self.d, self.e, self.f)


class PointModel(_Request):
    """{"X": ..., "Y": ...} or {"inf": true}."""

    X: Optional[RationalStr] = None
    Y: Optional[RationalStr] = None
    inf: bool = False

    @model_validator(mode="after")
    def _check_shape(self) -> "PointModel":
        if self.inf:
            if self.X is not None or self.Y is not None:
                raise ValueError("the point at infinity takes no coordinates")
        elif self.X is None or self.Y is None:
            raise ValueError("an affine point needs both X and Y")
        return self

    def to_point(self) -> CurvePoint:
        if self.inf:
            return CurvePoint()
        return CurvePoint(self.X, self.Y)


class CurveModel(_Request):
    a1: RationalStr = Fraction(0)
    a2: RationalStr = Fraction(0)
    a3: RationalStr = Fraction(0)
    a4: RationalStr = Fraction(0)
    a6: RationalStr = Fraction(0)

    def to_curve(self) -> WeierstrassCurve:
        return WeierstrassCurve(self.a1, self.a2, self.a3, self.a4, self.a6)


class TriangleModel(_Request):
    a: RationalStr
    b: RationalStr
    c: RationalStr

    def to_triangle(self) -> Triangle:
        return Triangle(self.a, self.b, self.c)


class FindApRequest(_Request):
    conic: ConicModel
    map: MapModel
    t0: RationalStr
    height: Optional[int] = Field(default=None, ge=1)
    sign: Optional[Sign] = None


class CongruentRequest(_Request):
    """One representation of a congruum: a triangle, or δ with a point, the roots x1, x2, x3 or nothing."""

    delta: Optional[RationalStr] = None
    point: Optional[PointModel] = None
    triangle: Optional[TriangleModel] = None
    roots: Optional[tuple[RationalStr, RationalStr, RationalStr]] = None

    @model_validator(mode="after")
    def _check_combination(self) -> "CongruentRequest":
        if self.delta is not None and self.delta == 0:
            raise ValueError("delta must be nonzero")
        supplied = [name for name in ("point", "triangle", "roots") if getattr(self, name) is not None]
        if len(supplied) > 1:
            raise ValueError(f"supply only one of point, triangle, roots (got {', '.join(supplied)})")
        if self.delta is None and supplied != ["triangle"]:
            raise ValueError("delta is required unless a triangle is given")
        return self


class NormalizeRequest(_Request):
    curve: CurveModel
    point: PointModel


def point_payload(point: CurvePoint) -> dict[str, object]:
    if point.is_infinity:
        return {"inf": True}
    return {"X": format_quad(point.X), "Y": format_quad(point.Y)}


def proj_point_payload(point: ProjPoint) -> list[str]:
    return [format_quad(c) for c in point.normalized().coordinates()]


def triple_payload(triple: ApTriple) -> dict[str, object]:
    return {
        "delta": format_rational(triple.delta),
        "t": [format_rational(t) for t in triple.t_values],
        "points": [proj_point_payload(p) for p in triple.points],
    }


def triangle_payload(triangle: Triangle) -> dict[str, str]:
    return {
        "a": format_rational(triangle.a),
        "b": format_rational(triangle.b),
        "c": format_rational(triangle.c),
    }


def change_payload(change: WeierstrassChange) -> dict[str, str]:
    return {name: format_rational(getattr(change, name)) for name in ("u", "r", "s", "t")}


def curve_payload(curve: WeierstrassCurve) -> dict[str, str]:
    names = ("a1", "a2", "a3", "a4", "a6")
    return {name: format_rational(value) for name, value in zip(names, curve.coefficients())}


def normalization_payload(result: NormalizationResult) -> dict[str, object]:
    return {
        "k": format_rational(result.k),
        "change": change_payload(result.change),
        "curve": curve_payload(result.curve),
    }
