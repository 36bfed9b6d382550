from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conic_progressions.curves.family import congruent_curve
from conic_progressions.curves.weierstrass import CurvePoint
from conic_progressions.errors import (
    ExcludedLocusError,
    InvalidInputError,
    NotOnCurveError,
    PointNotFoundError,
    TrivialProgressionError,
)
from conic_progressions.geometry.conic import QuadPoly
from conic_progressions.progressions.congruum import (
    FreyTriple,
    Triangle,
    congruent_point_search,
    congruum_ap_to_curve,
    congruum_curve_to_ap,
    congruum_curve_to_triangle,
    congruum_triangle_to_curve,
    frey_ap_to_curve,
    frey_curve,
    frey_curve_to_ap,
    frey_curve_to_triangle,
    frey_quantities,
    frey_quantities_taylor,
    frey_triangle_to_curve,
)

from tests.strategies import nonzero_rationals, small_rationals

POINT_24 = CurvePoint(Fraction(72), Fraction(576))


def test_squares_point_triangle_chain() -> None:
    assert congruum_ap_to_curve(1, 5, 7, 24) == POINT_24
    assert congruum_curve_to_ap(POINT_24, 24) == (1, 5, 7)
    assert congruum_curve_to_triangle(POINT_24, 24) == Triangle(8, 6, 10)
    assert congruum_triangle_to_curve(Triangle(8, 6, 10)) == POINT_24


def test_three_four_five() -> None:
    point = congruum_triangle_to_curve(Triangle(3, 4, 5))
    assert point == CurvePoint(Fraction(12), Fraction(36))
    assert congruent_curve(6).contains(point)
    assert congruum_curve_to_triangle(point, 6) == Triangle(3, 4, 5)
    assert congruum_curve_to_ap(point, 6) == (Fraction(-1, 2), Fraction(5, 2), Fraction(7, 2))


def test_congruum_errors() -> None:
    with pytest.raises(InvalidInputError):
        congruum_ap_to_curve(1, 5, 7, 0)
    with pytest.raises(InvalidInputError):
        congruum_ap_to_curve(1, 5, 8, 24)
    with pytest.raises(TrivialProgressionError):
        congruum_ap_to_curve(2, 2, 2, 24)
    with pytest.raises(NotOnCurveError):
        congruum_curve_to_ap(CurvePoint(Fraction(1), Fraction(1)), 24)
    with pytest.raises(ExcludedLocusError):
        congruum_curve_to_triangle(CurvePoint(Fraction(24), Fraction(0)), 24)
    with pytest.raises(InvalidInputError):
        congruum_triangle_to_curve(Triangle(3, 4, 5), 7)
    with pytest.raises(InvalidInputError):
        Triangle(1, 1, 1)


def test_point_search() -> None:
    point = congruent_point_search(6, 5)
    assert point.X == -2
    assert point.Y in (8, -8)
    with pytest.raises(PointNotFoundError):
        congruent_point_search(1, 20)


@settings(max_examples=1000, deadline=None)
@given(nonzero_rationals, nonzero_rationals)
def test_triangle_round_trip(m: Fraction, n: Fraction) -> None:
    assume(m * m != n * n)
    triangle = Triangle(m * m - n * n, 2 * m * n, m * m + n * n)
    point = congruum_triangle_to_curve(triangle)
    delta = triangle.a * triangle.b / 2
    assert congruent_curve(delta).contains(point)
    assert congruum_curve_to_triangle(point, delta) == triangle


def test_frey_chain() -> None:
    triple = FreyTriple(3, 5, 8)
    point = CurvePoint(Fraction(15), Fraction(60))
    assert frey_curve(triple).contains(point)
    assert frey_ap_to_curve(1, 2, 3, triple) == point
    assert frey_curve_to_ap(point, triple) == (1, 2, 3)
    triangle = frey_curve_to_triangle(point, triple)
    assert triangle == Triangle(4, 2, 4, Fraction(1, 4))
    assert frey_triangle_to_curve(triangle, triple) == point


def test_frey_triple_validation() -> None:
    assert FreyTriple.congruum(6) == FreyTriple(6, 6, 12)
    assert frey_curve(FreyTriple.congruum(6)) == congruent_curve(6)
    assert FreyTriple(3, 5, 8).cos_theta == Fraction(1, 4)
    with pytest.raises(InvalidInputError):
        FreyTriple(1, 2, 4)
    with pytest.raises(ExcludedLocusError):
        FreyTriple(1, -1, 0).cos_theta
    with pytest.raises(InvalidInputError):
        frey_ap_to_curve(1, 2, 4, FreyTriple(3, 5, 8))


@settings(max_examples=1000, deadline=None)
@given(small_rationals, small_rationals, small_rationals, small_rationals, small_rationals)
def test_frey_gaps_from_taylor_coefficients(a: Fraction, b: Fraction, c: Fraction, t: Fraction, delta: Fraction) -> None:
    disc = QuadPoly(a, b, c)
    assert frey_quantities(disc, t, delta) == frey_quantities_taylor(disc, t, delta)


def test_frey_gaps_on_the_parabola() -> None:
    # Disc(t) = t around 25 with δ = 24 gives the squares 1, 25, 49.
    triple = frey_quantities(QuadPoly(0, 1, 0), 25, 24)
    assert triple == FreyTriple.congruum(24)
    assert congruum_ap_to_curve(1, 5, 7, triple.gap_a) == POINT_24


signs = st.sampled_from([1, -1])


@settings(max_examples=1000, deadline=None)
@given(small_rationals, nonzero_rationals, signs, signs, signs)
def test_congruum_squares_round_trip(t: Fraction, scale: Fraction, s1: int, s2: int, s3: int) -> None:
    # (t² − 2t − 1)², (t² + 1)², (t² + 2t − 1)² step by 4(t³ − t).
    x1 = s1 * scale * (t * t - 2 * t - 1)
    x2 = s2 * scale * (t * t + 1)
    x3 = s3 * scale * (t * t + 2 * t - 1)
    delta = scale * scale * 4 * (t**3 - t)
    assume(delta != 0)
    assume(x1 - 2 * x2 + x3 != 0)
    point = congruum_ap_to_curve(x1, x2, x3, delta)
    assert congruent_curve(delta).contains(point)
    assert congruum_curve_to_ap(point, delta) == (x1, x2, x3)
    triangle = congruum_curve_to_triangle(point, delta)
    assert triangle.a * triangle.b / 2 == delta
    assert congruum_triangle_to_curve(triangle, delta) == point


@settings(max_examples=1000, deadline=None)
@given(small_rationals, small_rationals, small_rationals)
def test_frey_round_trips(x1: Fraction, x2: Fraction, x3: Fraction) -> None:
    gap_a, gap_b = x2 * x2 - x1 * x1, x3 * x3 - x2 * x2
    triple = FreyTriple(gap_a, gap_b, gap_a + gap_b)
    assume(triple.gap_a * triple.gap_b * triple.gap_c != 0)
    assume(gap_b * x1 - triple.gap_c * x2 + gap_a * x3 != 0)
    point = frey_ap_to_curve(x1, x2, x3, triple)
    assert frey_curve(triple).contains(point)
    assert frey_curve_to_ap(point, triple) == (x1, x2, x3)
    triangle = frey_curve_to_triangle(point, triple)
    assert triangle.cos_theta == triple.cos_theta
    assert frey_triangle_to_curve(triangle, triple) == point
