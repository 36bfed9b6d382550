from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conic_progressions.arith.quadratic import QuadExtElem
from conic_progressions.errors import (
    DegenerateFiberError,
    ImaginaryPointError,
    IndeterminateError,
    InvalidInputError,
)
from conic_progressions.geometry.conic import (
    P1_INFINITY,
    Conic,
    ConicKind,
    LinFracMap,
    ProjPoint,
    QuadPoly,
    circle,
    classify_conic,
    coordinate_map,
    disc_poly,
    disc_via_determinant,
    eval_map,
    graph_conic,
    on_conic,
    parabola,
    point_at,
)

from tests.strategies import base_point, lin_frac_maps, small_rationals, smooth_conics


def test_classify_conic() -> None:
    assert classify_conic(circle(25)) is ConicKind.SMOOTH
    assert classify_conic(parabola()) is ConicKind.SMOOTH
    # x1² − x2² splits into two lines.
    assert classify_conic(Conic(A=1, C=-1)) is ConicKind.DEGENERATE


def test_conic_and_map_validation() -> None:
    with pytest.raises(InvalidInputError):
        Conic()
    with pytest.raises(InvalidInputError):
        LinFracMap(a=1, d=2)
    with pytest.raises(InvalidInputError):
        ProjPoint(0, 0, 0)


@pytest.mark.parametrize(
    ("conic", "lin_map", "expected"),
    [
        (parabola(), coordinate_map("y"), QuadPoly(0, 1, 0)),
        (circle(25), coordinate_map("x"), QuadPoly(25, 0, -1)),
        (graph_conic(4, Fraction(15, 2), Fraction(9, 2)), coordinate_map("x"), QuadPoly(4, Fraction(15, 2), Fraction(9, 2))),
    ],
)
def test_disc_poly_examples(conic: Conic, lin_map: LinFracMap, expected: QuadPoly) -> None:
    assert disc_poly(conic, lin_map) == expected


def test_disc_poly_scales_with_the_conic() -> None:
    conic, lin_map = circle(25), coordinate_map("x")
    scaled = disc_poly(conic.scaled(3), lin_map)
    assert scaled == disc_poly(conic, lin_map).scaled(9)


def test_point_at_on_the_circle() -> None:
    conic, lin_map = circle(25), coordinate_map("x")
    plus = point_at(conic, lin_map, 3, "+")
    minus = point_at(conic, lin_map, 3, "-")
    assert plus == ProjPoint(3, -4, 1)
    assert minus == ProjPoint(3, 4, 1)
    assert on_conic(conic, plus)
    assert eval_map(lin_map, plus) == 3


def test_point_at_leaves_q_when_disc_is_not_a_square() -> None:
    conic, lin_map = parabola(), coordinate_map("y")
    point = point_at(conic, lin_map, 2)
    assert not point.is_rational
    assert on_conic(conic, point)
    assert eval_map(lin_map, point) == 2
    x1 = point.normalized().x1
    assert isinstance(x1, QuadExtElem)
    assert x1 * x1 == 2


def test_point_at_rejects_negative_disc_for_real_points() -> None:
    conic, lin_map = circle(25), coordinate_map("x")
    with pytest.raises(ImaginaryPointError):
        point_at(conic, lin_map, 6)
    point = point_at(conic, lin_map, 6, real=False)
    assert on_conic(conic, point)


def test_point_at_on_a_tangent_fiber() -> None:
    # Disc(0) = 0: both branches meet at the vertex (0 : 0 : 1).
    conic, lin_map = parabola(), coordinate_map("y")
    point = point_at(conic, lin_map, 0)
    assert point == ProjPoint(0, 0, 1)


def test_point_at_rejects_bad_sign() -> None:
    with pytest.raises(InvalidInputError):
        point_at(circle(25), coordinate_map("x"), 3, "*")  # type: ignore[arg-type]


def test_eval_map_infinity_and_indeterminate() -> None:
    lin_map = coordinate_map("y")
    assert eval_map(lin_map, ProjPoint(0, 1, 0)) is P1_INFINITY
    with pytest.raises(IndeterminateError):
        eval_map(lin_map, ProjPoint(1, 0, 0))


def test_proj_point_equality_is_projective() -> None:
    assert ProjPoint(2, 4, 2) == ProjPoint(1, 2, 1)
    assert hash(ProjPoint(2, 4, 2)) == hash(ProjPoint(1, 2, 1))
    assert ProjPoint(1, 0, 0) != ProjPoint(0, 1, 0)


@settings(max_examples=1000, deadline=None)
@given(st.integers(min_value=-4, max_value=4), st.integers(min_value=1, max_value=6), st.sampled_from(["+", "-"]))
def test_fiber_points_lie_on_the_conic(numerator: int, denominator: int, sign: str) -> None:
    t = Fraction(numerator, denominator)
    conic, lin_map = circle(25), coordinate_map("x")
    point = point_at(conic, lin_map, t, sign)  # type: ignore[arg-type]
    assert on_conic(conic, point)
    assert eval_map(lin_map, point) == t
    root = disc_via_determinant(conic, lin_map, point)
    assert root * root == disc_poly(conic, lin_map)(t)


@settings(max_examples=1000, deadline=None)
@given(small_rationals, small_rationals)
def test_graph_conic_fibers(c1: Fraction, t: Fraction) -> None:
    conic, lin_map = graph_conic(4, c1, 1), coordinate_map("x")
    disc = disc_poly(conic, lin_map)
    if disc(t) < 0:
        return
    try:
        point = point_at(conic, lin_map, t)
    except DegenerateFiberError:
        pytest.fail("graph conic fibers never degenerate")
    assert on_conic(conic, point)
    assert eval_map(lin_map, point) == t


def test_point_at_switches_chart_on_the_line_at_infinity() -> None:
    # ℓ = (x1 + x0)/x1 over t = 1 is the line x0 = 0, met at (1 : ±i : 0).
    conic, lin_map = circle(25), LinFracMap(a=1, c=1, d=1)
    point = point_at(conic, lin_map, 1, real=False)
    assert point.x0 == 0
    assert on_conic(conic, point)
    assert eval_map(lin_map, point) == 1


@settings(max_examples=1000, deadline=None)
@given(smooth_conics(), lin_frac_maps(), small_rationals, st.sampled_from(["+", "-"]))
def test_fibers_of_random_conics_and_maps(conic: Conic, lin_map: LinFracMap, t: Fraction, sign: str) -> None:
    value = disc_poly(conic, lin_map)(t)
    assume(value != 0)
    point = point_at(conic, lin_map, t, sign, real=False)  # type: ignore[arg-type]
    assert on_conic(conic, point)
    assert eval_map(lin_map, point) == t
    root = disc_via_determinant(conic, lin_map, point)
    assert root * root == value


@settings(max_examples=1000, deadline=None)
@given(smooth_conics(), lin_frac_maps(), small_rationals)
def test_branches_coincide_only_on_tangent_fibers(conic: Conic, lin_map: LinFracMap, t: Fraction) -> None:
    assume(not on_conic(conic, base_point(lin_map)))
    value = disc_poly(conic, lin_map)(t)
    plus = point_at(conic, lin_map, t, "+", real=False)
    minus = point_at(conic, lin_map, t, "-", real=False)
    assert (plus == minus) == (value == 0)


def _through_the_base_point() -> tuple[Conic, LinFracMap]:
    # ℓ = (−4/3·x0)/(−5x1 − 3/2·x0) has base point (0 : 1 : 0), which lies on the conic.
    conic = Conic(A=Fraction(1, 2), B=Fraction(1, 3), D=Fraction(1, 3), F=Fraction(-31, 6))
    lin_map = LinFracMap(c=Fraction(-4, 3), d=-5, f=Fraction(-3, 2))
    return conic, lin_map


@pytest.mark.parametrize("sign", ["+", "-"])
def test_point_at_skips_the_base_point_of_the_map(sign: str) -> None:
    conic, lin_map = _through_the_base_point()
    assert on_conic(conic, base_point(lin_map))
    t = Fraction(-8, 81)
    point = point_at(conic, lin_map, t, sign)  # type: ignore[arg-type]
    assert point == ProjPoint(-3, Fraction(-4, 3), 1)
    assert eval_map(lin_map, point) == t


def test_point_at_rejects_a_fiber_tangent_at_the_base_point() -> None:
    # Over t = 8/9 the fiber is the line x1 = 0, tangent to the conic at (0 : 1 : 0).
    conic, lin_map = _through_the_base_point()
    assert disc_poly(conic, lin_map)(Fraction(8, 9)) == 0
    with pytest.raises(DegenerateFiberError):
        point_at(conic, lin_map, Fraction(8, 9))


@settings(max_examples=1000, deadline=None)
@given(
    lin_frac_maps(),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=6, max_size=6),
    small_rationals,
    st.sampled_from(["+", "-"]),
)
def test_conics_through_the_base_point(lin_map: LinFracMap, coeffs: list[int], t: Fraction, sign: str) -> None:
    base = base_point(lin_map)
    A, B, C, D, E, F = (Fraction(c) for c in coeffs)
    assume(any((A, B, C, D, E, F)))
    excess = Conic(A, B, C, D, E, F).evaluate(base)
    if base.x1:
        A -= excess / base.x1**2
    elif base.x2:
        C -= excess / base.x2**2
    else:
        F -= excess / base.x0**2
    assume(any((A, B, C, D, E, F)))
    conic = Conic(A, B, C, D, E, F)
    assume(conic.determinant() != 0)
    assert on_conic(conic, base)
    assume(disc_poly(conic, lin_map)(t) != 0)
    point = point_at(conic, lin_map, t, sign, real=False)  # type: ignore[arg-type]
    assert point != base
    assert on_conic(conic, point)
    assert eval_map(lin_map, point) == t


def test_point_at_assembles_a_fiber_from_partial_charts() -> None:
    # Over t = 0 the fiber x1 + x2 = 0 meets x1² − x2² + 2x1x0 = 0 at (0 : 0 : 1)
    # and (1 : −1 : 0); no single chart sees both.
    conic = Conic(A=1, C=-1, D=1)
    lin_map = LinFracMap(a=1, b=1, d=1, f=1)
    plus = point_at(conic, lin_map, 0, "+")
    minus = point_at(conic, lin_map, 0, "-")
    assert plus != minus
    assert {plus, minus} == {ProjPoint(0, 0, 1), ProjPoint(1, -1, 0)}
    assert eval_map(lin_map, plus) == eval_map(lin_map, minus) == 0
