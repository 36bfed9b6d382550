from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conic_progressions.arith.quadratic import (
    QuadExtElem,
    format_quad,
    is_square_in,
    parse_quad,
    quadext_arith,
    simplify,
    square_root_in,
    surd,
)
from conic_progressions.errors import FieldDivisionError, InvalidInputError, RadicandMismatchError

from tests.strategies import RADICANDS, quad_elements


def q(a: int | Fraction, b: int | Fraction, d: int) -> QuadExtElem:
    return QuadExtElem(Fraction(a), Fraction(b), d)


def test_multiplication_uses_the_radicand() -> None:
    assert q(1, 1, 2) * q(1, -1, 2) == -1
    assert q(3, 2, 6) * q(3, 2, 6) == q(33, 12, 6)


def test_inverse_of_zero_is_rejected() -> None:
    with pytest.raises(FieldDivisionError):
        q(0, 0, 5).inverse()
    with pytest.raises(ZeroDivisionError):
        q(1, 1, 5) / q(0, 0, 5)


def test_mismatched_radicands_are_rejected() -> None:
    with pytest.raises(RadicandMismatchError):
        q(1, 1, 2) + q(1, 1, 3)
    with pytest.raises(RadicandMismatchError):
        quadext_arith(q(1, 1, 2), q(1, 1, 3), "mul")


@pytest.mark.parametrize("radicand", [0, 1, 4, 12])
def test_radicand_must_be_squarefree(radicand: int) -> None:
    with pytest.raises(InvalidInputError):
        q(1, 1, radicand)


def test_rational_elements_compare_with_fractions() -> None:
    assert q(5, 0, 7) == Fraction(5)
    assert hash(q(5, 0, 7)) == hash(Fraction(5))
    assert simplify(q(5, 0, 7)) == Fraction(5)
    assert isinstance(simplify(q(5, 0, 7)), Fraction)


def test_surd_collapses_squares() -> None:
    assert surd(Fraction(49, 4)) == Fraction(7, 2)
    root = surd(24)
    assert root == q(0, 2, 6)
    assert root * root == 24


def test_square_root_in_recovers_twist_root() -> None:
    value = q(576, -320, 6) * q(576, -320, 6)
    root = square_root_in(value, 6)
    assert root is not None
    assert root * root == value
    assert square_root_in(Fraction(409), 409) == q(0, 1, 409)
    assert square_root_in(Fraction(2), 3) is None
    assert is_square_in(Fraction(-3), -3)


def test_format_and_parse() -> None:
    assert format_quad(q(9, -5, 6)) == "9 - 5*sqrt(6)"
    assert format_quad(Fraction(-3, 4)) == "-3/4"
    assert parse_quad("9 - 5*sqrt(6)") == q(9, -5, 6)
    assert parse_quad("1/2 + 3/4*sqrt(-1)") == q(Fraction(1, 2), Fraction(3, 4), -1)
    assert parse_quad("-7/25") == Fraction(-7, 25)


@st.composite
def same_field_triples(draw: st.DrawFn) -> tuple[QuadExtElem, QuadExtElem, QuadExtElem]:
    d = draw(st.sampled_from(RADICANDS))
    return draw(quad_elements(d)), draw(quad_elements(d)), draw(quad_elements(d))


@settings(max_examples=1000, deadline=None)
@given(same_field_triples())
def test_field_axioms(triple: tuple[QuadExtElem, QuadExtElem, QuadExtElem]) -> None:
    x, y, z = triple
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y
    assert (x * y).norm() == x.norm() * y.norm()
    assert x * x.conjugate() == x.norm()
