from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conic_progressions.arith.rational import (
    as_rational,
    format_rational,
    height,
    is_square,
    is_squarefree,
    parse_rational,
    rat_sqrt,
    rationals_by_height,
    rationals_of_height,
    squarefree_decompose,
)
from conic_progressions.errors import InvalidInputError

from tests.strategies import nonzero_rationals, small_rationals


@pytest.mark.parametrize(
    ("text", "expected"),
    [("3", Fraction(3)), ("-7/25", Fraction(-7, 25)), (" 4 / 6 ", Fraction(2, 3)), ("0", Fraction(0))],
)
def test_parse_rational(text: str, expected: Fraction) -> None:
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "1/0", "a/b", "", "3/-4"])
def test_parse_rational_rejects_malformed_input(text: str) -> None:
    with pytest.raises(InvalidInputError):
        parse_rational(text)


def test_as_rational_refuses_floats_and_booleans() -> None:
    with pytest.raises(InvalidInputError):
        as_rational(0.5)  # type: ignore[arg-type]
    with pytest.raises(InvalidInputError):
        as_rational(True)


def test_format_rational_drops_unit_denominator() -> None:
    assert format_rational(Fraction(12, 4)) == "3"
    assert format_rational(Fraction(-7, 25)) == "-7/25"


@pytest.mark.parametrize(
    ("value", "root"),
    [(Fraction(16, 9), Fraction(4, 3)), (Fraction(0), Fraction(0)), (Fraction(2), None), (Fraction(-4), None)],
)
def test_rat_sqrt(value: Fraction, root: Fraction | None) -> None:
    assert rat_sqrt(value) == root


@pytest.mark.parametrize(
    ("value", "expected"),
    [(Fraction(12), (3, Fraction(2))), (Fraction(-8, 9), (-2, Fraction(2, 3))), (Fraction(409), (409, Fraction(1)))],
)
def test_squarefree_decompose(value: Fraction, expected: tuple[int, Fraction]) -> None:
    assert squarefree_decompose(value) == expected


def test_squarefree_decompose_rejects_zero() -> None:
    with pytest.raises(InvalidInputError):
        squarefree_decompose(0)


@settings(max_examples=1000, deadline=None)
@given(nonzero_rationals)
def test_squarefree_decompose_reassembles(value: Fraction) -> None:
    d, m = squarefree_decompose(value)
    assert is_squarefree(d)
    assert m > 0
    assert m * m * d == value


@settings(max_examples=1000, deadline=None)
@given(small_rationals)
def test_squares_are_recognised(value: Fraction) -> None:
    assert rat_sqrt(value * value) == abs(value)
    assert is_square(value * value)


def test_height_and_enumeration() -> None:
    assert height(Fraction(-7, 25)) == 25
    assert height(Fraction(14, 3)) == 14
    assert rationals_of_height(1) == [Fraction(-1), Fraction(0), Fraction(1)]
    assert rationals_of_height(2) == [Fraction(-2), Fraction(-1, 2), Fraction(1, 2), Fraction(2)]
    values = list(rationals_by_height(6))
    assert len(values) == len(set(values))
    assert all(height(v) <= 6 for v in values)
    assert [height(v) for v in values] == sorted(height(v) for v in values)
