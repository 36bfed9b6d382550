from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conic_progressions.errors import InvalidInputError, SeriesPrecisionError
from conic_progressions.modular.series import QSeries, binomial_factor, euler_product

from tests.strategies import nonzero_rationals, small_rationals


def series(*coeffs: int | Fraction, lead: int = 0) -> QSeries:
    return QSeries.from_coefficients(coeffs, lead)


def test_coefficients_and_precision() -> None:
    s = series(1, 2, 3, lead=-1)
    assert s.precision == 3
    assert s.end == 2
    assert s.coefficient(-5) == 0
    assert s.coefficient(0) == 2
    with pytest.raises(SeriesPrecisionError):
        s.coefficient(2)


def test_shift_truncate_strip() -> None:
    s = series(0, 0, 1, 4)
    assert s.shift(-2) == series(0, 0, 1, 4, lead=-2)
    assert s.truncated(2) == series(0, 0)
    assert s.truncated(10) is s
    assert s.stripped() == series(1, 4, lead=2)
    assert series(0, 0).stripped() == series(0, 0)


def test_addition() -> None:
    assert series(1, 1, 1) + series(1, 1, lead=1) == series(1, 2, 2)
    assert series(1, 0, 0, lead=-1) + 5 == series(1, 5, 0, lead=-1)
    assert 1 - series(1, 2, 3) == series(-2, -3, lead=1)
    with pytest.raises(SeriesPrecisionError):
        series(1, 2, lead=-3) + 1


def test_multiplication_and_inverse() -> None:
    assert series(1, 1, 0) * series(1, -1, 0) == series(1, 0, -1)
    assert series(1, -1, 0, 0).inverse() == series(1, 1, 1, 1)
    assert series(1, -1, 0, lead=1).inverse() == series(1, 1, 1, lead=-1)
    assert series(2, 4) * Fraction(1, 2) == series(1, 2)
    assert series(1, 1, 0, 0) ** 3 == series(1, 3, 3, 1)
    assert series(1, -1, 0) ** -1 == series(1, 1, 1)
    assert 1 / series(1, -1, 0) == series(1, 1, 1)
    with pytest.raises(SeriesPrecisionError):
        series(0, 0, 0).inverse()
    with pytest.raises(InvalidInputError):
        series(1, 2) / 0


def test_first_mismatch_and_perturbation() -> None:
    s = series(1, 2, 3, 4, lead=-1)
    bumped = s.perturbed(1, 7)
    assert bumped.coefficient(1) == 10
    assert s.first_mismatch(bumped, -1, 2) == 1
    assert s.first_mismatch(bumped, -1, 0) is None
    with pytest.raises(SeriesPrecisionError):
        s.perturbed(3)


def test_products() -> None:
    assert binomial_factor(2, 1, 3, 7) == series(1, 0, 3, 0, 3, 0, 1)
    # Pentagonal numbers: 1 − q − q² + q⁵ + q⁷ − …
    assert euler_product(1, -1, 1, 8) == series(1, -1, -1, 0, 0, 1, 0, 1)


def test_payload() -> None:
    assert series(Fraction(-1, 16), Fraction(1, 2), lead=-1).to_payload() == {
        "lead": -1,
        "coefficients": ["-1/16", "1/2"],
    }


@settings(max_examples=1000, deadline=None)
@given(nonzero_rationals, st.lists(small_rationals, min_size=1, max_size=6))
def test_inverse_is_a_two_sided_inverse(head: Fraction, tail: list[Fraction]) -> None:
    s = QSeries(0, (head, *tail))
    one = QSeries.one(s.precision)
    assert s * s.inverse() == one
    assert s.inverse() * s == one


def agree(s: QSeries, t: QSeries) -> bool:
    """Coefficients match wherever both series are known."""
    return all(s.coefficient(e) == t.coefficient(e) for e in range(min(s.lead, t.lead), min(s.end, t.end)))


@st.composite
def series_triples(draw: st.DrawFn) -> tuple[QSeries, QSeries, QSeries]:
    n = draw(st.integers(min_value=1, max_value=6))
    lead = draw(st.integers(min_value=-1, max_value=1))

    def one() -> QSeries:
        head = draw(nonzero_rationals)
        tail = draw(st.lists(small_rationals, min_size=n - 1, max_size=n - 1))
        return QSeries(lead, (head, *tail))

    return one(), one(), one()


@settings(max_examples=1000, deadline=None)
@given(series_triples())
def test_series_ring_axioms(triple: tuple[QSeries, QSeries, QSeries]) -> None:
    a, b, c = triple
    zero = QSeries(0, (Fraction(0),) * (a.end + 1))
    assert agree(a + b, b + a)
    assert agree((a + b) + c, a + (b + c))
    assert agree(a + zero, a)
    assert agree(a - a, zero)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert agree(a * QSeries.one(a.precision), a)
    assert agree(a * (b + c), a * b + a * c)
    assert agree((a + b) * c, a * c + b * c)
