from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conic_progressions.curves.family import EkCurve
from conic_progressions.errors import InvalidInputError, PoleError, SingularCurveError
from conic_progressions.modular import (
    check_j_from_r,
    check_r_from_k,
    divisor_sum,
    eisenstein_e4,
    j_curve,
    j_of_r,
    j_series,
    k_series,
    r_curve,
    r_of_k,
    r_series,
    verify_tower,
)

from tests.strategies import ek_parameters


def test_divisor_sum() -> None:
    assert divisor_sum(1, 3) == 1
    assert divisor_sum(2, 3) == 9
    assert divisor_sum(6, 3) == 252
    assert divisor_sum(12, 1) == 28
    with pytest.raises(InvalidInputError):
        divisor_sum(0, 3)


def test_leading_coefficients() -> None:
    assert eisenstein_e4(3).coeffs == (1, 240, 2160)
    j = j_series(4)
    assert j.lead == -1
    assert j.coeffs == (1, 744, 196884, 21493760)
    r = r_series(3)
    assert r.lead == -1
    assert r.coeffs == (1, -24, 276)
    k = k_series(2)
    assert k.lead == -1
    assert k.coeffs == (Fraction(-1, 16), Fraction(1, 2))
    with pytest.raises(InvalidInputError):
        k_series(0)


@pytest.mark.parametrize("order", [5, 15, 20])
def test_tower_identities_hold(order: int) -> None:
    report = verify_tower(order)
    assert report
    assert report.failure is None
    assert [check.identity for check in report.checks] == ["r = 16k^2/(1-k)", "j = (r+256)^3/r^2"]
    assert report.to_payload()["ok"] is True


def test_verify_tower_needs_two_terms() -> None:
    with pytest.raises(InvalidInputError):
        verify_tower(1)


def test_perturbation_is_located() -> None:
    order = 10
    k, r, j = k_series(order + 2), r_series(order + 2), j_series(order + 2)
    broken = check_j_from_r(r, j.perturbed(3), order)
    assert not broken
    assert broken.first_mismatch == 3
    broken = check_r_from_k(k, r.perturbed(0, Fraction(1, 7)), order)
    assert broken.first_mismatch == 0
    assert check_r_from_k(k, r, order).holds


def test_rational_maps() -> None:
    assert r_of_k(-1) == 8
    assert j_of_r(8) == 287496
    assert j_of_r(-256) == 0
    with pytest.raises(PoleError):
        r_of_k(1)
    with pytest.raises(PoleError):
        j_of_r(0)


@settings(max_examples=1000, deadline=None)
@given(ek_parameters)
def test_j_of_ek_factors_through_r(k: Fraction) -> None:
    r = r_of_k(k)
    assert EkCurve(k).j_invariant() == j_of_r(r)
    if r != -64:
        assert r_curve(r).j_invariant() == j_of_r(r)


@pytest.mark.parametrize("j", [Fraction(1), Fraction(287496), Fraction(-3375), Fraction(35152, 9)])
def test_j_curve_has_the_requested_invariant(j: Fraction) -> None:
    assert j_curve(j).j_invariant() == j


def test_model_curve_edge_cases() -> None:
    with pytest.raises(PoleError):
        r_curve(-64)
    with pytest.raises(SingularCurveError):
        r_curve(0)
    with pytest.raises(PoleError):
        j_curve(1728)
    with pytest.raises(SingularCurveError):
        j_curve(0)
