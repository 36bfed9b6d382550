"""The moduli parameters k, r, j as q-expansions, and the maps between them."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import divisor_sigma

from conic_progressions.arith.rational import RationalLike, as_rational
from conic_progressions.curves.weierstrass import WeierstrassCurve
from conic_progressions.errors import InvalidInputError, PoleError, SingularCurveError
from conic_progressions.modular.series import QSeries, euler_product

LOGGER = logging.getLogger(__name__)

R_FROM_K = "r = 16k^2/(1-k)"
J_FROM_R = "j = (r+256)^3/r^2"


def divisor_sum(n: int, alpha: int) -> int:
    if n < 1:
        raise InvalidInputError(f"divisor_sum needs n >= 1, got {n}.")
    return int(divisor_sigma(n, alpha))


def _require_order(precision: int) -> None:
    if precision < 1:
        raise InvalidInputError(f"A series needs at least one coefficient, got {precision}.")


def k_series(precision: int) -> QSeries:
    """−1/(16q·Π(1+qⁿ)⁸(1+q²ⁿ)⁸) with ``precision`` coefficients from q⁻¹."""
    _require_order(precision)
    product = euler_product(1, 1, 8, precision) * euler_product(2, 1, 8, precision)
    return (product.inverse() * Fraction(-1, 16)).shift(-1)


def r_series(precision: int) -> QSeries:
    """1/(q·Π(1+qⁿ)²⁴)."""
    _require_order(precision)
    return euler_product(1, 1, 24, precision).inverse().shift(-1)


def eisenstein_e4(precision: int) -> QSeries:
    """1 + 240·Σ σ₃(n)qⁿ."""
    _require_order(precision)
    coeffs = [Fraction(1)] + [Fraction(240 * divisor_sum(n, 3)) for n in range(1, precision)]
    return QSeries(0, tuple(coeffs))


def j_series(precision: int) -> QSeries:
    """E₄³/(q·Π(1−qⁿ)²⁴); starts q⁻¹ + 744 + 196884q."""
    _require_order(precision)
    return (eisenstein_e4(precision) ** 3 / euler_product(1, -1, 24, precision)).shift(-1)


def r_of_k(k: RationalLike) -> Fraction:
    k = as_rational(k)
    if k == 1:
        raise PoleError("r(k) has a pole at k = 1.")
    return 16 * k * k / (1 - k)


def j_of_r(r: RationalLike) -> Fraction:
    r = as_rational(r)
    if r == 0:
        raise PoleError("j(r) has a pole at r = 0.")
    return (r + 256) ** 3 / (r * r)


def r_curve(r: RationalLike) -> WeierstrassCurve:
    """Y² = X³ + 2X² + r/(r+64)·X, whose j-invariant is j_of_r(r)."""
    r = as_rational(r)
    if r == -64:
        raise PoleError("r = -64 is a pole of the level-2 curve.")
    if r == 0:
        raise SingularCurveError("r = 0 gives a singular cubic.")
    return WeierstrassCurve(Fraction(0), Fraction(2), Fraction(0), r / (r + 64), Fraction(0))


def j_curve(j: RationalLike) -> WeierstrassCurve:
    """Y² + XY = X³ + 36/(1728−j)·X + 1/(1728−j)."""
    j = as_rational(j)
    if j == 1728:
        raise PoleError("j = 1728 is a pole of this model.")
    if j == 0:
        raise SingularCurveError("j = 0 gives a singular cubic in this model.")
    scale = 1 / (1728 - j)
    return WeierstrassCurve(Fraction(1), Fraction(0), Fraction(0), 36 * scale, scale)


@dataclass(frozen=True, slots=True)
class TowerCheck:
    identity: str
    holds: bool
    first_mismatch: int | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_payload(self) -> dict[str, object]:
        return {"identity": self.identity, "holds": self.holds, "first_mismatch": self.first_mismatch}


@dataclass(frozen=True, slots=True)
class TowerReport:
    order: int
    checks: tuple[TowerCheck, ...]

    def __bool__(self) -> bool:
        return all(self.checks)

    @property
    def failure(self) -> TowerCheck | None:
        return next((check for check in self.checks if not check), None)

    def to_payload(self) -> dict[str, object]:
        return {
            "order": self.order,
            "ok": bool(self),
            "checks": [check.to_payload() for check in self.checks],
        }


def _compare(identity: str, lhs: QSeries, rhs: QSeries, order: int) -> TowerCheck:
    mismatch = lhs.first_mismatch(rhs, -1, order)
    if mismatch is not None:
        LOGGER.info("%s fails at q^%d", identity, mismatch)
    return TowerCheck(identity, mismatch is None, mismatch)


def check_r_from_k(k: QSeries, r: QSeries, order: int) -> TowerCheck:
    """Compare r with 16k²/(1−k) on exponents −1 … order."""
    return _compare(R_FROM_K, r, 16 * k * k / (1 - k), order)


def check_j_from_r(r: QSeries, j: QSeries, order: int) -> TowerCheck:
    """Compare j with (r+256)³/r² on exponents −1 … order."""
    return _compare(J_FROM_R, j, (r + 256) ** 3 / (r * r), order)


def verify_tower(order: int) -> TowerReport:
    if order < 2:
        raise InvalidInputError(f"verify_tower needs order >= 2, got {order}.")
    precision = order + 2
    k, r, j = k_series(precision), r_series(precision), j_series(precision)
    report = TowerReport(order, (check_r_from_k(k, r, order), check_j_from_r(r, j, order)))
    LOGGER.info("Modular tower through q^%d: %s", order, "ok" if report else "FAILED")
    return report
