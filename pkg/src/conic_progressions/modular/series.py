"""Truncated formal Laurent series in q with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Union

from conic_progressions.arith.rational import as_rational, format_rational
from conic_progressions.errors import InvalidInputError, SeriesPrecisionError

Scalar = Union[Fraction, int]


@dataclass(frozen=True, slots=True)
class QSeries:
    """Σ coeffs[i]·q^(lead + i), known for exponents below ``lead + len(coeffs)``."""

    lead: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar], lead: int = 0) -> "QSeries":
        return cls(lead, tuple(Fraction(c) for c in coeffs))

    @classmethod
    def one(cls, precision: int) -> "QSeries":
        return cls(0, (Fraction(1),) + (Fraction(0),) * (precision - 1))

    @property
    def precision(self) -> int:
        """Number of known coefficients counted from ``lead``."""
        return len(self.coeffs)

    @property
    def end(self) -> int:
        """First exponent whose coefficient is unknown."""
        return self.lead + len(self.coeffs)

    def coefficient(self, exponent: int) -> Fraction:
        if exponent >= self.end:
            raise SeriesPrecisionError(f"q^{exponent} is beyond the precision q^{self.end}.")
        if exponent < self.lead:
            return Fraction(0)
        return self.coeffs[exponent - self.lead]

    def shift(self, exponent: int) -> "QSeries":
        """Multiply by q^exponent."""
        return QSeries(self.lead + exponent, self.coeffs)

    def truncated(self, end: int) -> "QSeries":
        if end >= self.end:
            return self
        return QSeries(self.lead, self.coeffs[: max(0, end - self.lead)])

    def stripped(self) -> "QSeries":
        """Drop leading zero coefficients so ``coeffs[0]`` is nonzero when possible."""
        skip = 0
        while skip < len(self.coeffs) and self.coeffs[skip] == 0:
            skip += 1
        if skip == len(self.coeffs):
            return self
        return QSeries(self.lead + skip, self.coeffs[skip:])

    def __add__(self, other: object) -> "QSeries":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if self.end <= 0:
                raise SeriesPrecisionError("Adding a constant needs precision past q^0.")
            other = QSeries(0, (Fraction(other),) + (Fraction(0),) * self.end)
        if not isinstance(other, QSeries):
            return NotImplemented
        lead = min(self.lead, other.lead)
        end = min(self.end, other.end)
        coeffs = tuple(
            self.coefficient(e) + other.coefficient(e) for e in range(lead, end)
        )
        return QSeries(lead, coeffs).stripped()

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(self.lead, tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "QSeries":
        if isinstance(other, (int, Fraction, QSeries)) and not isinstance(other, bool):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: object) -> "QSeries":
        return (-self) + other

    def __mul__(self, other: object) -> "QSeries":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QSeries(self.lead, tuple(c * other for c in self.coeffs))
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        coeffs = tuple(
            sum((a[i] * b[m - i] for i in range(m + 1)), Fraction(0)) for m in range(n)
        )
        return QSeries(self.lead + other.lead, coeffs)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        series = self.stripped()
        if not series.coeffs or series.coeffs[0] == 0:
            raise SeriesPrecisionError("Cannot invert a series with no known nonzero coefficient.")
        a = series.coeffs
        inv_lead = 1 / a[0]
        b: list[Fraction] = [inv_lead]
        for m in range(1, len(a)):
            b.append(-inv_lead * sum((a[i] * b[m - i] for i in range(1, m + 1)), Fraction(0)))
        return QSeries(-series.lead, tuple(b))

    def __truediv__(self, other: object) -> "QSeries":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise InvalidInputError("Division of a series by zero.")
            return self * (1 / Fraction(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "QSeries":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "QSeries":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QSeries.one(base.precision)
        n = abs(exponent)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def first_mismatch(self, other: "QSeries", start: int, stop: int) -> int | None:
        """First exponent in [start, stop] where the coefficients differ."""
        for exponent in range(start, stop + 1):
            if self.coefficient(exponent) != other.coefficient(exponent):
                return exponent
        return None

    def perturbed(self, exponent: int, amount: Scalar = 1) -> "QSeries":
        """A copy with ``amount`` added to the coefficient of q^exponent."""
        if not self.lead <= exponent < self.end:
            raise SeriesPrecisionError(f"q^{exponent} is outside the known coefficients.")
        coeffs = list(self.coeffs)
        coeffs[exponent - self.lead] += Fraction(amount)
        return QSeries(self.lead, tuple(coeffs))

    def to_payload(self) -> dict[str, object]:
        return {"lead": self.lead, "coefficients": [format_rational(c) for c in self.coeffs]}


def binomial_factor(step: int, sign: int, power: int, precision: int) -> QSeries:
    """(1 + sign·q^step)^power through q^(precision − 1)."""
    coeffs = [Fraction(0)] * precision
    for j in range(power + 1):
        if j * step >= precision:
            break
        coeffs[j * step] += Fraction(comb(power, j) * sign**j)
    return QSeries(0, tuple(coeffs))


def euler_product(step_scale: int, sign: int, power: int, precision: int) -> QSeries:
    """Π_{n≥1} (1 + sign·q^(step_scale·n))^power through q^(precision − 1)."""
    result = QSeries.one(precision)
    n = 1
    while step_scale * n < precision:
        result = result * binomial_factor(step_scale * n, sign, power, precision)
        n += 1
    return result
