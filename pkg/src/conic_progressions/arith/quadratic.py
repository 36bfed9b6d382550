"""Elements a + b√d of a quadratic extension Q(√d)."""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal, Union

from conic_progressions.arith.rational import (
    as_rational,
    format_rational,
    is_squarefree,
    parse_rational,
    rat_sqrt,
    squarefree_decompose,
)
from conic_progressions.errors import (
    FieldDivisionError,
    InvalidInputError,
    RadicandMismatchError,
)

_QUAD_RE = re.compile(
    r"^\s*(?P<a>-?\d+(?:/\d+)?)\s*(?P<op>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>-?\d+)\s*\)\s*$"
)


@dataclass(frozen=True, slots=True, eq=False)
class QuadExtElem:
    """Immutable element ``rat_part + surd_part * sqrt(radicand)``."""

    rat_part: Fraction
    surd_part: Fraction
    radicand: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rat_part", as_rational(self.rat_part))
        object.__setattr__(self, "surd_part", as_rational(self.surd_part))
        if self.radicand in (0, 1) or not is_squarefree(self.radicand):
            raise InvalidInputError(
                f"Radicand {self.radicand} must be a squarefree integer other than 0 and 1."
            )

    @classmethod
    def promote(cls, value: "Field", radicand: int) -> "QuadExtElem":
        if isinstance(value, QuadExtElem):
            if value.radicand != radicand:
                raise RadicandMismatchError(
                    f"Cannot combine Q(sqrt({value.radicand})) with Q(sqrt({radicand}))."
                )
            return value
        return cls(as_rational(value), Fraction(0), radicand)

    @property
    def is_rational(self) -> bool:
        return self.surd_part == 0

    def to_rational(self) -> Fraction:
        if not self.is_rational:
            raise InvalidInputError(f"{self} is not rational.")
        return self.rat_part

    def conjugate(self) -> "QuadExtElem":
        return QuadExtElem(self.rat_part, -self.surd_part, self.radicand)

    def norm(self) -> Fraction:
        return self.rat_part**2 - self.radicand * self.surd_part**2

    def trace(self) -> Fraction:
        return 2 * self.rat_part

    def inverse(self) -> "QuadExtElem":
        n = self.norm()
        if n == 0:
            # A nonzero element of a field has nonzero norm; n == 0 means self == 0.
            raise FieldDivisionError(f"{self} has no inverse.")
        return QuadExtElem(self.rat_part / n, -self.surd_part / n, self.radicand)

    def _coerce(self, other: object) -> "QuadExtElem | None":
        if isinstance(other, (QuadExtElem, Fraction, int)) and not isinstance(other, bool):
            return QuadExtElem.promote(other, self.radicand)
        return None

    def __add__(self, other: object) -> "QuadExtElem":
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return QuadExtElem(self.rat_part + y.rat_part, self.surd_part + y.surd_part, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> "QuadExtElem":
        return QuadExtElem(-self.rat_part, -self.surd_part, self.radicand)

    def __sub__(self, other: object) -> "QuadExtElem":
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other: object) -> "QuadExtElem":
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return y + (-self)

    def __mul__(self, other: object) -> "QuadExtElem":
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        a, b, c, e = self.rat_part, self.surd_part, y.rat_part, y.surd_part
        return QuadExtElem(a * c + self.radicand * b * e, a * e + b * c, self.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadExtElem":
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return self * y.inverse()

    def __rtruediv__(self, other: object) -> "QuadExtElem":
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return y * self.inverse()

    def __pow__(self, exponent: int) -> "QuadExtElem":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QuadExtElem(Fraction(1), Fraction(0), self.radicand)
        n = abs(exponent)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return self.rat_part != 0 or self.surd_part != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExtElem):
            if self.radicand != other.radicand:
                return self.is_rational and other.is_rational and self.rat_part == other.rat_part
            return self.rat_part == other.rat_part and self.surd_part == other.surd_part
        if isinstance(other, (Fraction, int)) and not isinstance(other, bool):
            return self.is_rational and self.rat_part == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.rat_part)
        return hash((self.rat_part, self.surd_part, self.radicand))

    def __str__(self) -> str:
        return format_quad(self)

    def __repr__(self) -> str:
        return f"QuadExtElem({format_quad(self)!r})"


Field = Union[Fraction, int, QuadExtElem]
Op = Literal["add", "sub", "mul", "div"]

_OPERATIONS: dict[str, Callable[[QuadExtElem, QuadExtElem], QuadExtElem]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def quadext_arith(x: QuadExtElem, y: QuadExtElem, op: Op) -> QuadExtElem:
    """Exact field arithmetic in Q(√d); radicands must match."""
    try:
        fn = _OPERATIONS[op]
    except KeyError as exc:
        raise InvalidInputError(f"Unknown operation '{op}'.") from exc
    if x.radicand != y.radicand:
        raise RadicandMismatchError(
            f"Cannot combine Q(sqrt({x.radicand})) with Q(sqrt({y.radicand}))."
        )
    return fn(x, y)


def simplify(value: Field) -> Field:
    """Collapse elements with zero surd part to plain Fractions."""
    if isinstance(value, QuadExtElem) and value.is_rational:
        return value.rat_part
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def is_zero(value: Field) -> bool:
    return not value


def surd(value: Fraction | int) -> Fraction | QuadExtElem:
    """The principal square root of a rational as an exact field element."""
    q = as_rational(value)
    root = rat_sqrt(q)
    if root is not None:
        return root
    d, m = squarefree_decompose(q)
    return QuadExtElem(Fraction(0), m, d)


def square_root_in(value: Field, radicand: int) -> Field | None:
    """Return some r in Q(√radicand) with r² = value, or None when there is none."""
    x = QuadExtElem.promote(value, radicand)
    a, b = x.rat_part, x.surd_part
    if b == 0:
        root = rat_sqrt(a)
        if root is not None:
            return root
        root = rat_sqrt(a / radicand)
        if root is not None:
            return QuadExtElem(Fraction(0), root, radicand)
        return None
    n = rat_sqrt(x.norm())
    if n is None:
        return None
    # (p + q√d)² = p² + d q² + 2pq√d, and the norm is (p² − d q²)².
    for candidate in (n, -n):
        p = rat_sqrt((a + candidate) / 2)
        if p is None or p == 0:
            continue
        root = QuadExtElem(p, b / (2 * p), radicand)
        if root * root == x:
            return root
    return None


def format_quad(value: Field) -> str:
    if not isinstance(value, QuadExtElem):
        return format_rational(as_rational(value))
    sign = "-" if value.surd_part < 0 else "+"
    return (
        f"{format_rational(value.rat_part)} {sign} "
        f"{format_rational(abs(value.surd_part))}*sqrt({value.radicand})"
    )


def parse_quad(text: str) -> Fraction | QuadExtElem:
    match = _QUAD_RE.match(text)
    if match is None:
        return parse_rational(text)
    surd_part = parse_rational(match.group("b"))
    if match.group("op") == "-":
        surd_part = -surd_part
    return QuadExtElem(parse_rational(match.group("a")), surd_part, int(match.group("d")))


def is_square_in(value: Field, radicand: int) -> bool:
    return square_root_in(value, radicand) is not None
