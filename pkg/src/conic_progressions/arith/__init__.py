"""Exact scalar arithmetic: rationals and the quadratic extensions Q(√d)."""

from conic_progressions.arith.quadratic import (
    Field,
    QuadExtElem,
    format_quad,
    is_square_in,
    is_zero,
    parse_quad,
    quadext_arith,
    simplify,
    square_root_in,
    surd,
)
from conic_progressions.arith.rational import (
    RationalLike,
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

__all__ = [
    "Field",
    "QuadExtElem",
    "RationalLike",
    "as_rational",
    "format_quad",
    "format_rational",
    "height",
    "is_square",
    "is_square_in",
    "is_squarefree",
    "is_zero",
    "parse_quad",
    "parse_rational",
    "quadext_arith",
    "rat_sqrt",
    "rationals_by_height",
    "rationals_of_height",
    "simplify",
    "square_root_in",
    "squarefree_decompose",
    "surd",
]
