"""Weierstrass curves, the E_k family and point search."""

from conic_progressions.curves.family import (
    ORIGIN,
    X024,
    EkCurve,
    NormalizationResult,
    ProjectiveTriple,
    congruent_curve,
    ek_weierstrass,
    four_mult_formula,
    lift_twist_point,
    normalize_four_torsion,
    projective_to_point,
    singular_cubic,
    twist_x024,
)
from conic_progressions.curves.search import rational_points
from conic_progressions.curves.weierstrass import (
    INFINITY,
    CurvePoint,
    WeierstrassChange,
    WeierstrassCurve,
)

__all__ = [
    "INFINITY",
    "ORIGIN",
    "X024",
    "CurvePoint",
    "EkCurve",
    "NormalizationResult",
    "ProjectiveTriple",
    "WeierstrassChange",
    "WeierstrassCurve",
    "congruent_curve",
    "ek_weierstrass",
    "four_mult_formula",
    "lift_twist_point",
    "normalize_four_torsion",
    "projective_to_point",
    "rational_points",
    "singular_cubic",
    "twist_x024",
]
