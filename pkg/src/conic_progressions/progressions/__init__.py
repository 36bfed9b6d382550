"""Arithmetic progressions on conics and their square, congruum and Frey forms."""

from conic_progressions.progressions.congruum import (
    FreyTriple,
    Triangle,
    congruent_point_search,
    congruum_ap_to_curve,
    congruum_curve_to_ap,
    congruum_curve_to_triangle,
    congruum_triangle_to_curve,
    frey_ap_to_curve,
    frey_curve,
    frey_curve_to_ap,
    frey_curve_to_triangle,
    frey_quantities,
    frey_quantities_taylor,
    frey_triangle_to_curve,
)
from conic_progressions.progressions.search import find_progressions
from conic_progressions.progressions.seed import (
    ApTriple,
    ProgressionSeed,
    SlopePair,
    build_seed,
    common_difference,
    curve_for,
    delta_from_slope,
    extend_sequence,
    modulus_k,
    progression_sequence,
    three_term_ap,
    uv_to_xy,
    xy_to_uv,
)
from conic_progressions.progressions.singular import (
    SINGULAR_POINT,
    singular_param,
    singular_param_inverse,
)
from conic_progressions.progressions.squares import (
    FIVE_SQUARES_409,
    TABLE_ONE,
    four_squares_from_point,
    four_squares_from_twist,
    four_squares_to_curve,
    is_square_progression,
    proportional,
    three_squares_param,
    three_squares_recover,
    three_squares_roots,
    twist_square_roots,
)
from conic_progressions.progressions.symmetry import sigma_action, sigma_uv, tau_action, tau_uv

__all__ = [
    "FIVE_SQUARES_409",
    "SINGULAR_POINT",
    "TABLE_ONE",
    "ApTriple",
    "FreyTriple",
    "ProgressionSeed",
    "SlopePair",
    "Triangle",
    "build_seed",
    "common_difference",
    "congruent_point_search",
    "congruum_ap_to_curve",
    "congruum_curve_to_ap",
    "congruum_curve_to_triangle",
    "congruum_triangle_to_curve",
    "curve_for",
    "delta_from_slope",
    "extend_sequence",
    "find_progressions",
    "four_squares_from_point",
    "four_squares_from_twist",
    "four_squares_to_curve",
    "frey_ap_to_curve",
    "frey_curve",
    "frey_curve_to_ap",
    "frey_curve_to_triangle",
    "frey_quantities",
    "frey_quantities_taylor",
    "frey_triangle_to_curve",
    "is_square_progression",
    "modulus_k",
    "progression_sequence",
    "proportional",
    "sigma_action",
    "sigma_uv",
    "singular_param",
    "singular_param_inverse",
    "tau_action",
    "tau_uv",
    "three_squares_param",
    "three_squares_recover",
    "three_squares_roots",
    "three_term_ap",
    "twist_square_roots",
    "uv_to_xy",
    "xy_to_uv",
]
