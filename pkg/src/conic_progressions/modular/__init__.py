"""q-expansions of the moduli parameters k, r and j."""

from conic_progressions.modular.series import QSeries, binomial_factor, euler_product
from conic_progressions.modular.tower import (
    J_FROM_R,
    R_FROM_K,
    TowerCheck,
    TowerReport,
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

__all__ = [
    "J_FROM_R",
    "R_FROM_K",
    "QSeries",
    "TowerCheck",
    "TowerReport",
    "binomial_factor",
    "check_j_from_r",
    "check_r_from_k",
    "divisor_sum",
    "eisenstein_e4",
    "euler_product",
    "j_curve",
    "j_of_r",
    "j_series",
    "k_series",
    "r_curve",
    "r_of_k",
    "r_series",
    "verify_tower",
]
