"""Enumerate the nontrivial progressions of a seed up to a height bound."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterator

from conic_progressions.arith.rational import rationals_by_height
from conic_progressions.curves.search import rational_points
from conic_progressions.curves.weierstrass import CurvePoint
from conic_progressions.errors import (
    DegenerateFiberError,
    ExcludedLocusError,
    ImaginaryPointError,
    NonSquareDiscriminantError,
)
from conic_progressions.geometry.conic import Sign
from conic_progressions.progressions.seed import (
    ApTriple,
    ProgressionSeed,
    common_difference,
    curve_for,
    three_term_ap,
)
from conic_progressions.progressions.singular import singular_param

LOGGER = logging.getLogger(__name__)

_SKIPPED = (
    DegenerateFiberError,
    ExcludedLocusError,
    ImaginaryPointError,
    NonSquareDiscriminantError,
)


def _candidate_points(seed: ProgressionSeed, height_bound: int, workers: int) -> Iterator[CurvePoint]:
    if seed.is_singular:
        for t in rationals_by_height(height_bound):
            if t != -1:
                yield singular_param(t)
        return
    yield from rational_points(curve_for(seed), height_bound, workers)


def find_progressions(
    seed: ProgressionSeed,
    height_bound: int,
    sign: Sign = "+",
    workers: int = 1,
) -> list[ApTriple]:
    """Every nontrivial progression from points of height ≤ bound, one per δ, in search order.

    For k = 1 the candidates are the images of the parametrization at
    parameters of height ≤ bound; otherwise they are the points of E_k whose
    X has height ≤ bound.
    """
    found: list[ApTriple] = []
    seen: set[Fraction] = set()
    for point in _candidate_points(seed, height_bound, workers):
        try:
            delta = common_difference(seed.disc, seed.t0, seed.k, point)
        except ExcludedLocusError:
            LOGGER.debug("Skipping %r on the excluded locus", point)
            continue
        if delta == 0 or delta in seen:
            continue
        try:
            triple = three_term_ap(seed, point, sign)
        except _SKIPPED as exc:
            LOGGER.warning("Skipping %r: %s", point, exc)
            continue
        seen.add(delta)
        found.append(triple)
    LOGGER.info("Seed t0=%s k=%s: %d progressions", seed.t0, seed.k, len(found))
    return found
