"""Bounded, deterministic search for rational points by height of X."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from conic_progressions.arith.rational import rationals_of_height
from conic_progressions.curves.weierstrass import INFINITY, CurvePoint, WeierstrassCurve
from conic_progressions.errors import InvalidInputError

LOGGER = logging.getLogger(__name__)

Coefficients = tuple[Fraction, Fraction, Fraction, Fraction, Fraction]


def _points_of_height(coefficients: Coefficients, h: int) -> list[tuple[Fraction, Fraction]]:
    # Workers receive plain coefficients so the task pickles cheaply.
    curve = WeierstrassCurve(*coefficients)
    found: list[tuple[Fraction, Fraction]] = []
    for x in rationals_of_height(h):
        for y in curve.solve_y(x):
            found.append((x, y))
    return found


def rational_points(
    curve: WeierstrassCurve,
    height_bound: int,
    workers: int = 1,
) -> list[CurvePoint]:
    """Infinity followed by every affine point whose X has height ≤ ``height_bound``.

    Points are ordered by the height of X, then X, then Y. With ``workers > 1``
    heights are searched in a process pool; the result is identical.
    """
    if height_bound < 1:
        raise InvalidInputError("height_bound must be at least 1.")
    if workers < 1:
        raise InvalidInputError("workers must be at least 1.")

    coefficients = curve.coefficients()
    heights = range(1, height_bound + 1)
    if workers == 1:
        batches = [_points_of_height(coefficients, h) for h in heights]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            batches = list(
                executor.map(
                    _points_of_height,
                    [coefficients] * height_bound,
                    heights,
                    chunksize=max(1, height_bound // (4 * workers)),
                )
            )

    points = [INFINITY]
    for batch in batches:
        points.extend(CurvePoint(x, y) for x, y in batch)
    LOGGER.info(
        "Found %d affine points on %s with height(X) <= %d",
        len(points) - 1,
        curve,
        height_bound,
    )
    return points
