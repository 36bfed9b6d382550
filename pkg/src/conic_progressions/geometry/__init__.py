"""Conic sections, linear fractional maps and the discriminant Disc(t)."""

from conic_progressions.geometry.conic import (
    P1_INFINITY,
    Conic,
    ConicKind,
    LinFracMap,
    P1Value,
    ProjPoint,
    QuadPoly,
    Sign,
    circle,
    classify_conic,
    coordinate_map,
    disc_poly,
    disc_via_determinant,
    eval_map,
    graph_conic,
    on_conic,
    parabola,
    point_at,
)

__all__ = [
    "P1_INFINITY",
    "Conic",
    "ConicKind",
    "LinFracMap",
    "P1Value",
    "ProjPoint",
    "QuadPoly",
    "Sign",
    "circle",
    "classify_conic",
    "coordinate_map",
    "disc_poly",
    "disc_via_determinant",
    "eval_map",
    "graph_conic",
    "on_conic",
    "parabola",
    "point_at",
]
