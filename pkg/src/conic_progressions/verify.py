"""Golden and invariant suites behind ``conic-ap verify``.

Suites are independent, so they run on a thread pool; the report always
lists them in :data:`SUITES` order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from conic_progressions.arith.quadratic import QuadExtElem
from conic_progressions.curves.family import (
    ORIGIN,
    X024,
    EkCurve,
    four_mult_formula,
    lift_twist_point,
    normalize_four_torsion,
    projective_to_point,
)
from conic_progressions.curves.search import rational_points
from conic_progressions.curves.weierstrass import INFINITY, CurvePoint, WeierstrassChange, WeierstrassCurve
from conic_progressions.errors import ConicAPError
from conic_progressions.geometry.conic import circle, coordinate_map, graph_conic
from conic_progressions.modular.tower import verify_tower
from conic_progressions.progressions.congruum import (
    FreyTriple,
    Triangle,
    congruum_ap_to_curve,
    congruum_curve_to_ap,
    congruum_curve_to_triangle,
    congruum_triangle_to_curve,
    frey_ap_to_curve,
    frey_curve_to_ap,
)
from conic_progressions.progressions.seed import ProgressionSeed, build_seed, common_difference, curve_for
from conic_progressions.progressions.squares import (
    FIVE_SQUARES_409,
    TABLE_ONE,
    four_squares_from_point,
    four_squares_from_twist,
    four_squares_to_curve,
    is_square_progression,
    proportional,
    twist_square_roots,
)
from conic_progressions.progressions.symmetry import sigma_action, tau_action

LOGGER = logging.getLogger(__name__)

SUITES = ("table1", "tower", "symmetry", "congruum", "twist", "torsion")
TORSION_KS = (Fraction(-1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(25, 9))


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, label: str, condition: Callable[[], bool]) -> None:
        self.checks += 1
        try:
            ok = condition()
        except ConicAPError as exc:
            self.failures.append(f"{label}: {exc.code}: {exc}")
            return
        if not ok:
            self.failures.append(label)

    def to_payload(self) -> dict[str, object]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": list(self.failures),
        }


@dataclass(frozen=True)
class VerifyReport:
    results: tuple[SuiteResult, ...]

    def __bool__(self) -> bool:
        return all(result.passed for result in self.results)

    def to_payload(self) -> dict[str, object]:
        return {"ok": bool(self), "suites": [result.to_payload() for result in self.results]}


def circle_seed() -> ProgressionSeed:
    """x² + y² = 25 with ℓ = x and t0 = 3 (k = 25/9)."""
    return build_seed(circle(25), coordinate_map("x"), 3)


def graph_seed() -> ProgressionSeed:
    """y² = 4 + (15/2)x + (9/2)x² with ℓ = x and t0 = 0 (k = −7/25)."""
    return build_seed(graph_conic(4, Fraction(15, 2), Fraction(9, 2)), coordinate_map("x"), 0)


def table1_suite(result: SuiteResult, order_cap: int = 12) -> None:
    points = [point for _, point in TABLE_ONE]
    for row, point in TABLE_ONE:
        result.check(f"{row} maps to {point!r}", lambda row=row, point=point: four_squares_to_curve(*row) == point)
        result.check(f"{point!r} lies on X024", lambda point=point: X024.contains(point))
        result.check(
            f"{point!r} maps back to {row}",
            lambda row=row, point=point: proportional(four_squares_from_point(point), row),
        )
    result.check(
        "orders are {1, 2, 2, 2, 4, 4, 4, 4}",
        lambda: sorted(X024.order(p, order_cap) or 0 for p in points) == [1, 2, 2, 2, 4, 4, 4, 4],
    )
    result.check(
        "closed under the group law",
        lambda: all(X024.add(p, q) in points for p in points for q in points),
    )


def tower_suite(result: SuiteResult, order: int) -> None:
    report = verify_tower(order)
    for check in report.checks:
        result.check(f"{check.identity} through q^{order}", lambda check=check: check.holds)


def _symmetry_on(result: SuiteResult, seed: ProgressionSeed, height_bound: int) -> None:
    k = seed.k

    def delta(point: CurvePoint) -> Fraction:
        return common_difference(seed.disc, seed.t0, k, point)

    sample = [
        p for p in rational_points(curve_for(seed), height_bound) if not p.is_infinity and p.X * p.Y != 0
    ]
    sample.append(ORIGIN)
    for point in sample:
        sigma = sigma_action(k, point)
        sigma3 = sigma_action(k, sigma_action(k, sigma))
        result.check(f"k={k}: σ⁴{point!r} = P", lambda point=point, s3=sigma3: sigma_action(k, s3) == point)
        result.check(f"k={k}: τ²{point!r} = P", lambda point=point: tau_action(k, tau_action(k, point)) == point)
        result.check(
            f"k={k}: τστ{point!r} = σ⁻¹P",
            lambda point=point, s3=sigma3: tau_action(k, sigma_action(k, tau_action(k, point))) == s3,
        )
        if point.X * point.Y != 0:
            result.check(f"k={k}: δ(σP) = −δ(P) at {point!r}", lambda point=point, s=sigma: delta(s) == -delta(point))
            result.check(
                f"k={k}: δ(τP) = −δ(P) at {point!r}",
                lambda point=point: delta(tau_action(k, point)) == -delta(point),
            )


def symmetry_suite(result: SuiteResult, height_bound: int) -> None:
    result.check("τ(0, 0) = (0, −4k)", lambda: tau_action(2, ORIGIN) == CurvePoint(Fraction(0), Fraction(-8)))
    for seed in (graph_seed(), circle_seed()):
        _symmetry_on(result, seed, height_bound)


def congruum_suite(result: SuiteResult) -> None:
    point = CurvePoint(Fraction(72), Fraction(576))
    result.check("(1, 5, 7), δ=24 → (72, 576)", lambda: congruum_ap_to_curve(1, 5, 7, 24) == point)
    result.check("(72, 576) → (1, 5, 7)", lambda: congruum_curve_to_ap(point, 24) == (1, 5, 7))
    result.check(
        "(72, 576) → triangle (8, 6, 10)",
        lambda: congruum_curve_to_triangle(point, 24) == Triangle(8, 6, 10),
    )
    result.check("triangle (8, 6, 10) → (72, 576)", lambda: congruum_triangle_to_curve(Triangle(8, 6, 10)) == point)
    result.check(
        "triangle (3, 4, 5) → (12, 36)",
        lambda: congruum_triangle_to_curve(Triangle(3, 4, 5)) == CurvePoint(Fraction(12), Fraction(36)),
    )
    result.check(
        "(12, 36) → triangle (3, 4, 5)",
        lambda: congruum_curve_to_triangle(CurvePoint(Fraction(12), Fraction(36)), 6) == Triangle(3, 4, 5),
    )
    frey = FreyTriple(3, 5, 8)
    result.check("Frey (1, 2, 3) → (15, 60)", lambda: frey_ap_to_curve(1, 2, 3, frey) == CurvePoint(Fraction(15), Fraction(60)))
    result.check(
        "Frey (15, 60) → (1, 2, 3)",
        lambda: frey_curve_to_ap(CurvePoint(Fraction(15), Fraction(60)), frey) == (1, 2, 3),
    )


def twist_suite(result: SuiteResult) -> None:
    roots = twist_square_roots(6, -8, -16)
    expected = (
        -64 * QuadExtElem(Fraction(9), Fraction(-5), 6),
        -64 * QuadExtElem(Fraction(15), Fraction(-1), 6),
        -64 * QuadExtElem(Fraction(15), Fraction(1), 6),
        -64 * QuadExtElem(Fraction(9), Fraction(5), 6),
    )
    result.check("k=6, (−8, −16) roots are −64(9 ∓ 5√6), −64(15 ∓ √6)", lambda: roots == expected)
    result.check(
        "k=6 squares are in progression over Q(√6)",
        lambda: is_square_progression(four_squares_from_twist(6, -8, -16), 6),
    )
    result.check(
        "(−8, −16) lifts onto X024 over Q(√6)",
        lambda: X024.contains(lift_twist_point(6, CurvePoint(Fraction(-8), Fraction(-16)))),
    )
    result.check("49, 169, 289, 409, 529 over Q(√409)", lambda: is_square_progression(FIVE_SQUARES_409, 409))


_CHANGES = (
    WeierstrassChange(Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
    WeierstrassChange(Fraction(2), Fraction(1), Fraction(-3), Fraction(5)),
    WeierstrassChange(Fraction(-1, 3), Fraction(7, 2), Fraction(1), Fraction(-2)),
    WeierstrassChange(Fraction(5), Fraction(-4), Fraction(2, 7), Fraction(0)),
)
_GRID = (Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3), Fraction(5))


def torsion_suite(result: SuiteResult) -> None:
    for k in TORSION_KS:
        curve = EkCurve(k)
        result.check(f"[4](0,0) = O on E_{k}", lambda curve=curve: curve.mul(4, ORIGIN) == INFINITY)
        result.check(f"[2](0,0) ≠ O on E_{k}", lambda curve=curve: curve.mul(2, ORIGIN) != INFINITY)
        for change in _CHANGES:
            model = change.apply_to_curve(curve.curve)
            point = change.push_point(ORIGIN)
            result.check(
                f"normalization recovers k={k} from {change}",
                lambda model=model, point=point, k=k: normalize_four_torsion(model, point).k == k,
            )
    for k2 in _GRID:
        for k3 in _GRID:
            cubic = WeierstrassCurve(Fraction(4), k2, 4 * k3, Fraction(0), Fraction(0))
            if cubic.is_singular:
                continue
            result.check(
                f"[4](0,0) formula at k2={k2}, k3={k3}",
                lambda cubic=cubic, k2=k2, k3=k3: projective_to_point(four_mult_formula(k2, k3))
                == cubic.mul(4, ORIGIN),
            )


def run_suite(name: str, order: int = 20, height_bound: int = 12, order_cap: int = 12) -> SuiteResult:
    result = SuiteResult(name)
    try:
        if name == "table1":
            table1_suite(result, order_cap)
        elif name == "tower":
            tower_suite(result, order)
        elif name == "symmetry":
            symmetry_suite(result, height_bound)
        elif name == "congruum":
            congruum_suite(result)
        elif name == "twist":
            twist_suite(result)
        elif name == "torsion":
            torsion_suite(result)
        else:
            raise ValueError(f"Unknown suite {name!r}.")
    except ConicAPError as exc:
        result.failures.append(f"{exc.code}: {exc}")
    LOGGER.info("Suite %s: %d checks, %d failures", name, result.checks, len(result.failures))
    return result


def run_suites(
    names: tuple[str, ...] | list[str],
    order: int = 20,
    height_bound: int = 12,
    order_cap: int = 12,
) -> VerifyReport:
    selected = [name for name in SUITES if name in names]
    results: dict[str, SuiteResult] = {}
    with ThreadPoolExecutor(max_workers=max(1, len(selected))) as executor:
        futures = {executor.submit(run_suite, name, order, height_bound, order_cap): name for name in selected}
        for future in as_completed(futures):
            results[futures[future]] = future.result()
    return VerifyReport(tuple(results[name] for name in selected))
