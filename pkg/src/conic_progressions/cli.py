"""Command line interface for conic-progressions."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from pydantic import ValidationError

from conic_progressions.arith.rational import format_rational
from conic_progressions.curves.family import congruent_curve, normalize_four_torsion
from conic_progressions.curves.weierstrass import CurvePoint
from conic_progressions.errors import ConicAPError, InvalidInputError
from conic_progressions.modular.tower import j_series, k_series, r_series
from conic_progressions.progressions.congruum import (
    congruent_point_search,
    congruum_ap_to_curve,
    congruum_curve_to_ap,
    congruum_curve_to_triangle,
    congruum_triangle_to_curve,
)
from conic_progressions.progressions.search import find_progressions
from conic_progressions.progressions.seed import build_seed
from conic_progressions.schemas import (
    CongruentRequest,
    FindApRequest,
    NormalizeRequest,
    normalization_payload,
    point_payload,
    triangle_payload,
    triple_payload,
)
from conic_progressions.settings import EngineSettings, load_settings
from conic_progressions.verify import SUITES, run_suites

LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--input",
        type=str,
        default=None,
        help="JSON payload: a file path, '-' for stdin, or an inline JSON object.",
    )
    common.add_argument(
        "--output",
        type=str,
        default="-",
        help="Where to write the JSON result (default: '-' for stdout).",
    )
    common.add_argument("--height", type=int, default=None, help="Height bound for point searches.")
    common.add_argument("--order", type=int, default=None, help="q-series order N (exponents -1..N).")
    common.add_argument("--sign", choices=("+", "-"), default=None, help="Fiber branch for conic points.")
    common.add_argument("--workers", type=int, default=None, help="Process workers for grid search.")
    common.add_argument("--log-level", type=str, default=None, help="Logging level (default: INFO).")

    parser = argparse.ArgumentParser(
        prog="conic-ap",
        description="Exact arithmetic progressions on conics via the curves E_k.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser(
        "find-ap",
        parents=[common],
        help="Search E_k for 3-term progressions of l-values on a conic.",
    )
    subparsers.add_parser(
        "congruent",
        parents=[common],
        help="Convert between squares in progression, points of Y^2 = X^3 - d^2 X and triangles.",
    )
    subparsers.add_parser(
        "normalize",
        parents=[common],
        help="Carry a curve with a point of order 4 to E_k.",
    )
    verify_parser = subparsers.add_parser(
        "verify",
        parents=[common],
        help="Run golden and invariant suites.",
    )
    verify_parser.add_argument(
        "--suite",
        choices=(*SUITES, "all"),
        default="all",
        help="Suite to run (default: all).",
    )
    subparsers.add_parser(
        "series",
        parents=[common],
        help="Dump the q-expansions of k, r and j.",
    )
    return parser


def _read_payload(source: str | None) -> Any:
    if source is None:
        raise InvalidInputError("This command needs --input.")
    if source.lstrip().startswith("{"):
        return json.loads(source)
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            path = Path(source)
            if not path.exists():
                raise InvalidInputError(f"Input file {path} does not exist.")
            text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidInputError(f"Input {source} is not valid UTF-8: {exc.reason}.") from exc
    except OSError as exc:
        raise InvalidInputError(f"Cannot read input {source}: {exc.strerror or exc}.") from exc
    return json.loads(text)


def _write_payload(payload: dict[str, Any], destination: str) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if destination == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(destination)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    LOGGER.info("Wrote %s", path.resolve())


def _pick(*values: Any) -> Any:
    return next(value for value in values if value is not None)


def cmd_find_ap(args: argparse.Namespace, settings: EngineSettings) -> tuple[dict[str, Any], int]:
    request = FindApRequest.model_validate(_read_payload(args.input))
    height = _pick(args.height, request.height, settings.search.height_bound)
    sign = _pick(args.sign, request.sign, settings.search.sign)
    workers = _pick(args.workers, settings.search.workers)
    seed = build_seed(request.conic.to_conic(), request.map.to_map(), request.t0)
    LOGGER.info("Searching seed t0=%s k=%s up to height %d", seed.t0, seed.k, height)
    triples = find_progressions(seed, height, sign, workers)
    disc = seed.disc
    return {
        "seed": {
            "t0": format_rational(seed.t0),
            "k": format_rational(seed.k),
            "disc": [format_rational(c) for c in (disc.c0p, disc.c1p, disc.c2p)],
            "singular": seed.is_singular,
        },
        "height": height,
        "sign": sign,
        "progressions": [triple_payload(triple) for triple in triples],
    }, 0


def cmd_congruent(args: argparse.Namespace, settings: EngineSettings) -> tuple[dict[str, Any], int]:
    request = CongruentRequest.model_validate(_read_payload(args.input))
    point: CurvePoint
    if request.triangle is not None:
        triangle = request.triangle.to_triangle()
        point = congruum_triangle_to_curve(triangle, request.delta)
        delta = request.delta if request.delta is not None else triangle.a * triangle.b / 2
    else:
        delta = request.delta
        if request.point is not None:
            point = request.point.to_point()
        elif request.roots is not None:
            point = congruum_ap_to_curve(*request.roots, delta)
        else:
            height = _pick(args.height, settings.search.height_bound)
            workers = _pick(args.workers, settings.search.workers)
            point = congruent_point_search(delta, height, workers)
    roots = congruum_curve_to_ap(point, delta)
    return {
        "delta": format_rational(delta),
        "point": point_payload(point),
        "order": congruent_curve(delta).order(point, settings.order_cap),
        "roots": [format_rational(x) for x in roots],
        "squares": [format_rational(x * x) for x in roots],
        "triangle": triangle_payload(congruum_curve_to_triangle(point, delta)),
    }, 0


def cmd_normalize(args: argparse.Namespace, settings: EngineSettings) -> tuple[dict[str, Any], int]:
    request = NormalizeRequest.model_validate(_read_payload(args.input))
    result = normalize_four_torsion(request.curve.to_curve(), request.point.to_point())
    return normalization_payload(result), 0


def cmd_verify(args: argparse.Namespace, settings: EngineSettings) -> tuple[dict[str, Any], int]:
    names = SUITES if args.suite == "all" else (args.suite,)
    order = _pick(args.order, settings.series.order)
    height = _pick(args.height, settings.search.height_bound)
    report = run_suites(names, order, height, settings.order_cap)
    return report.to_payload(), 0 if report else 1


def cmd_series(args: argparse.Namespace, settings: EngineSettings) -> tuple[dict[str, Any], int]:
    order = _pick(args.order, settings.series.order)
    if order < 1:
        raise InvalidInputError("--order must be at least 1.")
    precision = order + 2
    return {
        "order": order,
        "k": k_series(precision).to_payload(),
        "r": r_series(precision).to_payload(),
        "j": j_series(precision).to_payload(),
    }, 0


COMMANDS = {
    "find-ap": cmd_find_ap,
    "congruent": cmd_congruent,
    "normalize": cmd_normalize,
    "verify": cmd_verify,
    "series": cmd_series,
}


def _error_payload(code: str, message: str) -> dict[str, Any]:
    return {"error": {"code": code, "message": message}}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_settings()
    except RuntimeError as exc:
        _write_payload(_error_payload("invalid-settings", str(exc)), args.output)
        return 2

    level = (args.log_level or settings.log_level).upper()
    try:
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    except ValueError:
        _write_payload(_error_payload("invalid-input", f"Unknown log level {level!r}."), args.output)
        return 2

    try:
        payload, status = COMMANDS[args.command](args, settings)
    except ConicAPError as exc:
        LOGGER.info("%s failed: %s", args.command, exc)
        payload, status = {"error": exc.to_payload()}, exc.exit_status
    except ValidationError as exc:
        message = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}" for err in exc.errors()
        )
        payload, status = _error_payload("invalid-input", message), 2
    except json.JSONDecodeError as exc:
        payload, status = _error_payload("invalid-json", str(exc)), 2

    _write_payload(payload, args.output)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
