"""Command-line surface: compose, sweep, center, scenario.

Angles cross this boundary in degrees (radians internally) and speeds in
units of c, except packet positions/velocities which are SI.  Output is
machine-readable JSON or CSV with fixed 12-significant-digit float
formatting and fixed ordering, so identical inputs produce byte-identical
output.  Infinite speeds are rendered as the literal string ``inf`` so
downstream tools can tell exact simultaneity from large finite values.

Exit codes: 0 success (for ``scenario``: nothing incompatible), 1 at least
one incompatible scenario verdict, 2 domain or input errors.

The environment variable ``REDUCTION_FRAMES_THREADS`` caps the internal
fan-out used by ``sweep`` and ``scenario`` (default 1); results are
assembled in input order regardless, so the output does not depend on it.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, Iterable, Sequence

import numpy as np

from .fileformat import FileFormatError, build_snapshots, load_fixture, load_scenarios
from .kinematics import (
    DomainError,
    InfluenceVector,
    classify_special_case,
    compose,
    compose_inverse,
    lab_influence,
    center_influence,
)
from .scenarios import (
    CompatibilityVerdict,
    VerdictStatus,
    check_compatibility,
    builtin_scenarios,
    predict_curve,
)
from .wavepacket import (
    SPEED_OF_LIGHT_M_PER_S,
    DegenerateSystemError,
    center_frame_velocity,
    center_position,
)

THREADS_ENV_VAR = "REDUCTION_FRAMES_THREADS"


def worker_limit() -> int:
    """Fan-out cap from REDUCTION_FRAMES_THREADS (default 1)."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise DomainError(
            f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}"
        )
    return value


def _fan_out(fn: Callable, items: Sequence) -> list:
    """Apply ``fn`` over ``items``, preserving order, honoring the cap."""
    limit = worker_limit()
    if limit == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=limit) as pool:
        return list(pool.map(fn, items))


# --- deterministic rendering -------------------------------------------------


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def json_number(x: float):
    """12-significant-digit float for JSON; infinity becomes "inf"."""
    if math.isinf(x):
        return "inf"
    return _round12(x)


def format_speed(x: float) -> str:
    """Speed column text: "inf" or a decimal with 12 significant digits."""
    if math.isinf(x):
        return "inf"
    return repr(_round12(x))


def format_angle_deg(x: float) -> str:
    return f"{x:.12g}"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _parse_speed(text: str) -> float:
    if text.strip().lower() in ("inf", "infinite", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"u_c must be a number or 'inf', got {text!r}") from None


def _degrees_to_radians(deg: float, name: str) -> float:
    if not (0.0 <= deg <= 180.0):
        raise DomainError(f"{name} must lie in [0, 180] degrees, got {deg!r}")
    rad = math.radians(deg)
    return min(rad, math.pi)


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)


# --- subcommands -------------------------------------------------------------


def _run_compose(args) -> tuple[int, str]:
    u = _parse_speed(args.uc)
    alpha = _degrees_to_radians(args.alpha_c, "--alpha-c")
    if args.inverse:
        result = compose_inverse(lab_influence(u, alpha), args.v)
        case = classify_special_case(result.angle, args.v, result.speed)
        record = {
            "u_center": json_number(result.speed),
            "alpha_center_deg": json_number(math.degrees(result.angle)),
            "case": case.value,
        }
    else:
        result = compose(center_influence(u, alpha), args.v)
        case = classify_special_case(alpha, args.v, u)
        record = {
            "u_lab": json_number(result.speed),
            "alpha_lab_deg": json_number(math.degrees(result.angle)),
            "case": case.value,
        }
    if args.format == "csv":
        header = ",".join(record.keys())
        cells = []
        for key in record:
            if key.startswith("u_"):
                cells.append(format_speed(result.speed))
            elif key == "case":
                cells.append(case.value)
            else:
                cells.append(format_angle_deg(math.degrees(result.angle)))
        return 0, header + "\n" + ",".join(cells) + "\n"
    return 0, _dump_json(record)


def _run_sweep(args) -> tuple[int, str]:
    if args.alpha_count < 1:
        raise DomainError(f"--alpha-count must be >= 1, got {args.alpha_count}")
    if not (0.0 <= args.alpha_start <= args.alpha_stop <= 180.0):
        raise DomainError(
            "--alpha-start/--alpha-stop must satisfy 0 <= start <= stop <= 180, "
            f"got {args.alpha_start}..{args.alpha_stop}"
        )
    if args.alpha_count > 1 and args.alpha_start == args.alpha_stop:
        raise DomainError("--alpha-count > 1 needs a nonempty angle range")
    degrees = np.linspace(args.alpha_start, args.alpha_stop, args.alpha_count)
    grid = [_degrees_to_radians(float(d), "--alpha-start/stop") for d in degrees]
    curve = predict_curve(args.v, grid)

    def render(sample) -> dict:
        return {
            "alpha_c_deg": math.degrees(sample.alpha_c),
            "alpha_lab_deg": math.degrees(sample.alpha_lab),
            "u_lab_over_c": sample.u_lab,
        }

    rows = _fan_out(render, curve.samples)
    if args.format == "json":
        payload = {
            "boost_v": json_number(args.v),
            "samples": [
                {
                    "alpha_c_deg": json_number(r["alpha_c_deg"]),
                    "alpha_lab_deg": json_number(r["alpha_lab_deg"]),
                    "u_lab_over_c": json_number(r["u_lab_over_c"]),
                }
                for r in rows
            ],
        }
        return 0, _dump_json(payload)
    lines = ["alpha_c_deg,alpha_lab_deg,u_lab_over_c"]
    for r in rows:
        lines.append(
            f"{format_angle_deg(r['alpha_c_deg'])},"
            f"{format_angle_deg(r['alpha_lab_deg'])},"
            f"{format_speed(r['u_lab_over_c'])}"
        )
    return 0, "\n".join(lines) + "\n"


def _run_center(args) -> tuple[int, str]:
    fixture = load_fixture(args.fixture)
    if args.times is not None:
        try:
            times = tuple(float(t) for t in args.times.replace(",", " ").split())
        except ValueError:
            raise DomainError(f"--times must be numbers, got {args.times!r}") from None
        if not times:
            raise DomainError("--times must list at least one time")
        fixture = replace(fixture, times=times)
    systems = build_snapshots(fixture)
    estimates = [center_position(s) for s in systems]
    record = {
        "snapshots": [
            {
                "time_s": json_number(e.time),
                "r_c_m": [json_number(x) for x in e.r_c],
                "norm": json_number(e.norm),
            }
            for e in estimates
        ]
    }
    if len(systems) >= 2:
        velocity = center_frame_velocity(systems)
        speed = float(np.linalg.norm(velocity))
        record["velocity_mps"] = [json_number(x) for x in velocity]
        record["v_over_c"] = json_number(speed / SPEED_OF_LIGHT_M_PER_S)
    else:
        record["velocity_mps"] = None
        record["v_over_c"] = None
    if args.format == "csv":
        lines = ["time_s,rc_x_m,rc_y_m,rc_z_m,norm"]
        for e in estimates:
            cells = [format_angle_deg(e.time)] + [
                format_angle_deg(x) for x in e.r_c
            ] + [format_angle_deg(e.norm)]
            lines.append(",".join(cells))
        return 0, "\n".join(lines) + "\n"
    return 0, _dump_json(record)


def _verdict_record(verdict: CompatibilityVerdict) -> dict:
    return {
        "scenario": verdict.scenario,
        "predicted_u_lab_over_c": (
            None if verdict.predicted_u_lab is None else json_number(verdict.predicted_u_lab)
        ),
        "bound_over_c": json_number(verdict.bound),
        "status": verdict.status.value,
        "compatible": (
            None if verdict.status is VerdictStatus.INCONCLUSIVE else verdict.compatible
        ),
        "case": None if verdict.case is None else verdict.case.value,
        "note": verdict.note,
    }


def _run_scenario(args) -> tuple[int, str]:
    if args.builtin:
        scenarios = builtin_scenarios(default_boost_v=args.boost_v)
    else:
        scenarios = load_scenarios(args.file)
    verdicts = _fan_out(check_compatibility, scenarios)
    if args.format == "csv":
        lines = ["scenario,predicted_u_lab_over_c,bound_over_c,status,case"]
        for v in verdicts:
            predicted = "" if v.predicted_u_lab is None else format_speed(v.predicted_u_lab)
            case = "" if v.case is None else v.case.value
            lines.append(
                f"{v.scenario},{predicted},{format_speed(v.bound)},"
                f"{v.status.value},{case}"
            )
        text = "\n".join(lines) + "\n"
    else:
        text = _dump_json([_verdict_record(v) for v in verdicts])
    any_incompatible = any(
        v.status is VerdictStatus.INCOMPATIBLE for v in verdicts
    )
    return (1 if any_incompatible else 0), text


# --- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reduction-frames",
        description=(
            "Frame transformations for hypothetical influence velocities, "
            "wavepacket center estimation, and experiment compatibility checks."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    compose_p = sub.add_parser(
        "compose", help="transform one influence between center and lab frames"
    )
    compose_p.add_argument("--uc", required=True, help="speed in units of c, or 'inf'")
    compose_p.add_argument(
        "--alpha-c", type=float, required=True, help="angle to the boost axis, degrees"
    )
    compose_p.add_argument(
        "--v", type=float, required=True, help="signed boost speed, units of c"
    )
    compose_p.add_argument(
        "--inverse",
        action="store_true",
        help="treat the input as lab-frame and transform into the center frame",
    )
    compose_p.add_argument("--format", choices=("json", "csv"), default="json")
    compose_p.add_argument("--output", default=None, help="write here instead of stdout")

    sweep_p = sub.add_parser(
        "sweep", help="predicted lab speed/angle over a grid of center angles"
    )
    sweep_p.add_argument("--v", type=float, required=True)
    sweep_p.add_argument("--alpha-start", type=float, default=0.0)
    sweep_p.add_argument("--alpha-stop", type=float, default=180.0)
    sweep_p.add_argument("--alpha-count", type=int, default=181)
    sweep_p.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep_p.add_argument("--output", default=None)

    center_p = sub.add_parser(
        "center", help="center position (and velocity) of a fixture's snapshots"
    )
    center_p.add_argument("fixture", help="fixture file path")
    center_p.add_argument(
        "--times", default=None, help="override snapshot times, e.g. '0,0.01,0.02'"
    )
    center_p.add_argument("--format", choices=("json", "csv"), default="json")
    center_p.add_argument("--output", default=None)

    scenario_p = sub.add_parser(
        "scenario", help="compatibility verdicts for experiment scenarios"
    )
    source = scenario_p.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--builtin", action="store_true", help="use the built-in experiment presets"
    )
    source.add_argument("file", nargs="?", default=None, help="scenario file path")
    scenario_p.add_argument(
        "--boost-v",
        type=float,
        default=0.0,
        help="boost speed for presets that do not state one (builtin only)",
    )
    scenario_p.add_argument("--format", choices=("json", "csv"), default="json")
    scenario_p.add_argument("--output", default=None)

    return parser


_RUNNERS = {
    "compose": _run_compose,
    "sweep": _run_sweep,
    "center": _run_center,
    "scenario": _run_scenario,
}


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv if argv is None else list(argv))
    try:
        code, text = _RUNNERS[args.subcommand](args)
    except (DomainError, DegenerateSystemError, FileFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_output(text, args.output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
