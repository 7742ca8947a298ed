"""Structured-text files for scenarios and wavepacket fixtures.

Both file kinds are flat INI documents: named sections with key=value
pairs, ``#``/``;`` comments, parsed with :mod:`configparser`.  Angles are
in degrees at this boundary (radians internally), speeds in units of c,
positions in meters.

Scenario files: one section per scenario, e.g. ::

    [tabletop-2026]
    boost_v = 0.5           ; center-frame speed, units of c, signed
    alpha_lab_deg = 0       ; receivers' angle to the boost axis, or "unknown"
    bound_over_c = 1e4      ; measured lower bound on the influence speed
    source = lab notebook   ; optional
    note = synthetic        ; optional

Fixture files: a ``[grid]`` section, a ``[branch_a]`` section, an optional
``[branch_b]``, and a ``[system]`` section, e.g. ::

    [grid]
    origin = -8 -8 -8       ; node (0,0,0) position, meters
    spacing = 0.25 0.25 0.25
    dims = 64 64 64

    [branch_a]
    center = 5 0 0          ; packet center at t = 0, meters
    width = 0.35            ; Gaussian sigma, meters
    momentum = 0 0 0        ; branch-product wavevector, rad/m (optional)
    weight = 0.64           ; branch probability mass
    velocity = 0 0 0        ; center drift, m/s (optional)

    [system]
    sign = 1                ; superposition sign, +1 or -1
    times = 0.0             ; snapshot times, seconds, strictly increasing
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, replace

from .kinematics import DomainError
from .scenarios import ExperimentScenario
from .wavepacket import (
    EntangledPacketSystem,
    GaussianBranch,
    GaussianPairSpec,
    make_gaussian_pair,
)


class FileFormatError(ValueError):
    """A scenario or fixture file is malformed; the message names the spot."""


def _parser() -> configparser.ConfigParser:
    return configparser.ConfigParser(
        interpolation=None, inline_comment_prefixes=(";", "#")
    )


def _read(text: str, source: str) -> configparser.ConfigParser:
    cp = _parser()
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise FileFormatError(str(exc)) from None
    return cp


def _get_float(section: configparser.SectionProxy, key: str, source: str) -> float:
    raw = section.get(key)
    if raw is None:
        raise FileFormatError(f"{source}: section [{section.name}] is missing '{key}'")
    try:
        return float(raw)
    except ValueError:
        raise FileFormatError(
            f"{source}: [{section.name}] {key} = {raw!r} is not a number"
        ) from None


def _get_vector(section, key: str, source: str, default=None):
    raw = section.get(key)
    if raw is None:
        if default is not None:
            return default
        raise FileFormatError(f"{source}: section [{section.name}] is missing '{key}'")
    parts = raw.split()
    if len(parts) != 3:
        raise FileFormatError(
            f"{source}: [{section.name}] {key} = {raw!r} must be three numbers"
        )
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise FileFormatError(
            f"{source}: [{section.name}] {key} = {raw!r} must be three numbers"
        ) from None


def _reject_unknown_keys(section, allowed: set[str], source: str) -> None:
    unknown = set(section.keys()) - allowed
    if unknown:
        raise FileFormatError(
            f"{source}: section [{section.name}] has unknown keys {sorted(unknown)}"
        )


# --- scenario files ---------------------------------------------------------

_SCENARIO_KEYS = {"boost_v", "alpha_lab_deg", "bound_over_c", "source", "note"}


def parse_scenarios(text: str, source: str = "<scenarios>") -> list[ExperimentScenario]:
    """Parse a scenario document; every section is one scenario."""
    cp = _read(text, source)
    if not cp.sections():
        raise FileFormatError(f"{source}: no scenario sections found")
    scenarios = []
    for name in cp.sections():
        section = cp[name]
        _reject_unknown_keys(section, _SCENARIO_KEYS, source)
        raw_alpha = section.get("alpha_lab_deg", "unknown").strip().lower()
        if raw_alpha == "unknown":
            alpha_lab = None
        else:
            alpha_deg = _get_float(section, "alpha_lab_deg", source)
            if not (0.0 <= alpha_deg <= 180.0):
                raise FileFormatError(
                    f"{source}: [{name}] alpha_lab_deg must lie in [0, 180], "
                    f"got {alpha_deg}"
                )
            alpha_lab = math.radians(alpha_deg)
        try:
            scenarios.append(
                ExperimentScenario(
                    name=name,
                    boost_v=_get_float(section, "boost_v", source),
                    alpha_lab=alpha_lab,
                    measured_lower_bound=_get_float(section, "bound_over_c", source),
                    source_ref=section.get("source", ""),
                    note=section.get("note", ""),
                )
            )
        except DomainError as exc:
            raise FileFormatError(f"{source}: [{name}]: {exc}") from None
    return scenarios


def load_scenarios(path) -> list[ExperimentScenario]:
    with open(path, "r", encoding="utf-8") as f:
        return parse_scenarios(f.read(), source=str(path))


def format_scenarios(scenarios: list[ExperimentScenario]) -> str:
    """Serialize scenarios back into the documented text format."""
    lines = []
    for s in scenarios:
        lines.append(f"[{s.name}]")
        lines.append(f"boost_v = {s.boost_v!r}")
        if s.alpha_lab is None:
            lines.append("alpha_lab_deg = unknown")
        else:
            lines.append(f"alpha_lab_deg = {math.degrees(s.alpha_lab)!r}")
        lines.append(f"bound_over_c = {s.measured_lower_bound!r}")
        if s.source_ref:
            lines.append(f"source = {s.source_ref}")
        if s.note:
            lines.append(f"note = {s.note}")
        lines.append("")
    return "\n".join(lines)


# --- fixture files ----------------------------------------------------------

_GRID_KEYS = {"origin", "spacing", "dims"}
_BRANCH_KEYS = {"center", "width", "momentum", "weight", "velocity"}
_SYSTEM_KEYS = {"sign", "times"}


@dataclass(frozen=True)
class FixtureSpec:
    """A Gaussian fixture plus its snapshot schedule.

    Branch centers in ``base`` are positions at t = 0; snapshot ``times``
    advect each branch by its ``velocity`` (m/s).
    """

    base: GaussianPairSpec
    velocity_a: tuple[float, float, float]
    velocity_b: tuple[float, float, float] | None
    times: tuple[float, ...]


def _parse_branch(section, source: str) -> tuple[GaussianBranch, tuple]:
    _reject_unknown_keys(section, _BRANCH_KEYS, source)
    branch = GaussianBranch(
        center=_get_vector(section, "center", source),
        width=_get_float(section, "width", source),
        momentum=_get_vector(section, "momentum", source, default=(0.0, 0.0, 0.0)),
        weight=_get_float(section, "weight", source),
    )
    velocity = _get_vector(section, "velocity", source, default=(0.0, 0.0, 0.0))
    return branch, velocity


def parse_fixture(text: str, source: str = "<fixture>") -> FixtureSpec:
    """Parse a fixture document into a spec plus snapshot schedule."""
    cp = _read(text, source)
    known = {"grid", "branch_a", "branch_b", "system"}
    unknown = set(cp.sections()) - known
    if unknown:
        raise FileFormatError(f"{source}: unknown sections {sorted(unknown)}")
    for required in ("grid", "branch_a", "system"):
        if required not in cp:
            raise FileFormatError(f"{source}: missing required section [{required}]")

    grid = cp["grid"]
    _reject_unknown_keys(grid, _GRID_KEYS, source)
    dims_raw = _get_vector(grid, "dims", source)
    if any(d != int(d) or d < 2 for d in dims_raw):
        raise FileFormatError(
            f"{source}: [grid] dims must be three integers >= 2, got {dims_raw}"
        )

    branch_a, velocity_a = _parse_branch(cp["branch_a"], source)
    branch_b, velocity_b = (None, None)
    if "branch_b" in cp:
        branch_b, velocity_b = _parse_branch(cp["branch_b"], source)

    system = cp["system"]
    _reject_unknown_keys(system, _SYSTEM_KEYS, source)
    sign_raw = _get_float(system, "sign", source)
    if sign_raw not in (1.0, -1.0):
        raise FileFormatError(f"{source}: [system] sign must be +1 or -1, got {sign_raw}")
    times_raw = system.get("times", "0.0").split()
    try:
        times = tuple(float(t) for t in times_raw)
    except ValueError:
        raise FileFormatError(
            f"{source}: [system] times must be numbers, got {system.get('times')!r}"
        ) from None
    if not times:
        raise FileFormatError(f"{source}: [system] times must list at least one time")
    if any(b <= a for a, b in zip(times, times[1:])):
        raise FileFormatError(f"{source}: [system] times must be strictly increasing")

    try:
        base = GaussianPairSpec(
            origin=_get_vector(grid, "origin", source),
            spacing=_get_vector(grid, "spacing", source),
            dims=tuple(int(d) for d in dims_raw),
            branch_a=branch_a,
            branch_b=branch_b,
            sign=int(sign_raw),
            time=times[0],
        )
    except DomainError as exc:
        raise FileFormatError(f"{source}: {exc}") from None
    return FixtureSpec(
        base=base, velocity_a=velocity_a, velocity_b=velocity_b, times=times
    )


def load_fixture(path) -> FixtureSpec:
    with open(path, "r", encoding="utf-8") as f:
        return parse_fixture(f.read(), source=str(path))


def format_fixture(fixture: FixtureSpec) -> str:
    """Serialize a fixture spec back into the documented text format."""
    base = fixture.base

    def vec(t) -> str:
        return " ".join(repr(float(x)) for x in t)

    lines = [
        "[grid]",
        f"origin = {vec(base.origin)}",
        f"spacing = {vec(base.spacing)}",
        "dims = " + " ".join(str(int(d)) for d in base.dims),
        "",
    ]
    branches = [("branch_a", base.branch_a, fixture.velocity_a)]
    if base.branch_b is not None:
        branches.append(("branch_b", base.branch_b, fixture.velocity_b))
    for name, branch, velocity in branches:
        lines += [
            f"[{name}]",
            f"center = {vec(branch.center)}",
            f"width = {branch.width!r}",
            f"momentum = {vec(branch.momentum)}",
            f"weight = {branch.weight!r}",
            f"velocity = {vec(velocity)}",
            "",
        ]
    lines += [
        "[system]",
        f"sign = {base.sign}",
        "times = " + " ".join(repr(float(t)) for t in fixture.times),
        "",
    ]
    return "\n".join(lines)


def build_snapshots(fixture: FixtureSpec) -> list[EntangledPacketSystem]:
    """Materialize one system per snapshot time, advecting branch centers."""

    def moved(branch: GaussianBranch, velocity, t: float) -> GaussianBranch:
        center = tuple(c + w * t for c, w in zip(branch.center, velocity))
        return replace(branch, center=center)

    systems = []
    for t in fixture.times:
        base = fixture.base
        spec = replace(
            base,
            branch_a=moved(base.branch_a, fixture.velocity_a, t),
            branch_b=(
                moved(base.branch_b, fixture.velocity_b, t)
                if base.branch_b is not None
                else None
            ),
            time=t,
        )
        systems.append(make_gaussian_pair(spec))
    return systems
