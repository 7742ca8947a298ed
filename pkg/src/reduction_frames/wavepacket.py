"""Entangled two-packet systems on regular grids: density, mean position,
and the velocity of the frame the mean position defines.

A system holds four complex amplitude grids psi1_a, psi2_a, psi1_b, psi2_b
(two particles, two superposed branches) plus a relative sign.  The spatial
probability density is

    rho(r) = 1/2 |psi1(r,a) psi2(r,a) + sign * psi1(r,b) psi2(r,b)|^2

and the system's center is the mean position of rho, evaluated by the
midpoint rule on the grid.  Grid values are frozen after construction;
density and quadrature are pure and deterministic (fixed summation order),
so evaluations can run concurrently without shared state.

Positions are in meters and times in seconds; unit-of-c conversions belong
to callers (see :data:`SPEED_OF_LIGHT_M_PER_S`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .kinematics import DomainError

SPEED_OF_LIGHT_M_PER_S = 299_792_458.0

#: Quadrature validity gate: largest |amplitude| on the outer grid shell,
#: relative to the overall largest, must not exceed this.
BOUNDARY_TOL = 1e-6

#: Density integrals at or below this are treated as degenerate.
NORM_FLOOR = 1e-300


class DegenerateSystemError(ValueError):
    """The density integrates to (numerically) nothing; no mean exists."""


def _as_readonly(a: np.ndarray) -> np.ndarray:
    view = a.view()
    view.setflags(write=False)
    return view


@dataclass(frozen=True)
class AmplitudeGrid:
    """Complex amplitudes sampled at the nodes of a regular 3-D grid.

    ``origin`` is the position of node (0,0,0); node (i,j,k) sits at
    ``origin + (i,j,k) * spacing``.  Nodes are cell centers for the midpoint
    rule.  Grids need at least 2 nodes per axis and strictly positive
    spacing; values are frozen after construction.
    """

    origin: np.ndarray
    spacing: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        origin = np.asarray(self.origin, dtype=float).reshape(3)
        spacing = np.asarray(self.spacing, dtype=float).reshape(3)
        values = np.asarray(self.values, dtype=complex)
        if values.ndim != 3:
            raise DomainError(f"values must be a 3-D array, got ndim={values.ndim}")
        if any(n < 2 for n in values.shape):
            raise DomainError(f"dims must be >= 2 per axis, got {values.shape}")
        if not np.all(spacing > 0.0):
            raise DomainError(f"spacing must be > 0 per axis, got {spacing}")
        if not np.all(np.isfinite(origin)):
            raise DomainError(f"origin must be finite, got {origin}")
        if not np.all(np.isfinite(values)):
            raise DomainError("values must be finite")
        object.__setattr__(self, "origin", _as_readonly(origin))
        object.__setattr__(self, "spacing", _as_readonly(spacing))
        object.__setattr__(self, "values", _as_readonly(values))

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.values.shape

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    def axis_coords(self, axis: int) -> np.ndarray:
        """Node coordinates along one axis."""
        n = self.dims[axis]
        return self.origin[axis] + self.spacing[axis] * np.arange(n)

    def congruent(self, other: "AmplitudeGrid") -> bool:
        """True when both grids share origin, spacing and dims exactly."""
        return (
            self.dims == other.dims
            and np.array_equal(self.origin, other.origin)
            and np.array_equal(self.spacing, other.spacing)
        )

    def boundary_ratio(self) -> float:
        """Largest |value| on the outer shell over the overall largest.

        Returns 0.0 for an all-zero grid.
        """
        mag = np.abs(self.values)
        peak = float(mag.max())
        if peak == 0.0:
            return 0.0
        shell = max(
            float(mag[0, :, :].max()),
            float(mag[-1, :, :].max()),
            float(mag[:, 0, :].max()),
            float(mag[:, -1, :].max()),
            float(mag[:, :, 0].max()),
            float(mag[:, :, -1].max()),
        )
        return shell / peak


@dataclass(frozen=True)
class EntangledPacketSystem:
    """Four congruent amplitude grids plus the superposition sign.

    ``sign`` is exactly +1 or -1; ``time`` is the snapshot time in seconds.
    """

    psi1_a: AmplitudeGrid
    psi2_a: AmplitudeGrid
    psi1_b: AmplitudeGrid
    psi2_b: AmplitudeGrid
    sign: int
    time: float = 0.0

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")
        for name in ("psi2_a", "psi1_b", "psi2_b"):
            if not self.psi1_a.congruent(getattr(self, name)):
                raise DomainError(
                    f"{name} grid is not congruent with psi1_a "
                    "(origin, spacing and dims must match)"
                )

    @property
    def grid(self) -> AmplitudeGrid:
        """Reference grid carrying the shared geometry."""
        return self.psi1_a

    def amplitude_grids(self) -> tuple[tuple[str, AmplitudeGrid], ...]:
        return (
            ("psi1_a", self.psi1_a),
            ("psi2_a", self.psi2_a),
            ("psi1_b", self.psi1_b),
            ("psi2_b", self.psi2_b),
        )


@dataclass(frozen=True)
class CenterEstimate:
    """Mean position of the density, plus the raw density integral."""

    r_c: np.ndarray
    norm: float
    time: float

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "r_c", _as_readonly(np.asarray(self.r_c, dtype=float).reshape(3))
        )


def density_field(system: EntangledPacketSystem) -> np.ndarray:
    """Density rho at every node, as a real array of the grid's shape."""
    amp = (
        system.psi1_a.values * system.psi2_a.values
        + system.sign * system.psi1_b.values * system.psi2_b.values
    )
    return 0.5 * (amp.real**2 + amp.imag**2)


def density(system: EntangledPacketSystem, index: tuple[int, int, int]) -> float:
    """Density rho at one node.

    ``index`` is an (i, j, k) triple of nonnegative node indices; out-of-range
    indices raise :class:`DomainError`.
    """
    i, j, k = index
    dims = system.grid.dims
    if not (0 <= i < dims[0] and 0 <= j < dims[1] and 0 <= k < dims[2]):
        raise DomainError(f"node index {index!r} out of range for dims {dims}")
    amp = system.psi1_a.values[i, j, k] * system.psi2_a.values[i, j, k] + (
        system.sign * system.psi1_b.values[i, j, k] * system.psi2_b.values[i, j, k]
    )
    return 0.5 * abs(amp) ** 2


def _check_boundary_decay(system: EntangledPacketSystem, boundary_tol: float) -> None:
    for name, grid in system.amplitude_grids():
        ratio = grid.boundary_ratio()
        if ratio > boundary_tol:
            raise DomainError(
                f"boundary decay invariant violated on {name}: outer-shell "
                f"|amplitude| is {ratio:.3e} of the peak (tolerance {boundary_tol:g}); "
                "the grid does not contain the packets"
            )


def center_position(
    system: EntangledPacketSystem,
    normalize: bool = True,
    *,
    boundary_tol: float = BOUNDARY_TOL,
    norm_floor: float = NORM_FLOOR,
) -> CenterEstimate:
    """Mean position of the system's density by midpoint-rule quadrature.

    With ``normalize`` set (the default) the first moment is divided by the
    density integral, making the result a true mean; without it the raw
    moment integral is returned.  The density integral is reported either
    way as ``norm``.

    Raises :class:`DomainError` when any amplitude grid fails the boundary
    decay check, and :class:`DegenerateSystemError` when the density
    integral does not exceed ``norm_floor``.
    """
    _check_boundary_decay(system, boundary_tol)
    rho = density_field(system)
    grid = system.grid
    dv = grid.cell_volume

    norm = float(rho.sum()) * dv
    if not (norm > norm_floor):
        raise DegenerateSystemError(
            f"density integral {norm:.3e} is at or below the floor {norm_floor:.3e}"
        )

    moment = np.empty(3)
    # Project the density onto each axis, then take the 1-D moment; this is
    # the full 3-D midpoint sum with a fixed (axis-lexicographic) order.
    axis_pairs = ((1, 2), (0, 2), (0, 1))
    for axis in range(3):
        line = rho.sum(axis=axis_pairs[axis])
        moment[axis] = float(np.dot(grid.axis_coords(axis), line)) * dv

    r_c = moment / norm if normalize else moment
    return CenterEstimate(r_c=r_c, norm=norm, time=system.time)


def center_frame_velocity(
    snapshots: Sequence[EntangledPacketSystem],
    *,
    normalize: bool = True,
    boundary_tol: float = BOUNDARY_TOL,
    norm_floor: float = NORM_FLOOR,
) -> np.ndarray:
    """Velocity of the center frame from a time series of snapshots (m/s).

    Fits a least-squares line to the center position over the snapshot
    times and returns its slope; with exactly two snapshots this is the
    difference quotient.  Requires at least two snapshots with strictly
    increasing times and identical grid geometry.
    """
    if len(snapshots) < 2:
        raise DomainError(
            f"need at least 2 snapshots to fit a velocity, got {len(snapshots)}"
        )
    times = np.array([s.time for s in snapshots], dtype=float)
    if not np.all(np.diff(times) > 0.0):
        raise DomainError(f"snapshot times must be strictly increasing, got {times}")
    first = snapshots[0].grid
    for s in snapshots[1:]:
        if not first.congruent(s.grid):
            raise DomainError("snapshots must share one grid geometry")

    centers = np.stack(
        [
            center_position(
                s, normalize, boundary_tol=boundary_tol, norm_floor=norm_floor
            ).r_c
            for s in snapshots
        ]
    )
    slope = np.polyfit(times, centers, 1)[0]
    return slope


@dataclass(frozen=True)
class GaussianBranch:
    """One branch of the superposition, both packets sharing an envelope.

    ``center`` (m) and ``momentum`` (rad/m, applied to the branch product)
    are 3-vectors; ``width`` is the Gaussian sigma in meters.  ``weight`` is
    the branch probability mass: the branch product is scaled so its squared
    norm is 2 * weight, which makes the total density of a two-branch system
    with weights summing to 1 integrate to 1.
    """

    center: tuple[float, float, float]
    width: float
    momentum: tuple[float, float, float] = (0.0, 0.0, 0.0)
    weight: float = 0.5

    def __post_init__(self) -> None:
        if not (self.width > 0.0):
            raise DomainError(f"width must be > 0, got {self.width!r}")
        if not (self.weight >= 0.0):
            raise DomainError(f"weight must be >= 0, got {self.weight!r}")


@dataclass(frozen=True)
class GaussianPairSpec:
    """Deterministic Gaussian fixture: grid geometry plus one or two branches.

    With ``branch_b`` omitted the b-branch grids are zero and the density is
    a single Gaussian product.
    """

    origin: tuple[float, float, float]
    spacing: tuple[float, float, float]
    dims: tuple[int, int, int]
    branch_a: GaussianBranch
    branch_b: GaussianBranch | None = None
    sign: int = 1
    time: float = 0.0


def _branch_amplitude(
    axes: tuple[np.ndarray, np.ndarray, np.ndarray], branch: GaussianBranch
) -> np.ndarray:
    x, y, z = axes
    cx, cy, cz = branch.center
    kx, ky, kz = branch.momentum
    r2 = (
        (x - cx)[:, None, None] ** 2
        + (y - cy)[None, :, None] ** 2
        + (z - cz)[None, None, :] ** 2
    )
    phase = 0.5 * (
        kx * x[:, None, None] + ky * y[None, :, None] + kz * z[None, None, :]
    )
    # Product normalization: |psi|^4 integrates to 2*weight when each factor
    # carries the fourth root of 2*weight / (pi^(3/2) sigma^3).
    sigma = branch.width
    scale = (2.0 * branch.weight / (math.pi**1.5 * sigma**3)) ** 0.25
    return scale * np.exp(-r2 / (4.0 * sigma**2) + 1j * phase)


def make_gaussian_pair(
    spec: GaussianPairSpec, *, boundary_tol: float = BOUNDARY_TOL
) -> EntangledPacketSystem:
    """Fill the four grids with Gaussian amplitudes per the fixture spec.

    Deterministic.  Raises :class:`DomainError` when the grid is too small
    for the requested widths (the boundary decay invariant would fail).
    """
    origin = np.asarray(spec.origin, dtype=float)
    spacing = np.asarray(spec.spacing, dtype=float)
    dims = tuple(int(n) for n in spec.dims)
    axes = tuple(origin[a] + spacing[a] * np.arange(dims[a]) for a in range(3))

    def grid_of(values: np.ndarray) -> AmplitudeGrid:
        return AmplitudeGrid(origin=origin, spacing=spacing, values=values)

    psi_a = _branch_amplitude(axes, spec.branch_a)
    if spec.branch_b is not None:
        psi_b = _branch_amplitude(axes, spec.branch_b)
    else:
        psi_b = np.zeros(dims, dtype=complex)

    system = EntangledPacketSystem(
        psi1_a=grid_of(psi_a),
        psi2_a=grid_of(psi_a),
        psi1_b=grid_of(psi_b),
        psi2_b=grid_of(psi_b),
        sign=spec.sign,
        time=spec.time,
    )
    try:
        _check_boundary_decay(system, boundary_tol)
    except DomainError as exc:
        raise DomainError(
            f"grid too small for the requested packet widths: {exc}"
        ) from None
    return system
