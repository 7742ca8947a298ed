"""Influence-velocity transformations between center frame and lab frame.

An entangled two-packet system defines a "center frame" whose origin is the
mean position of the system.  If the two reduction effects are connected by a
hypothetical influence velocity in that frame, the same influence has a
different speed and direction in the lab frame.  This module transforms
(speed, angle) pairs between the two frames, including the strict-simultaneity
case of infinite center-frame speed.

Conventions
-----------
* Speeds are dimensionless multiples of the speed of light (c = 1
  internally).  ``math.inf`` is a first-class value meaning strict
  simultaneity, not a large sentinel.
* The boost velocity ``v`` between the frames is a *signed* scalar along a
  fixed axis; every inverse transform is the forward transform with ``-v``.
* Angles are measured from the positive axis direction and lie in
  ``[0, pi]`` radians (the geometry is planar, so the half-plane suffices).

All functions are pure and all value types immutable; everything here is safe
to call concurrently without shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

#: Infinite speed: the influence connects simultaneous events in its frame.
INFINITE = math.inf

#: Tolerance for the exact-zero tests used by special-case detection
#: (applied to |v|, 1 - |v|, alpha and cos(alpha)).
CASE_TOLERANCE = 1e-12


class DomainError(ValueError):
    """An argument violates a precondition; the message names the field."""


class Frame(Enum):
    """Which frame a (speed, angle) pair is expressed in."""

    CENTER = "center"
    LAB = "lab"


class SpecialCase(Enum):
    """Taxonomy of degenerate boost/influence configurations.

    DE_BROGLIE_WAVE
        Infinite center-frame speed along the boost axis; the lab sees a
        wave of simultaneity moving at c^2/v.
    LIGHTLIKE_BOOST
        |v| = c; the lab-frame speed degenerates to c.
    ZERO_BOOST
        v = 0; the frames agree and simultaneity is preserved.
    TRANSVERSE_SIMULTANEITY
        Infinite center-frame speed perpendicular to the boost; the
        influence stays simultaneous (infinite) in the lab frame too.
    GENERIC
        None of the above.
    """

    DE_BROGLIE_WAVE = "DE_BROGLIE_WAVE"
    LIGHTLIKE_BOOST = "LIGHTLIKE_BOOST"
    ZERO_BOOST = "ZERO_BOOST"
    TRANSVERSE_SIMULTANEITY = "TRANSVERSE_SIMULTANEITY"
    GENERIC = "GENERIC"


def _check_speed(value: float, name: str) -> None:
    # `not (value >= 0)` also rejects NaN.
    if not isinstance(value, (int, float)) or not (value >= 0.0):
        raise DomainError(f"{name} must be a speed >= 0 in units of c, got {value!r}")


def _check_angle(value: float, name: str) -> None:
    if not isinstance(value, (int, float)) or not (0.0 <= value <= math.pi):
        raise DomainError(f"{name} must lie in [0, pi] radians, got {value!r}")


def _check_boost(v: float, name: str = "boost.v") -> None:
    if not isinstance(v, (int, float)) or not (abs(v) <= 1.0):
        raise DomainError(f"{name} must satisfy |v| <= 1 in units of c, got {v!r}")
    if abs(v) == 1.0:
        raise DomainError(
            f"{name} = {v!r}: lightlike boosts (v = +-c) are outside the "
            "domain of the composition formulas (v != c)"
        )


@dataclass(frozen=True)
class InfluenceVector:
    """A hypothetical influence: speed, angle to the boost axis, frame tag.

    ``speed`` is in units of c and may be ``math.inf``; ``angle`` is in
    radians within ``[0, pi]``.
    """

    speed: float
    angle: float
    frame: Frame

    def __post_init__(self) -> None:
        _check_speed(self.speed, "speed")
        _check_angle(self.angle, "angle")
        if not isinstance(self.frame, Frame):
            raise DomainError(f"frame must be a Frame member, got {self.frame!r}")

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.speed)


def center_influence(speed: float, angle: float) -> InfluenceVector:
    """Shorthand for an influence expressed in the center frame."""
    return InfluenceVector(speed, angle, Frame.CENTER)


def lab_influence(speed: float, angle: float) -> InfluenceVector:
    """Shorthand for an influence expressed in the lab frame."""
    return InfluenceVector(speed, angle, Frame.LAB)


def compose_finite_values(u, alpha, v):
    """Vectorized frame transform for finite source-frame speeds.

    Returns the pair of arrays ``(speed, angle)`` in the target frame.
    Broadcasts over numpy arrays and does not validate its inputs; use
    :func:`compose_finite` for the checked scalar form.

    The squared target speed is

        (u^2 + v^2 + 2 u v cos(alpha) - (u v sin(alpha))^2)
        / (1 + u v cos(alpha))^2

    and the angle is recovered with a two-argument arctangent of the actual
    velocity components, so the quadrant stays correct when the denominator
    ``1 + u v cos(alpha)`` is negative (possible only for superluminal u).
    A vanishing denominator means the influence is simultaneous in the
    target frame: the speed is infinite and the angle is that of the
    spatial displacement between the two simultaneous events.
    """
    u = np.asarray(u, dtype=float)
    alpha = np.asarray(alpha, dtype=float)
    v = np.asarray(v, dtype=float)

    cos_a = np.cos(alpha)
    sin_a = np.sin(alpha)
    axial = u * cos_a + v
    transverse = u * sin_a * np.sqrt(1.0 - v * v)
    denom = 1.0 + u * v * cos_a

    # The printed numerator equals axial^2 + transverse^2, a sum of squares:
    # nonnegative for |v| <= 1 by construction, asserted rather than clamped.
    radicand = axial * axial + transverse * transverse
    assert np.all(radicand >= 0.0)

    with np.errstate(divide="ignore"):
        speed = np.where(denom == 0.0, np.inf, np.sqrt(radicand) / np.abs(denom))
    # Velocity components carry 1/denom; when denom < 0 the axial component
    # flips sign relative to `axial`.  At denom == 0 the directional limit
    # keeps the raw displacement direction.
    angle = np.arctan2(transverse, np.where(denom < 0.0, -axial, axial))
    return speed, angle


def compose_infinite_values(alpha, v):
    """Vectorized frame transform for infinite source-frame speed.

    Returns ``(speed, angle)`` in the target frame, broadcasting over numpy
    arrays; inputs are not validated (see :func:`compose_infinite`).

    This is the limit of :func:`compose_finite_values` as the source speed
    grows without bound:

        speed^2 = (1 - (v sin(alpha))^2) / (v cos(alpha))^2
        tan(angle) = tan(alpha) * sqrt(1 - v^2)

    with the angle quadrant fixed by the limiting velocity direction.  Two
    branches stay exactly infinite: v = 0 (the frames agree, angle is
    preserved) and cos(alpha) = 0 within :data:`CASE_TOLERANCE` (transverse
    simultaneity, angle is exactly pi/2).
    """
    alpha = np.asarray(alpha, dtype=float)
    v = np.asarray(v, dtype=float)

    cos_a = np.cos(alpha)
    sin_a = np.sin(alpha)
    zero_boost = v == 0.0
    transverse = np.abs(cos_a) <= CASE_TOLERANCE

    # Subnormal v*cos(alpha) can overflow the quotient; the saturated inf is
    # the closest representable answer.
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        speed = np.sqrt(1.0 - (v * sin_a) ** 2) / np.abs(v * cos_a)
    speed = np.where(zero_boost | transverse, np.inf, speed)

    # Limiting velocity direction: axial component cos(alpha)/(v cos(alpha)),
    # i.e. |cos(alpha)| with the sign of v.
    axis = np.where(v < 0.0, -np.abs(cos_a), np.abs(cos_a))
    general = np.arctan2(sin_a * np.sqrt(1.0 - v * v), axis)
    angle = np.where(zero_boost, alpha, np.where(transverse, math.pi / 2.0, general))
    return speed, angle


def compose_finite(u: InfluenceVector, v: float) -> InfluenceVector:
    """Transform a finite-speed center-frame influence into the lab frame.

    Raises :class:`DomainError` for infinite input speed, a frame tag other
    than CENTER, or |v| >= 1.
    """
    if u.frame is not Frame.CENTER:
        raise DomainError(f"u.frame must be CENTER for compose_finite, got {u.frame}")
    if u.is_infinite:
        raise DomainError(
            "u.speed must be finite for compose_finite; "
            "use compose_infinite for simultaneity influences"
        )
    _check_boost(v)
    speed, angle = compose_finite_values(u.speed, u.angle, v)
    return InfluenceVector(float(speed), float(angle), Frame.LAB)


def compose_infinite(angle_c: float, v: float) -> InfluenceVector:
    """Lab-frame influence for strict simultaneity in the center frame.

    ``angle_c`` is the center-frame angle in radians.  The resulting lab
    speed always satisfies c <= speed <= infinity.
    """
    _check_angle(angle_c, "angle_c")
    _check_boost(v)
    speed, angle = compose_infinite_values(angle_c, v)
    return InfluenceVector(float(speed), float(angle), Frame.LAB)


def compose(u: InfluenceVector, v: float) -> InfluenceVector:
    """Center-to-lab transform, dispatching on finite vs infinite speed."""
    if u.is_infinite:
        return compose_infinite(u.angle, v)
    return compose_finite(u, v)


def compose_inverse(u: InfluenceVector, v: float) -> InfluenceVector:
    """Transform a lab-frame influence back into the center frame.

    The inverse transform is the forward transform with ``v`` negated.
    Round trip: ``compose_inverse(compose(x, v), v)`` reproduces ``x``.
    """
    if u.frame is not Frame.LAB:
        raise DomainError(f"u.frame must be LAB for compose_inverse, got {u.frame}")
    _check_boost(v)
    if u.is_infinite:
        speed, angle = compose_infinite_values(u.angle, -v)
    else:
        speed, angle = compose_finite_values(u.speed, u.angle, -v)
    return InfluenceVector(float(speed), float(angle), Frame.CENTER)


def classify_special_case(
    angle_c: float, v: float, u_c: float, *, tol: float = CASE_TOLERANCE
) -> SpecialCase:
    """Classify a center-frame configuration against the special cases.

    Zero tests compare |v|, 1 - |v|, alpha_c and cos(alpha_c) against
    ``tol``.  When several cases match, priority is LIGHTLIKE_BOOST >
    ZERO_BOOST > DE_BROGLIE_WAVE > TRANSVERSE_SIMULTANEITY.  Unlike the
    composition operations, |v| = 1 is admitted here so the lightlike case
    can be named.
    """
    _check_angle(angle_c, "angle_c")
    _check_speed(u_c, "u_c")
    if not isinstance(v, (int, float)) or not (abs(v) <= 1.0):
        raise DomainError(f"boost.v must satisfy |v| <= 1 in units of c, got {v!r}")

    if 1.0 - abs(v) <= tol:
        return SpecialCase.LIGHTLIKE_BOOST
    if abs(v) <= tol:
        return SpecialCase.ZERO_BOOST
    if math.isinf(u_c) and angle_c <= tol:
        return SpecialCase.DE_BROGLIE_WAVE
    if math.isinf(u_c) and abs(math.cos(angle_c)) <= tol:
        return SpecialCase.TRANSVERSE_SIMULTANEITY
    return SpecialCase.GENERIC
