"""Two-receiver reduction experiments: prediction curves and compatibility.

The simultaneity conjecture (infinite influence speed in the center frame)
predicts a definite lab-frame speed for every boost velocity and geometry.
This module generates those prediction curves, encodes published two-receiver
experiments as scenarios with their measured lower bounds on the influence
speed, and checks whether the prediction clears each bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .kinematics import (
    CASE_TOLERANCE,
    DomainError,
    SpecialCase,
    _check_angle,
    _check_boost,
    classify_special_case,
    compose_infinite,
)


class VerdictStatus(Enum):
    COMPATIBLE = "compatible"
    INCOMPATIBLE = "incompatible"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ExperimentScenario:
    """Geometry, timing and measured bound of one two-receiver experiment.

    ``boost_v`` is the signed lab-frame speed of the center frame in units
    of c; ``alpha_lab`` is the receivers' angle to the boost axis in radians,
    or None when unknown; ``measured_lower_bound`` is the experiment's lower
    bound on the influence speed, finite and >= 1 (units of c).
    """

    name: str
    boost_v: float
    alpha_lab: float | None
    measured_lower_bound: float
    source_ref: str = ""
    note: str = ""

    def __post_init__(self) -> None:
        _check_boost(self.boost_v, "boost_v")
        if self.alpha_lab is not None:
            _check_angle(self.alpha_lab, "alpha_lab")
        b = self.measured_lower_bound
        if not isinstance(b, (int, float)) or not (1.0 <= b < math.inf):
            raise DomainError(
                f"measured_lower_bound must be finite and >= 1 c, got {b!r}"
            )


@dataclass(frozen=True)
class CurveSample:
    """One prediction sample: center angle, lab angle, lab speed."""

    alpha_c: float
    alpha_lab: float
    u_lab: float


@dataclass(frozen=True)
class PredictionCurve:
    """Predicted lab-frame speed vs angle for one boost velocity."""

    boost_v: float
    samples: tuple[CurveSample, ...]

    def __post_init__(self) -> None:
        alphas = [s.alpha_c for s in self.samples]
        if any(b <= a for a, b in zip(alphas, alphas[1:])):
            raise DomainError("curve samples must be strictly increasing in alpha_c")
        if any(s.u_lab < 1.0 for s in self.samples):
            raise DomainError("curve contains a sample below c")


@dataclass(frozen=True)
class CompatibilityVerdict:
    """Outcome of checking one scenario against the conjecture.

    ``predicted_u_lab`` and ``case`` are None when the verdict is
    inconclusive (unknown geometry with a moving center frame).
    """

    scenario: str
    predicted_u_lab: float | None
    bound: float
    status: VerdictStatus
    case: SpecialCase | None
    note: str = ""

    @property
    def compatible(self) -> bool:
        return self.status is VerdictStatus.COMPATIBLE


def infer_center_angle(alpha_lab: float, v: float) -> float:
    """Center-frame angle whose simultaneity image is ``alpha_lab``.

    Inverts the angle map analytically: tan(alpha_c) =
    tan(alpha_lab) / sqrt(1 - v^2), evaluated quadrant-correctly; at
    alpha_lab = 90 degrees the center angle is exactly 90 degrees.
    """
    _check_angle(alpha_lab, "alpha_lab")
    _check_boost(v, "boost_v")
    cos_l = math.cos(alpha_lab)
    if abs(cos_l) <= CASE_TOLERANCE:
        return math.pi / 2.0
    return math.atan2(math.sin(alpha_lab), cos_l * math.sqrt(1.0 - v * v))


def predict_curve(boost_v: float, alpha_grid: Sequence[float]) -> PredictionCurve:
    """Predicted (alpha_c, alpha_lab, u_lab) samples over an angle grid.

    ``alpha_grid`` is a strictly increasing sequence of center-frame angles
    in radians within [0, pi].  Singular points (cos alpha_c = 0) are
    recorded with infinite speed.
    """
    _check_boost(boost_v, "boost_v")
    alphas = [float(a) for a in alpha_grid]
    if any(b <= a for a, b in zip(alphas, alphas[1:])):
        raise DomainError("alpha_grid must be strictly increasing")
    samples = []
    for alpha_c in alphas:
        out = compose_infinite(alpha_c, boost_v)
        samples.append(CurveSample(alpha_c=alpha_c, alpha_lab=out.angle, u_lab=out.speed))
    return PredictionCurve(boost_v=boost_v, samples=tuple(samples))


def check_compatibility(scenario: ExperimentScenario) -> CompatibilityVerdict:
    """Check one scenario's measured bound against the conjecture.

    Infers the center-frame angle from the lab angle, computes the predicted
    lab speed under center-frame simultaneity, and compares it with the
    measured lower bound (an infinite prediction is compatible with any
    bound).  A scenario with unknown lab angle and a moving center frame is
    inconclusive rather than (in)compatible.
    """
    v = scenario.boost_v
    if v == 0.0:
        # Zero boost: simultaneity survives unchanged whatever the geometry.
        angle = scenario.alpha_lab if scenario.alpha_lab is not None else 0.0
        case = classify_special_case(angle, v, math.inf)
        return CompatibilityVerdict(
            scenario=scenario.name,
            predicted_u_lab=math.inf,
            bound=scenario.measured_lower_bound,
            status=VerdictStatus.COMPATIBLE,
            case=case,
            note=scenario.note,
        )
    if scenario.alpha_lab is None:
        return CompatibilityVerdict(
            scenario=scenario.name,
            predicted_u_lab=None,
            bound=scenario.measured_lower_bound,
            status=VerdictStatus.INCONCLUSIVE,
            case=None,
            note=(scenario.note + "; " if scenario.note else "")
            + "lab angle unknown with a moving center frame: no prediction",
        )
    alpha_c = infer_center_angle(scenario.alpha_lab, v)
    predicted = compose_infinite(alpha_c, v).speed
    status = (
        VerdictStatus.COMPATIBLE
        if predicted >= scenario.measured_lower_bound
        else VerdictStatus.INCOMPATIBLE
    )
    return CompatibilityVerdict(
        scenario=scenario.name,
        predicted_u_lab=predicted,
        bound=scenario.measured_lower_bound,
        status=status,
        case=classify_special_case(alpha_c, v, math.inf),
        note=scenario.note,
    )


#: Lower bound common to the published experiments: about 1e4 c.
DEFAULT_BOUND = 1.0e4


def builtin_scenarios(default_boost_v: float = 0.0) -> list[ExperimentScenario]:
    """The four published two-receiver experiments as preset scenarios.

    Three of them used receivers symmetric about the source (lab angle 90
    degrees) and did not report a center-frame speed; their ``boost_v``
    defaults to ``default_boost_v`` and the note records the assumption.
    The Cocciaro et al. setup had a comoving center frame (v = 0).  All
    four carry the common measured lower bound of about 1e4 c.
    """
    _check_boost(default_boost_v, "default_boost_v")
    symmetric_note = (
        "center-frame speed not reported; boost_v assumed "
        f"{default_boost_v:g} (override via default_boost_v)"
    )
    half_pi = math.pi / 2.0
    return [
        ExperimentScenario(
            name="zbinden-2001",
            boost_v=default_boost_v,
            alpha_lab=half_pi,
            measured_lower_bound=DEFAULT_BOUND,
            source_ref="Zbinden et al., J. Phys. A 34, 7103 (2001)",
            note=symmetric_note,
        ),
        ExperimentScenario(
            name="salart-2008",
            boost_v=default_boost_v,
            alpha_lab=half_pi,
            measured_lower_bound=DEFAULT_BOUND,
            source_ref="Salart et al., Nature 454, 861 (2008)",
            note=symmetric_note,
        ),
        ExperimentScenario(
            name="cocciaro-2011",
            boost_v=0.0,
            alpha_lab=None,
            measured_lower_bound=DEFAULT_BOUND,
            source_ref="Cocciaro, Faetti, Fronzoni, Phys. Lett. A 375, 379 (2011)",
            note="comoving center frame (v = 0)",
        ),
        ExperimentScenario(
            name="yin-2013",
            boost_v=default_boost_v,
            alpha_lab=half_pi,
            measured_lower_bound=DEFAULT_BOUND,
            source_ref="Yin et al., Phys. Rev. Lett. 110, 260407 (2013)",
            note=symmetric_note,
        ),
    ]
