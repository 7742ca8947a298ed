"""Center-frame kinematics for entangled wavepacket reduction.

Three layers:

* :mod:`reduction_frames.kinematics` -- frame transformations for
  hypothetical influence velocities, finite or infinite, with the
  special-case taxonomy.
* :mod:`reduction_frames.wavepacket` -- entangled two-packet systems on
  grids: density, mean position, center-frame velocity.
* :mod:`reduction_frames.scenarios` -- prediction curves and compatibility
  verdicts for two-receiver experiments.

A command-line interface lives in :mod:`reduction_frames.cli`
(``reduction-frames compose|sweep|center|scenario``).
"""

from .kinematics import (
    CASE_TOLERANCE,
    INFINITE,
    DomainError,
    Frame,
    InfluenceVector,
    SpecialCase,
    center_influence,
    classify_special_case,
    compose,
    compose_finite,
    compose_finite_values,
    compose_infinite,
    compose_infinite_values,
    compose_inverse,
    lab_influence,
)
from .scenarios import (
    DEFAULT_BOUND,
    CompatibilityVerdict,
    CurveSample,
    ExperimentScenario,
    PredictionCurve,
    VerdictStatus,
    builtin_scenarios,
    check_compatibility,
    infer_center_angle,
    predict_curve,
)
from .wavepacket import (
    BOUNDARY_TOL,
    NORM_FLOOR,
    SPEED_OF_LIGHT_M_PER_S,
    AmplitudeGrid,
    CenterEstimate,
    DegenerateSystemError,
    EntangledPacketSystem,
    GaussianBranch,
    GaussianPairSpec,
    center_frame_velocity,
    center_position,
    density,
    density_field,
    make_gaussian_pair,
)

__version__ = "0.1.0"

__all__ = [
    "CASE_TOLERANCE",
    "INFINITE",
    "DomainError",
    "Frame",
    "InfluenceVector",
    "SpecialCase",
    "center_influence",
    "classify_special_case",
    "compose",
    "compose_finite",
    "compose_finite_values",
    "compose_infinite",
    "compose_infinite_values",
    "compose_inverse",
    "lab_influence",
    "DEFAULT_BOUND",
    "CompatibilityVerdict",
    "CurveSample",
    "ExperimentScenario",
    "PredictionCurve",
    "VerdictStatus",
    "builtin_scenarios",
    "check_compatibility",
    "infer_center_angle",
    "predict_curve",
    "BOUNDARY_TOL",
    "NORM_FLOOR",
    "SPEED_OF_LIGHT_M_PER_S",
    "AmplitudeGrid",
    "CenterEstimate",
    "DegenerateSystemError",
    "EntangledPacketSystem",
    "GaussianBranch",
    "GaussianPairSpec",
    "center_frame_velocity",
    "center_position",
    "density",
    "density_field",
    "make_gaussian_pair",
    "__version__",
]
