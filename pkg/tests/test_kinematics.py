import math

import numpy as np
import pytest
from hypothesis import given, assume, settings
from hypothesis import strategies as st

from reduction_frames import (
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

import oracles

# Frozen expected values, produced by the independent oracles in oracles.py
# (event transport at 50 digits; numeric inversion of the forward map).
FINITE_2_60_06 = (1.3228756555322954, 0.7137243789447656)  # = (sqrt(7)/2, atan(sqrt(3)/2))
INFINITE_45_06 = (2.1343747458109497, 0.6747409422235526)  # = (sqrt(41)/3, atan(0.8))
INVERSE_3_70_03 = (4.02425872827412, 1.3070953644373554)


def deg(d: float) -> float:
    return math.radians(d)


# --- worked examples ---------------------------------------------------------


class TestComposeFinite:
    def test_lightspeed_fixed_point_collinear(self):
        out = compose_finite(center_influence(1.0, 0.0), 0.5)
        assert out.speed == pytest.approx(1.0, abs=1e-15)
        assert out.angle == 0.0
        assert out.frame is Frame.LAB

    def test_identity_boost(self):
        out = compose_finite(center_influence(2.0, deg(30)), 0.0)
        assert out.speed == pytest.approx(2.0, rel=1e-15)
        assert out.angle == pytest.approx(deg(30), abs=1e-15)

    def test_derived_example_matches_frozen_oracle(self):
        out = compose_finite(center_influence(2.0, deg(60)), 0.6)
        assert out.speed == pytest.approx(FINITE_2_60_06[0], rel=1e-12)
        assert out.angle == pytest.approx(FINITE_2_60_06[1], abs=1e-12)

    def test_oracle_self_consistency(self):
        # The frozen values must agree with both independent derivations.
        s_events, a_events = oracles.event_transport_finite(2.0, math.pi / 3, 0.6)
        s_literal = oracles.literal_lab_speed(2.0, math.pi / 3, 0.6)
        assert float(s_events) == pytest.approx(FINITE_2_60_06[0], rel=1e-14)
        assert float(s_literal) == pytest.approx(FINITE_2_60_06[0], rel=1e-14)
        assert float(a_events) == pytest.approx(FINITE_2_60_06[1], abs=1e-14)

    def test_denominator_zero_gives_infinite_with_limit_angle(self):
        # 1 + u v cos(alpha) == 0 exactly: u=2, v=-0.5, alpha=0.
        out = compose_finite(center_influence(2.0, 0.0), -0.5)
        assert math.isinf(out.speed)
        assert out.angle == 0.0
        # Round trip through the pole recovers the finite input.
        back = compose_inverse(out, -0.5)
        assert back.speed == pytest.approx(2.0, rel=1e-14)
        assert back.angle == pytest.approx(0.0, abs=1e-14)

    def test_rejects_infinite_speed(self):
        with pytest.raises(DomainError, match="finite"):
            compose_finite(center_influence(INFINITE, 0.0), 0.5)

    def test_rejects_lightlike_boost(self):
        with pytest.raises(DomainError, match="boost.v"):
            compose_finite(center_influence(2.0, 0.0), 1.0)
        with pytest.raises(DomainError, match="boost.v"):
            compose_finite(center_influence(2.0, 0.0), -1.5)

    def test_rejects_wrong_frame(self):
        with pytest.raises(DomainError, match="frame"):
            compose_finite(lab_influence(2.0, 0.0), 0.5)


class TestComposeInfinite:
    def test_de_broglie_wave_speed(self):
        # alpha_c = 0: the lab sees a wave of simultaneity at c^2/v.
        out = compose_infinite(0.0, 0.5)
        assert out.speed == 2.0
        assert out.angle == 0.0

    def test_transverse_simultaneity(self):
        out = compose_infinite(deg(90), 0.5)
        assert math.isinf(out.speed)
        assert out.angle == math.pi / 2

    def test_zero_boost_preserves_angle(self):
        out = compose_infinite(deg(37), 0.0)
        assert math.isinf(out.speed)
        assert out.angle == deg(37)

    def test_derived_example_matches_frozen_oracle(self):
        out = compose_infinite(deg(45), 0.6)
        assert out.speed == pytest.approx(INFINITE_45_06[0], rel=1e-12)
        assert out.angle == pytest.approx(INFINITE_45_06[1], abs=1e-12)
        s_events, a_events = oracles.event_transport_infinite(math.pi / 4, 0.6)
        assert float(s_events) == pytest.approx(INFINITE_45_06[0], rel=1e-14)
        assert float(a_events) == pytest.approx(INFINITE_45_06[1], abs=1e-14)

    def test_rejects_lightlike_boost(self):
        with pytest.raises(DomainError, match="v != c"):
            compose_infinite(deg(45), 1.0)

    def test_case_i_closed_form(self):
        # u_lab * v = c^2 for the collinear simultaneity wave.
        for v in np.arange(0.1, 0.95, 0.1):
            out = compose_infinite(0.0, float(v))
            assert out.speed * v == pytest.approx(1.0, abs=1e-12)


class TestComposeInverse:
    def test_round_trip_identity(self):
        x = center_influence(2.0, deg(60))
        assert compose_inverse(compose_finite(x, 0.6), 0.6).speed == pytest.approx(
            x.speed, rel=1e-12
        )
        assert compose_inverse(compose_finite(x, 0.6), 0.6).angle == pytest.approx(
            x.angle, abs=1e-12
        )

    def test_inverse_of_de_broglie_wave(self):
        # The 2c collinear lab wave at v=0.5 is simultaneity in the center frame.
        out = compose_inverse(lab_influence(2.0, 0.0), 0.5)
        assert math.isinf(out.speed)
        assert out.angle == 0.0
        assert out.frame is Frame.CENTER

    def test_derived_example_matches_numeric_inversion(self):
        out = compose_inverse(lab_influence(3.0, deg(70)), 0.3)
        assert out.speed == pytest.approx(INVERSE_3_70_03[0], rel=1e-12)
        assert out.angle == pytest.approx(INVERSE_3_70_03[1], abs=1e-12)

    def test_infinite_input_dispatches_to_simultaneity_form(self):
        out = compose_inverse(lab_influence(INFINITE, deg(90)), 0.7)
        assert math.isinf(out.speed)
        assert out.angle == math.pi / 2

    def test_rejects_wrong_frame(self):
        with pytest.raises(DomainError, match="frame"):
            compose_inverse(center_influence(2.0, 0.0), 0.5)


class TestClassify:
    @pytest.mark.parametrize(
        "angle,v,u,expected",
        [
            (0.0, 0.5, INFINITE, SpecialCase.DE_BROGLIE_WAVE),
            (deg(90), 0.7, INFINITE, SpecialCase.TRANSVERSE_SIMULTANEITY),
            (deg(45), 0.0, INFINITE, SpecialCase.ZERO_BOOST),
            (deg(30), 1.0, 2.0, SpecialCase.LIGHTLIKE_BOOST),
            (deg(30), -1.0, INFINITE, SpecialCase.LIGHTLIKE_BOOST),
            (deg(45), 0.5, 2.0, SpecialCase.GENERIC),
            (0.0, 0.5, 5.0, SpecialCase.GENERIC),  # finite speed: not a wave of simultaneity
            (deg(90), 0.5, 2.0, SpecialCase.GENERIC),
        ],
    )
    def test_labels(self, angle, v, u, expected):
        assert classify_special_case(angle, v, u) is expected

    def test_tie_breaks(self):
        # v = 0 with transverse simultaneity geometry: ZERO_BOOST wins.
        assert classify_special_case(deg(90), 0.0, INFINITE) is SpecialCase.ZERO_BOOST
        # |v| = 1 beats everything.
        assert classify_special_case(0.0, 1.0, INFINITE) is SpecialCase.LIGHTLIKE_BOOST

    def test_tolerance_band(self):
        assert classify_special_case(0.0, 1e-13, INFINITE) is SpecialCase.ZERO_BOOST
        assert (
            classify_special_case(1e-13, 0.5, INFINITE) is SpecialCase.DE_BROGLIE_WAVE
        )
        assert classify_special_case(0.0, 1 - 1e-13, 1.0) is SpecialCase.LIGHTLIKE_BOOST

    def test_rejects_superluminal_boost(self):
        with pytest.raises(DomainError, match="boost.v"):
            classify_special_case(0.0, 1.2, INFINITE)


class TestValueTypes:
    def test_speed_must_be_nonnegative(self):
        with pytest.raises(DomainError, match="speed"):
            InfluenceVector(-0.1, 0.0, Frame.CENTER)

    def test_speed_rejects_nan(self):
        with pytest.raises(DomainError, match="speed"):
            InfluenceVector(float("nan"), 0.0, Frame.CENTER)

    def test_angle_range(self):
        with pytest.raises(DomainError, match="angle"):
            InfluenceVector(1.0, -0.1, Frame.CENTER)
        with pytest.raises(DomainError, match="angle"):
            InfluenceVector(1.0, math.pi + 0.1, Frame.CENTER)

    def test_infinite_compares_greater_than_finites(self):
        assert INFINITE > 1e300
        assert InfluenceVector(INFINITE, 0.0, Frame.CENTER).is_infinite

    def test_frame_tags_flip(self):
        out = compose(center_influence(2.0, deg(10)), 0.3)
        assert out.frame is Frame.LAB
        assert compose_inverse(out, 0.3).frame is Frame.CENTER


# --- properties ---------------------------------------------------------------

finite_speeds = st.floats(min_value=1e-3, max_value=1e3)
angles = st.floats(min_value=0.0, max_value=math.pi)
boosts = st.floats(min_value=-0.99, max_value=0.99)


class TestProperties:
    @given(u=finite_speeds, alpha=angles, v=boosts)
    @settings(max_examples=300)
    def test_round_trip(self, u, alpha, v):
        # Conditioning degrades within ~1e-4 of the simultaneity pole of the
        # transform; the pole itself maps to INFINITE and inverts exactly.
        assume(abs(1.0 + u * v * math.cos(alpha)) > 1e-4)
        back = compose_inverse(compose_finite(center_influence(u, alpha), v), v)
        assert back.speed == pytest.approx(u, rel=1e-10)
        assert back.angle == pytest.approx(alpha, abs=1e-10)

    @given(alpha=angles, v=boosts)
    def test_fixed_point_at_c(self, alpha, v):
        out = compose_finite(center_influence(1.0, alpha), v)
        assert out.speed == pytest.approx(1.0, abs=1e-12)

    @given(alpha=angles, v=st.floats(min_value=-0.999999999, max_value=0.999999999))
    def test_simultaneity_image_never_below_c(self, alpha, v):
        out = compose_infinite(alpha, v)
        assert out.speed >= 1.0 - 1e-12

    @given(
        u=st.floats(min_value=0.0, max_value=50.0),
        alpha=angles,
        v=st.floats(min_value=-1.0, max_value=1.0),
    )
    def test_radicand_nonnegative(self, u, alpha, v):
        # The printed numerator, evaluated literally; only float rounding may
        # push it below zero, never the mathematics.
        terms = (
            u * u,
            v * v,
            2.0 * u * v * math.cos(alpha),
            -((u * v * math.sin(alpha)) ** 2),
        )
        scale = sum(abs(t) for t in terms)
        assert sum(terms) >= -64.0 * np.finfo(float).eps * scale

    def test_angle_map_monotone_below_90deg(self):
        for v in (0.2, 0.5, 0.8):
            alpha = np.radians(np.linspace(1.0, 89.0, 45))
            _, alpha_lab = compose_infinite_values(alpha, v)
            assert np.all(np.diff(alpha_lab) > 0.0)
            assert np.all(alpha_lab <= alpha + 1e-15)

    def test_limit_consistency_shrinks_monotonically(self):
        band = np.arccos(0.1)
        alpha = np.concatenate(
            [np.linspace(0.0, band, 25), np.linspace(np.pi - band, np.pi, 25)]
        )
        grid_a, grid_v = np.meshgrid(alpha, np.arange(0.1, 0.95, 0.1))
        s_inf, a_inf = compose_infinite_values(grid_a, grid_v)
        worst = []
        for k in (3, 6, 9):
            s_fin, a_fin = compose_finite_values(10.0**k, grid_a, grid_v)
            worst.append(
                max(
                    np.max(np.abs(s_fin - s_inf) / s_inf),
                    np.max(np.abs(a_fin - a_inf)),
                )
            )
        assert worst[0] > worst[1] > worst[2]
        assert worst[2] < 1e-5
