"""Canonical fixtures shared by the wavepacket and acceptance tests."""

from __future__ import annotations

from dataclasses import replace

from reduction_frames import GaussianBranch, GaussianPairSpec, make_gaussian_pair

#: Half-extent of the canonical cubic domain, meters.
DOMAIN_HALF = 8.5


def cubic_geometry(n: int, half: float = DOMAIN_HALF):
    """Origin/spacing/dims for an n^3 grid of cell centers on [-half, half]^3."""
    h = 2.0 * half / n
    return (-half + h / 2.0,) * 3, (h,) * 3, (n,) * 3


def weighted_pair_spec(n: int, sign: int = 1) -> GaussianPairSpec:
    """The weighted two-branch fixture: masses 0.64 / 0.36 at x = +-5 m.

    The branch widths differ so the two quadrature errors cannot cancel by
    symmetry; the exact mean position is (1.4, 0, 0) m either way.
    """
    origin, spacing, dims = cubic_geometry(n)
    return GaussianPairSpec(
        origin=origin,
        spacing=spacing,
        dims=dims,
        branch_a=GaussianBranch(center=(5.0, 0.0, 0.0), width=0.30, weight=0.64),
        branch_b=GaussianBranch(center=(-5.0, 0.0, 0.0), width=0.38, weight=0.36),
        sign=sign,
    )


def equal_pair_spec(n: int, sign: int = 1) -> GaussianPairSpec:
    """Unit-norm branch products (weights 0.5 each) at x = +-5 m."""
    origin, spacing, dims = cubic_geometry(n)
    return GaussianPairSpec(
        origin=origin,
        spacing=spacing,
        dims=dims,
        branch_a=GaussianBranch(center=(5.0, 0.0, 0.0), width=0.35, weight=0.5),
        branch_b=GaussianBranch(center=(-5.0, 0.0, 0.0), width=0.35, weight=0.5),
        sign=sign,
    )


def drift_spec(n: int = 48) -> GaussianPairSpec:
    """Equal-weight branches at x = +-4 m, wide enough that quadrature noise
    in the fitted velocity stays below 1e-5 m/s at 48^3."""
    origin, spacing, dims = cubic_geometry(n)
    return GaussianPairSpec(
        origin=origin,
        spacing=spacing,
        dims=dims,
        branch_a=GaussianBranch(center=(4.0, 0.0, 0.0), width=0.5, weight=0.5),
        branch_b=GaussianBranch(center=(-4.0, 0.0, 0.0), width=0.5, weight=0.5),
    )


def drifting_snapshots(times, velocity_a=(10.0, 0.0, 0.0), velocity_b=(-4.0, 0.0, 0.0), n=48):
    """Branches drifting at constant velocities; mean velocity is their
    weight-average."""
    base = drift_spec(n)
    systems = []
    for t in times:
        spec = replace(
            base,
            branch_a=replace(
                base.branch_a,
                center=tuple(c + w * t for c, w in zip(base.branch_a.center, velocity_a)),
            ),
            branch_b=replace(
                base.branch_b,
                center=tuple(c + w * t for c, w in zip(base.branch_b.center, velocity_b)),
            ),
            time=t,
        )
        systems.append(make_gaussian_pair(spec))
    return systems
