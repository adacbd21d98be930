"""Radiated-power metrics: TRP, PRP, CVRP, and FoV sweeps.

All metrics share one discretization: an equispaced-grid Riemann sum of
EIRP_theta + EIRP_phi weighted by sin(theta), with compensated (fsum)
summation. CVRP normalizes by the mask's solid angle; the normalization
uses the grid's own discretized coverage, rescaled so that a full-sphere
mask reproduces TRP bit-exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import ANGLE_TOL_DEG, AngularGrid, Convention, Direction
from .masks import FOUR_PI, MaskKind, SphericalMask, membership
from .pattern import PolarizedPattern, combined_eirp

#: Cap half-angles of the default FoV sweep (degrees); 0 means point FoV.
DEFAULT_FOV_SWEEP = (180.0, 165.0, 150.0, 135.0, 120.0, 105.0, 90.0,
                     60.0, 45.0, 30.0, 21.0, 15.0, 9.0, 6.0, 3.0, 0.0)

#: PRP theta bands (theta1, theta2) in degrees.
PRP_PRESETS = {
    "uhrp": (0.0, 90.0),
    "n75prp": (60.0, 90.0),
    "nhprp": (60.0, 120.0),
}


@dataclass(frozen=True)
class CvrpSweep:
    """Ordered (FoV half-angle, CVRP) pairs for one pattern."""

    entries: tuple[tuple[float, float], ...]
    pattern_label: str = ""

    def __post_init__(self):
        fovs = [f for f, _ in self.entries]
        if any(b >= a for a, b in zip(fovs, fovs[1:])):
            raise ValueError("sweep FoVs must be strictly decreasing")
        if fovs and (fovs[0] > 180.0 or fovs[-1] < 0.0):
            raise ValueError("sweep FoVs must lie in [0, 180] degrees")
        if any(v < 0 for _, v in self.entries):
            raise ValueError("CVRP values must be non-negative")
        object.__setattr__(self, "entries", tuple((float(f), float(v))
                                                  for f, v in self.entries))

    @property
    def fov_deg(self) -> tuple[float, ...]:
        return tuple(f for f, _ in self.entries)

    @property
    def cvrp_mw(self) -> tuple[float, ...]:
        return tuple(v for _, v in self.entries)


def _require_standard(p: PolarizedPattern) -> None:
    if p.grid.convention is not Convention.STANDARD:
        raise ValueError("metrics require a standard-convention pattern")


def _sin_theta(grid: AngularGrid) -> np.ndarray:
    s = np.sin(np.radians(grid.theta_deg))
    # Endpoint rings contribute exactly zero.
    mod = grid.theta_deg % 180.0
    s[(mod <= ANGLE_TOL_DEG) | (mod >= 180.0 - ANGLE_TOL_DEG)] = 0.0
    return s


def _domega(grid: AngularGrid) -> float:
    return math.radians(grid.dtheta_deg) * math.radians(grid.dphi_deg)


def _weighted_power_sum(p: PolarizedPattern, weights: np.ndarray) -> float:
    """fsum of weights * (EIRP_theta + EIRP_phi) * sin(theta) over all cells."""
    terms = weights * p.total_mw * _sin_theta(p.grid)[:, None]
    return math.fsum(terms.ravel())


def effective_solid_angle(m: SphericalMask, grid: AngularGrid) -> float:
    """Solid angle of the mask as resolved by the grid's node-center cells.

    Scaled so that the full sphere maps to exactly 4*pi; this is the
    normalization area used by cvrp.
    """
    member = membership(m, grid).astype(float)
    s = _sin_theta(grid)[:, None]
    w_mask = math.fsum((member * np.broadcast_to(s, member.shape)).ravel())
    w_full = math.fsum(np.broadcast_to(s, member.shape).ravel())
    return FOUR_PI * (w_mask / w_full)


def cvrp(p: PolarizedPattern, m: SphericalMask) -> float:
    """Constrained-view radiated power (mW) over a mask.

    A full-sphere mask reproduces trp(p) exactly; point masks are
    rejected (use cvrp_point).
    """
    _require_standard(p)
    if m.kind is MaskKind.POINT:
        raise ValueError("point masks are degenerate here; use cvrp_point")
    if m.solid_angle_sr < 1e-12:
        raise ValueError("mask solid angle is degenerate")
    member = membership(m, p.grid).astype(float)
    s = _sin_theta(p.grid)[:, None]
    shape = (p.grid.n_theta, p.grid.n_phi)
    w_mask = math.fsum((member * np.broadcast_to(s, shape)).ravel())
    if w_mask <= 0.0:
        raise ValueError("mask covers no grid cells with nonzero quadrature weight")
    w_full = math.fsum(np.broadcast_to(s, shape).ravel())
    area_scale = w_mask / w_full  # exactly 1.0 for a full-sphere mask
    power_sum = _weighted_power_sum(p, member)
    return (_domega(p.grid) * power_sum) / (FOUR_PI * area_scale)


def trp(p: PolarizedPattern) -> float:
    """Total radiated power (mW): full-sphere Riemann sum over 4*pi."""
    return cvrp(p, SphericalMask.full_sphere())


def prp(p: PolarizedPattern, theta1_deg: float, theta2_deg: float) -> float:
    """Partial radiated power (mW) over a theta band, normalized by 4*pi.

    Rings straddling a band edge enter with the fraction of their theta
    cell inside the band, so band integrals match their analytic values
    to O(step^2).
    """
    _require_standard(p)
    if not (0.0 <= theta1_deg < theta2_deg <= 180.0):
        raise ValueError("need 0 <= theta1 < theta2 <= 180 degrees")
    g = p.grid
    half = g.dtheta_deg / 2.0
    lo = np.maximum(g.theta_deg - half, theta1_deg)
    hi = np.minimum(g.theta_deg + half, theta2_deg)
    frac = np.clip((hi - lo) / g.dtheta_deg, 0.0, 1.0)
    power_sum = _weighted_power_sum(p, frac[:, None])
    return (_domega(g) * power_sum) / (FOUR_PI * 1.0)


def prp_preset(p: PolarizedPattern, name: str) -> float:
    try:
        t1, t2 = PRP_PRESETS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown PRP preset {name!r}; "
                         f"choose from {sorted(PRP_PRESETS)}") from None
    return prp(p, t1, t2)


def cvrp_point(p: PolarizedPattern, center: Direction) -> float:
    """Point-FoV CVRP (mW): the combined EIRP at the observation point."""
    return combined_eirp(p, center)


def cvrp_sweep(p: PolarizedPattern, center: Direction,
               half_angles_deg=DEFAULT_FOV_SWEEP) -> CvrpSweep:
    """CVRP over a list of cap half-angles (0 means the point FoV)."""
    _require_standard(p)
    fovs = [float(f) for f in half_angles_deg]
    if any(b >= a for a, b in zip(fovs, fovs[1:])):
        raise ValueError("half-angles must be strictly decreasing (no duplicates)")
    if any(f < 0 or f > 180 for f in fovs):
        raise ValueError("half-angles must lie in [0, 180] degrees")
    entries = []
    for f in fovs:
        if f == 0.0:
            val = cvrp_point(p, center)
        else:
            val = cvrp(p, SphericalMask.cap(center, f))
        entries.append((f, val))
    return CvrpSweep(tuple(entries), pattern_label=p.label)
