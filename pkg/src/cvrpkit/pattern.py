"""Polarized EIRP patterns: remapping, filling, sampling, rotation.

All power values are linear (mW). Interpolation is bilinear in (theta, phi)
over linear power; dB conversion happens only at I/O boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import (
    ANGLE_TOL_DEG,
    AngularGrid,
    Convention,
    Direction,
    sph_to_unit,
    unit_to_sph,
)

_REL_TOL = 1e-9


@dataclass(frozen=True)
class PolarizedPattern:
    """EIRP samples (mW) in two orthogonal polarizations on an angular grid."""

    grid: AngularGrid
    eirp_theta_mw: np.ndarray
    eirp_phi_mw: np.ndarray
    frequency_hz: float = 28e9
    label: str = ""
    measured: np.ndarray | None = None  # False marks cells absent in source data

    def __post_init__(self):
        shape = (self.grid.n_theta, self.grid.n_phi)
        et = np.ascontiguousarray(self.eirp_theta_mw, dtype=float)
        ep = np.ascontiguousarray(self.eirp_phi_mw, dtype=float)
        if et.shape != shape or ep.shape != shape:
            raise ValueError(f"EIRP matrices must have shape {shape}")
        if np.any(et < 0) or np.any(ep < 0):
            raise ValueError("EIRP values must be non-negative linear power")
        meas = self.measured
        if meas is not None:
            meas = np.ascontiguousarray(meas, dtype=bool)
            if meas.shape != shape:
                raise ValueError(f"measured mask must have shape {shape}")
            if meas.all():
                meas = None
            else:
                meas.flags.writeable = False
        et.flags.writeable = False
        ep.flags.writeable = False
        object.__setattr__(self, "eirp_theta_mw", et)
        object.__setattr__(self, "eirp_phi_mw", ep)
        object.__setattr__(self, "measured", meas)

    @property
    def total_mw(self) -> np.ndarray:
        return self.eirp_theta_mw + self.eirp_phi_mw

    def measured_mask(self) -> np.ndarray:
        if self.measured is None:
            return np.ones((self.grid.n_theta, self.grid.n_phi), dtype=bool)
        return self.measured.copy()


def isotropic(eirp_mw: float = 1.0, grid: AngularGrid | None = None,
              frequency_hz: float = 28e9, label: str = "isotropic") -> PolarizedPattern:
    """Isotropic pattern with the power split evenly between polarizations."""
    if eirp_mw < 0:
        raise ValueError("EIRP must be non-negative")
    if grid is None:
        grid = AngularGrid.standard()
    half = np.full((grid.n_theta, grid.n_phi), eirp_mw / 2.0)
    return PolarizedPattern(grid, half, half.copy(), frequency_hz, label)


def _rel_diff(a: float, b: float) -> float:
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / scale


def remap_to_standard(p: PolarizedPattern) -> PolarizedPattern:
    """Remap a distributed-axes pattern onto the standard grid.

    A sample at distributed (theta < 0, phi) lands at standard
    (-theta, phi + 180); non-negative theta samples land unchanged.
    Directions never measured stay zero-filled and flagged unmeasured.
    """
    g = p.grid
    if g.convention is not Convention.DISTRIBUTED:
        raise ValueError("remap_to_standard expects a distributed-axes pattern")
    dt, dp = g.dtheta_deg, g.dphi_deg
    if abs(round(180.0 / dp) * dp - 180.0) > ANGLE_TOL_DEG:
        raise ValueError("phi step must divide 180 degrees for remapping")
    out_grid = AngularGrid.standard(dt, dp)
    n_t, n_p = out_grid.n_theta, out_grid.n_phi
    et = np.zeros((n_t, n_p))
    ep = np.zeros((n_t, n_p))
    meas = np.zeros((n_t, n_p), dtype=bool)

    src_meas = p.measured_mask()
    for i, theta in enumerate(g.theta_deg):
        if theta >= -ANGLE_TOL_DEG:
            t_std, p_off = theta, 0.0
        else:
            t_std, p_off = -theta, 180.0
        it = round(t_std / dt)
        if it >= n_t or abs(it * dt - t_std) > ANGLE_TOL_DEG:
            raise ValueError(f"theta={theta} deg does not land on the standard grid")
        for j, phi in enumerate(g.phi_deg):
            if not src_meas[i, j]:
                continue
            p_std = (phi + p_off) % 360.0
            jt = round(p_std / dp) % n_p
            if abs((jt * dp - p_std + 180.0) % 360.0 - 180.0) > ANGLE_TOL_DEG:
                raise ValueError(f"phi={phi} deg does not land on the standard grid")
            vt, vp = p.eirp_theta_mw[i, j], p.eirp_phi_mw[i, j]
            if meas[it, jt]:
                if _rel_diff(et[it, jt], vt) > _REL_TOL or _rel_diff(ep[it, jt], vp) > _REL_TOL:
                    raise ValueError(
                        f"conflicting duplicate samples at standard "
                        f"(theta={it * dt}, phi={jt * dp}) deg"
                    )
            else:
                et[it, jt] = vt
                ep[it, jt] = vp
                meas[it, jt] = True

    # Poles are single physical directions: broadcast across phi.
    for it in (0, n_t - 1):
        cols = np.nonzero(meas[it])[0]
        if cols.size == 0:
            continue
        for arr in (et, ep):
            ref = arr[it, cols[0]]
            for j in cols[1:]:
                if _rel_diff(arr[it, j], ref) > _REL_TOL:
                    raise ValueError(
                        f"conflicting duplicate samples at pole theta={it * dt} deg"
                    )
            arr[it, :] = ref
        meas[it, :] = True

    return PolarizedPattern(out_grid, et, ep, p.frequency_hz, p.label, meas)


def fill_unmeasured(p: PolarizedPattern, fill_mw: float = 0.0) -> PolarizedPattern:
    """Set every unmeasured cell to fill_mw in both polarizations."""
    if fill_mw < 0:
        raise ValueError("fill power must be non-negative")
    if p.measured is None:
        return p
    hole = ~p.measured
    et = p.eirp_theta_mw.copy()
    ep = p.eirp_phi_mw.copy()
    et[hole] = fill_mw
    ep[hole] = fill_mw
    return PolarizedPattern(p.grid, et, ep, p.frequency_hz, p.label, None)


def _sample_component(values: np.ndarray, grid: AngularGrid,
                      theta_deg: np.ndarray, phi_deg: np.ndarray) -> np.ndarray:
    """Vectorized bilinear sampling of one polarization matrix."""
    t0 = grid.theta_deg[0]
    dt, dp = grid.dtheta_deg, grid.dphi_deg
    n_t, n_p = grid.n_theta, grid.n_phi

    tq = np.clip(np.asarray(theta_deg, dtype=float), grid.theta_deg[0], grid.theta_deg[-1])
    ti = (tq - t0) / dt
    i0 = np.floor(ti).astype(int)
    ft = ti - i0
    snap_t = ANGLE_TOL_DEG / dt
    hi = ft > 1.0 - snap_t
    i0[hi] += 1
    ft[hi] = 0.0
    ft[ft < snap_t] = 0.0
    i0 = np.clip(i0, 0, n_t - 1)
    i1 = np.minimum(i0 + 1, n_t - 1)

    p0 = grid.phi_deg[0]
    pq = np.asarray(phi_deg, dtype=float)
    if grid.phi_spans_circle:
        pj = ((pq - p0) % 360.0) / dp
    else:
        pj = (np.clip(pq, grid.phi_deg[0], grid.phi_deg[-1]) - p0) / dp
    j0 = np.floor(pj).astype(int)
    fp = pj - j0
    snap_p = ANGLE_TOL_DEG / dp
    hj = fp > 1.0 - snap_p
    j0[hj] += 1
    fp[hj] = 0.0
    fp[fp < snap_p] = 0.0
    if grid.phi_spans_circle:
        j0 = j0 % n_p
        j1 = (j0 + 1) % n_p
    else:
        j0 = np.clip(j0, 0, n_p - 1)
        j1 = np.minimum(j0 + 1, n_p - 1)

    v00 = values[i0, j0]
    v01 = values[i0, j1]
    v10 = values[i1, j0]
    v11 = values[i1, j1]
    return ((1 - ft) * ((1 - fp) * v00 + fp * v01)
            + ft * ((1 - fp) * v10 + fp * v11))


def sample_bilinear(p: PolarizedPattern, d: Direction) -> tuple[float, float]:
    """Bilinear-interpolated (EIRP_theta, EIRP_phi) in mW at a direction.

    Exact grid-node queries (within 1e-9 deg) return stored values; phi
    wraps modulo 360 and theta clamps to the sampled rings.
    """
    if p.grid.convention is not Convention.STANDARD:
        raise ValueError("sample_bilinear expects a standard-convention pattern")
    t = np.array([d.theta_deg])
    ph = np.array([d.phi_deg])
    et = _sample_component(p.eirp_theta_mw, p.grid, t, ph)[0]
    ep = _sample_component(p.eirp_phi_mw, p.grid, t, ph)[0]
    return float(et), float(ep)


def combined_eirp(p: PolarizedPattern, d: Direction) -> float:
    """Total EIRP (mW) at a direction: sum of both polarizations."""
    et, ep = sample_bilinear(p, d)
    return et + ep


def rotate_about_y(p: PolarizedPattern, alpha_deg: float) -> PolarizedPattern:
    """Rotate a pattern about the y-axis by alpha_deg, resampled on its grid.

    Each output direction is mapped through the inverse rotation and the
    source is sampled bilinearly; per-polarization power is transported as
    a scalar (no polarization-basis re-projection).
    """
    if p.grid.convention is not Convention.STANDARD:
        raise ValueError("rotate_about_y expects a standard-convention pattern")
    if alpha_deg == 0.0:
        return p
    g = p.grid
    tt, pp = np.meshgrid(g.theta_deg, g.phi_deg, indexing="ij")
    u = sph_to_unit(tt, pp)
    beta = np.radians(-alpha_deg)
    cb, sb = np.cos(beta), np.sin(beta)
    x = u[..., 0] * cb + u[..., 2] * sb
    z = -u[..., 0] * sb + u[..., 2] * cb
    src = np.stack([x, u[..., 1], z], axis=-1)
    ts, ps = unit_to_sph(src)
    et = _sample_component(p.eirp_theta_mw, g, ts.ravel(), ps.ravel()).reshape(tt.shape)
    ep = _sample_component(p.eirp_phi_mw, g, ts.ravel(), ps.ravel()).reshape(tt.shape)
    label = f"{p.label} (rotated {alpha_deg:g} deg about y)" if p.label else ""
    return PolarizedPattern(g, et, ep, p.frequency_hz, label)
