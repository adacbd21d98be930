"""Pattern and sweep CSV formats.

Pattern files are UTF-8 CSV with "# key: value" metadata lines, a
``theta_deg,phi_deg,eirp_theta_dbm,eirp_phi_dbm`` header, and one row per
grid cell in theta-major ascending order. Power is written in dBm with
12 significant digits; zero linear power is written as "-inf". Cells
absent from the file are marked unmeasured on load.
"""

from __future__ import annotations

import math
import os
from typing import Iterable

import numpy as np

from .grid import ANGLE_TOL_DEG, AngularGrid, Convention
from .metrics import CvrpSweep
from .pattern import PolarizedPattern

FORMAT_VERSION = "cvrp-pattern/1"

_CONVENTIONS = {
    "standard": Convention.STANDARD,
    "distributed": Convention.DISTRIBUTED,
}


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _dbm_str(mw: float) -> str:
    if mw <= 0:
        return "-inf"
    return _fmt(10.0 * math.log10(mw))


def _parse_dbm(text: str, path: str, lineno: int) -> float:
    if text.strip().lower() in ("-inf", "-infinity"):
        return 0.0
    try:
        dbm = float(text)
    except ValueError:
        raise ValueError(f"{path}:{lineno}: non-numeric dBm value {text!r}") from None
    if math.isnan(dbm) or math.isinf(dbm):
        raise ValueError(f"{path}:{lineno}: non-finite dBm value {text!r}")
    return 10.0 ** (dbm / 10.0)


def write_pattern(p: PolarizedPattern, path: str) -> None:
    """Write a pattern file; all grid cells are emitted, zeros as "-inf"."""
    g = p.grid
    lines = [
        f"# format_version: {FORMAT_VERSION}",
        f"# frequency_hz: {_fmt(p.frequency_hz)}",
        f"# convention: {g.convention.value}",
        f"# dtheta_deg: {_fmt(g.dtheta_deg)}",
        f"# dphi_deg: {_fmt(g.dphi_deg)}",
    ]
    if p.label:
        lines.append(f"# label: {p.label}")
    lines.append("theta_deg,phi_deg,eirp_theta_dbm,eirp_phi_dbm")
    for i, theta in enumerate(g.theta_deg):
        for j, phi in enumerate(g.phi_deg):
            lines.append(f"{_fmt(theta)},{_fmt(phi)},"
                         f"{_dbm_str(p.eirp_theta_mw[i, j])},"
                         f"{_dbm_str(p.eirp_phi_mw[i, j])}")
    _write_text(path, "\n".join(lines) + "\n")


def read_pattern(path: str) -> PolarizedPattern:
    """Read a pattern file; absent (theta, phi) cells are unmeasured."""
    meta: dict[str, str] = {}
    samples: dict[tuple[float, float], tuple[float, float]] = {}
    header_seen = False
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if ":" in body:
                    key, _, value = body.partition(":")
                    meta[key.strip()] = value.strip()
                continue
            if not header_seen:
                if line != "theta_deg,phi_deg,eirp_theta_dbm,eirp_phi_dbm":
                    raise ValueError(f"{path}:{lineno}: unexpected column header {line!r}")
                header_seen = True
                continue
            parts = line.split(",")
            if len(parts) != 4:
                raise ValueError(f"{path}:{lineno}: expected 4 columns, got {len(parts)}")
            try:
                theta = float(parts[0])
                phi = float(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-numeric angle") from None
            key = (theta, phi)
            if key in samples:
                raise ValueError(f"{path}:{lineno}: duplicate sample at "
                                 f"theta={theta}, phi={phi}")
            samples[key] = (_parse_dbm(parts[2], path, lineno),
                            _parse_dbm(parts[3], path, lineno))

    version = meta.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"{path}: unknown format version {version!r}")
    conv_name = meta.get("convention", "standard")
    if conv_name not in _CONVENTIONS:
        raise ValueError(f"{path}: unknown convention {conv_name!r}")
    convention = _CONVENTIONS[conv_name]
    try:
        dtheta = float(meta["dtheta_deg"])
        dphi = float(meta["dphi_deg"])
        frequency = float(meta.get("frequency_hz", "28e9"))
    except (KeyError, ValueError):
        raise ValueError(f"{path}: missing or invalid step/frequency metadata") from None
    if not samples:
        raise ValueError(f"{path}: file contains no samples")

    thetas = sorted({t for t, _ in samples})
    phis = sorted({ph for _, ph in samples})
    theta_axis = _build_axis(thetas, dtheta, path, "theta")
    phi_axis = _build_axis(phis, dphi, path, "phi")
    grid = AngularGrid(theta_axis, phi_axis, dtheta, dphi, convention)

    n_t, n_p = grid.n_theta, grid.n_phi
    et = np.zeros((n_t, n_p))
    ep = np.zeros((n_t, n_p))
    meas = np.zeros((n_t, n_p), dtype=bool)
    for (theta, phi), (vt, vp) in samples.items():
        i = round((theta - theta_axis[0]) / dtheta)
        j = round((phi - phi_axis[0]) / dphi)
        et[i, j] = vt
        ep[i, j] = vp
        meas[i, j] = True
    return PolarizedPattern(grid, et, ep, frequency, meta.get("label", ""), meas)


def _build_axis(values: list[float], step: float, path: str, name: str) -> np.ndarray:
    lo, hi = values[0], values[-1]
    n = round((hi - lo) / step)
    if abs(lo + n * step - hi) > ANGLE_TOL_DEG:
        raise ValueError(f"{path}: {name} span is not a multiple of the declared step")
    axis = lo + np.arange(n + 1) * step
    for v in values:
        k = round((v - lo) / step)
        if k < 0 or k > n or abs(lo + k * step - v) > ANGLE_TOL_DEG:
            raise ValueError(f"{path}: {name}={v} is inconsistent with step {step}")
    if axis.size < 2:
        raise ValueError(f"{path}: {name} axis needs at least two samples")
    return axis


def write_sweep_csv(rows_or_obj, path: str, columns: Iterable[str] | None = None,
                    label: str = "") -> None:
    """Write sweep/comparison rows; accepts (columns, rows) from
    sweep_to_plot_rows, a CvrpSweep/SweepComparison, or explicit rows."""
    from .diagnostics import sweep_to_plot_rows

    if columns is None:
        cols, rows = sweep_to_plot_rows(rows_or_obj)
        if isinstance(rows_or_obj, CvrpSweep) and not label:
            label = rows_or_obj.pattern_label
    else:
        cols, rows = tuple(columns), list(rows_or_obj)
    lines = []
    if label:
        lines.append(f"# label: {label}")
    lines.append(",".join(cols))
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    _write_text(path, "\n".join(lines) + "\n")


def read_sweep_csv(path: str) -> CvrpSweep:
    """Read a single-sweep CSV (fov_deg,cvrp_dbm) back into linear units."""
    label = ""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("label:"):
                    label = body.partition(":")[2].strip()
                continue
            if line.startswith("fov_deg"):
                if line != "fov_deg,cvrp_dbm":
                    raise ValueError(f"{path}:{lineno}: not a single-sweep CSV")
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 columns")
            fov = float(parts[0])
            entries.append((fov, _parse_dbm(parts[1], path, lineno)))
    if not entries:
        raise ValueError(f"{path}: no sweep rows found")
    return CvrpSweep(tuple(entries), pattern_label=label)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _fmt(v)
    return str(v)


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ValueError(f"cannot write {path}: {exc}") from exc
