"""Brute-force numerical point-coverage simulation.

Independent cross-check for the semi-analytical engine: secular-J2
element propagation plus time-stepped visibility testing of ground
points, with access boundaries refined by bisection.  Shares the Earth
model and secular rates with the engine so that differences between the
two isolate method error rather than model error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .coverage import AccessTable, LongitudeGrid, RevisitReport, revisit_stats
from .earth import EARTH, EarthConstants, geodetic_radius
from .errors import KeplerConvergenceError
from .passes import (
    OrbitElements,
    WalkerConfig,
    _mean_from_true,
    raan_drift_rate,
    wrap_angle,
)
from .sensor import SensorSpec

TWO_PI = 2.0 * math.pi


def solve_kepler(mean_anom, e: float, tol: float = 1e-12, max_iter: int = 50):
    """Eccentric anomaly from mean anomaly, Newton iteration."""
    m = np.asarray(mean_anom, dtype=float)
    if e == 0.0:
        return m
    m_red = np.mod(m, TWO_PI)
    ecc = m_red + e * np.sin(m_red)
    for _ in range(max_iter):
        f = ecc - e * np.sin(ecc) - m_red
        ecc = ecc - f / (1.0 - e * np.cos(ecc))
        if np.max(np.abs(f)) < tol:
            return ecc + (m - m_red)
    raise KeplerConvergenceError("Kepler iteration did not converge")


def true_from_mean(mean_anom: float, e: float) -> float:
    ecc = float(solve_kepler(mean_anom, e))
    return 2.0 * math.atan2(
        math.sqrt(1.0 + e) * math.sin(0.5 * ecc),
        math.sqrt(1.0 - e) * math.cos(0.5 * ecc),
    )


def secular_rates(el: OrbitElements, earth: EarthConstants = EARTH) -> tuple[float, float, float]:
    """Secular J2 rates (raan_dot, argp_dot, mean_anomaly_dot), rad/s."""
    n = math.sqrt(earth.mu / el.a**3)
    p = el.a * (1.0 - el.e * el.e)
    ratio2 = (earth.equatorial_radius / p) ** 2
    si2 = math.sin(el.inc) ** 2
    raan_dot = raan_drift_rate(el.a, el.e, el.inc, earth)
    argp_dot = 0.75 * n * earth.j2 * ratio2 * (4.0 - 5.0 * si2)
    mean_dot = n * (
        1.0 + 0.75 * earth.j2 * ratio2 * math.sqrt(1.0 - el.e * el.e) * (2.0 - 3.0 * si2)
    )
    return raan_dot, argp_dot, mean_dot


def propagate_j2(el: OrbitElements, t, earth: EarthConstants = EARTH):
    """Sub-satellite state at time(s) t under secular-J2 motion.

    Returns (radius_km, lat_rad, lon_rad) arrays; the longitude includes
    Earth rotation with Greenwich aligned to the vernal equinox at t=0.
    """
    t = np.asarray(t, dtype=float)
    raan_dot, argp_dot, mean_dot = secular_rates(el, earth)
    m0 = _mean_from_true(el.nu0, el.e)
    ecc_anom = solve_kepler(m0 + mean_dot * t, el.e)
    nu = 2.0 * np.arctan2(
        math.sqrt(1.0 + el.e) * np.sin(0.5 * ecc_anom),
        math.sqrt(1.0 - el.e) * np.cos(0.5 * ecc_anom),
    )
    r = el.a * (1.0 - el.e * np.cos(ecc_anom))
    u = el.argp + argp_dot * t + nu
    sin_lat = math.sin(el.inc) * np.sin(u)
    lat = np.arcsin(np.clip(sin_lat, -1.0, 1.0))
    ra = el.raan + raan_dot * t + np.arctan2(np.sin(u) * math.cos(el.inc), np.cos(u))
    lon = wrap_angle(ra - earth.rotation_rate * t)
    return r, lat, lon


def walker_elements(el: OrbitElements, cfg: WalkerConfig) -> list[OrbitElements]:
    """Element sets of every satellite in a Walker t/p/f pattern.

    Plane m sits 2*pi*m/planes east in node; its satellites lead the
    reference by 2*pi*m*phasing/total in mean anomaly, with in-plane
    satellites equally spaced.
    """
    sats = []
    m0 = _mean_from_true(el.nu0, el.e)
    for m in range(cfg.planes):
        for l in range(cfg.per_plane):
            lead = TWO_PI * (m * cfg.phasing / cfg.total + l / cfg.per_plane)
            nu0 = true_from_mean(m0 + lead, el.e)
            sats.append(
                replace(
                    el,
                    raan=float(wrap_angle(el.raan + TWO_PI * m / cfg.planes)),
                    nu0=float(wrap_angle(nu0)),
                )
            )
    return sats


@dataclass(frozen=True)
class SimConfig:
    """Point-coverage simulation setup.

    Target points are (lat, lons): a single latitude with a list of
    longitudes, matching the engine's grid-at-latitude geometry.
    """

    elements: tuple[OrbitElements, ...]
    sensor: SensorSpec
    lat: float
    lons: np.ndarray
    window: float
    step: float = 10.0
    refine_tol: float = 0.1
    earth: EarthConstants = field(default=EARTH)

    def __post_init__(self) -> None:
        if self.step <= 0.0:
            raise ValueError("time step must be positive")
        if not self.refine_tol < self.step:
            raise ValueError("refinement tolerance must be below the step")


def _visibility_margin(sensor, r_t, lat_t, lon_t, r_s, lat_s, lon_s):
    """Signed visibility margin (>= 0 means visible), vectorized.

    Elevation mode: elevation minus the mask.  Boresight mode: the smaller
    of (half-cone minus the nadir cone angle) and the above-horizon
    elevation margin, both in radians.
    """
    cos_c = np.sin(lat_t) * np.sin(lat_s) + np.cos(lat_t) * np.cos(lat_s) * np.cos(
        lon_s - lon_t
    )
    cos_c = np.clip(cos_c, -1.0, 1.0)
    rho = np.sqrt(r_s * r_s + r_t * r_t - 2.0 * r_s * r_t * cos_c)
    sin_el = (r_s * cos_c - r_t) / rho
    elev = np.arcsin(np.clip(sin_el, -1.0, 1.0))
    if sensor.mode == "elevation":
        return elev - sensor.angle
    sin_c = np.sqrt(np.clip(1.0 - cos_c * cos_c, 0.0, 1.0))
    cone = np.arctan2(r_t * sin_c, r_s - r_t * cos_c)
    return np.minimum(sensor.angle - cone, elev)


class _SatStream:
    """Per-satellite visibility interval extraction for all target points."""

    def __init__(self, el: OrbitElements, cfg: SimConfig):
        self.el = el
        self.cfg = cfg
        self.r_t = geodetic_radius(cfg.lat, cfg.earth)

    def margin_at(self, t: np.ndarray, point_idx: np.ndarray) -> np.ndarray:
        r, lat_s, lon_s = propagate_j2(self.el, t, self.cfg.earth)
        lon_t = self.cfg.lons[point_idx]
        return _visibility_margin(
            self.cfg.sensor, self.r_t, self.cfg.lat, lon_t, r, lat_s, lon_s
        )

    def intervals(self, times: np.ndarray, block: int = 64, chunk: int = 32768):
        """(point, start, end) arrays of refined visibility intervals."""
        cfg = self.cfg
        n_pts = cfg.lons.size
        r, lat_s, lon_s = propagate_j2(self.el, times, cfg.earth)
        pts_out, starts_out, ends_out = [], [], []
        rise_pt, rise_g, fall_pt, fall_g = [], [], [], []
        init_vis = np.zeros(n_pts, dtype=bool)
        final_vis = np.zeros(n_pts, dtype=bool)
        for b0 in range(0, n_pts, block):
            b1 = min(b0 + block, n_pts)
            lon_t = cfg.lons[b0:b1, None]
            prev = None
            for c0 in range(0, times.size, chunk):
                c1 = min(c0 + chunk, times.size)
                vis = (
                    _visibility_margin(
                        cfg.sensor, self.r_t, cfg.lat, lon_t,
                        r[None, c0:c1], lat_s[None, c0:c1], lon_s[None, c0:c1],
                    )
                    >= 0.0
                )
                if prev is None:
                    init_vis[b0:b1] = vis[:, 0]
                else:
                    flip = vis[:, 0] != prev
                    rows = np.flatnonzero(flip)
                    for row in rows:
                        (rise_pt if vis[row, 0] else fall_pt).append(b0 + row)
                        (rise_g if vis[row, 0] else fall_g).append(c0)
                d = vis[:, 1:] != vis[:, :-1]
                rows, cols = np.nonzero(d)
                rising = vis[rows, cols + 1]
                rise_pt.extend((b0 + rows[rising]).tolist())
                rise_g.extend((c0 + cols[rising] + 1).tolist())
                fall_pt.extend((b0 + rows[~rising]).tolist())
                fall_g.extend((c0 + cols[~rising] + 1).tolist())
                prev = vis[:, -1]
            final_vis[b0:b1] = prev
        rise_pt_a = np.array(rise_pt, dtype=np.int64)
        fall_pt_a = np.array(fall_pt, dtype=np.int64)
        rise_t = self._refine(rise_pt_a, np.array(rise_g), times)
        fall_t = self._refine(fall_pt_a, np.array(fall_g), times)
        ro = np.lexsort((rise_t, rise_pt_a)) if rise_t.size else np.empty(0, np.int64)
        fo = np.lexsort((fall_t, fall_pt_a)) if fall_t.size else np.empty(0, np.int64)
        rp, rt = rise_pt_a[ro], rise_t[ro]
        fp, ft = fall_pt_a[fo], fall_t[fo]
        # Pair the boundaries per point: starts are window start (if
        # initially visible) plus rising edges; ends are falling edges
        # plus window end (if finally visible).
        window = cfg.window
        for p in range(n_pts):
            s_list = rt[np.searchsorted(rp, p) : np.searchsorted(rp, p, "right")].tolist()
            e_list = ft[np.searchsorted(fp, p) : np.searchsorted(fp, p, "right")].tolist()
            if init_vis[p]:
                s_list = [0.0] + s_list
            if final_vis[p]:
                e_list = e_list + [window]
            for s, e in zip(s_list, e_list):
                pts_out.append(p)
                starts_out.append(s)
                ends_out.append(e)
        return (
            np.array(pts_out, dtype=np.int64),
            np.array(starts_out),
            np.array(ends_out),
        )

    def _refine(self, pt: np.ndarray, g: np.ndarray, times: np.ndarray) -> np.ndarray:
        """Bisect each sign change down to the refinement tolerance."""
        if pt.size == 0:
            return np.empty(0)
        lo = times[g - 1].astype(float)
        hi = times[g].astype(float)
        n_iter = max(1, math.ceil(math.log2(self.cfg.step / self.cfg.refine_tol)))
        lo_vis = self.margin_at(lo, pt) >= 0.0
        for _ in range(n_iter):
            mid = 0.5 * (lo + hi)
            mid_vis = self.margin_at(mid, pt) >= 0.0
            take_lo = mid_vis == lo_vis
            lo = np.where(take_lo, mid, lo)
            hi = np.where(take_lo, hi, mid)
        return 0.5 * (lo + hi)


def simulate_access_table(cfg: SimConfig) -> AccessTable:
    """Run the time-stepped simulation and assemble the access table."""
    n_steps = int(math.floor(cfg.window / cfg.step))
    times = np.arange(n_steps + 1, dtype=float) * cfg.step
    if times[-1] < cfg.window - 1e-9:
        times = np.append(times, cfg.window)
    pts, starts, ends = [], [], []
    for el in cfg.elements:
        p, s, e = _SatStream(el, cfg).intervals(times)
        pts.append(p)
        starts.append(s)
        ends.append(e)
    point = np.concatenate(pts) if pts else np.empty(0, dtype=np.int64)
    start = np.concatenate(starts) if starts else np.empty(0)
    end = np.concatenate(ends) if ends else np.empty(0)
    order = np.lexsort((start, point))
    spacing = TWO_PI / cfg.lons.size if cfg.lons.size else 0.0
    grid = LongitudeGrid(spacing=spacing, lon=np.asarray(cfg.lons, dtype=float))
    crossings = _count_crossings(cfg)
    return AccessTable(
        point=point[order], start=start[order], end=end[order], grid=grid,
        window=cfg.window, merge_tol=cfg.refine_tol, pass_count=crossings,
    )


def _count_crossings(cfg: SimConfig) -> int:
    """Number of target-latitude crossings of all satellites in the window."""
    total = 0
    for el in cfg.elements:
        # Sample finely enough that no crossing pair is skipped.
        n = max(64, int(cfg.window / 30.0))
        t = np.linspace(0.0, cfg.window, n)
        _, lat_s, _ = propagate_j2(el, t, cfg.earth)
        s = np.sign(lat_s - cfg.lat)
        total += int(np.count_nonzero(s[1:] * s[:-1] < 0))
    return total


def simulate_coverage(cfg: SimConfig) -> RevisitReport:
    """Point-coverage revisit report, same gap conventions as the engine."""
    return revisit_stats(simulate_access_table(cfg))


def crossing_events(
    el: OrbitElements,
    lat: float,
    window: float,
    earth: EarthConstants = EARTH,
    step: float = 10.0,
    tol: float = 1e-4,
) -> list[tuple[float, float, bool]]:
    """Times, longitudes and directions of ground-track latitude crossings.

    Brute-force scan with bisection refinement; used to cross-check the
    analytical pass schedule.
    """
    n = int(math.floor(window / step))
    t = np.arange(n + 1, dtype=float) * step
    _, lat_s, _ = propagate_j2(el, t, earth)
    f = lat_s - lat
    idx = np.flatnonzero(f[:-1] * f[1:] < 0)
    events = []
    for i in idx:
        lo, hi = t[i], t[i + 1]
        f_lo = f[i]
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            _, lat_m, _ = propagate_j2(el, np.array([mid]), earth)
            f_m = float(lat_m[0]) - lat
            if (f_m < 0) == (f_lo < 0):
                lo, f_lo = mid, f_m
            else:
                hi = mid
        t_c = 0.5 * (lo + hi)
        _, lat_c, lon_c = propagate_j2(el, np.array([t_c]), earth)
        events.append((float(t_c), float(lon_c[0]), bool(f[i] < 0)))
    return events
