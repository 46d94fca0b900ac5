"""Latitude-crossing pass schedules for single satellites and constellations.

A "pass" is one crossing of the target latitude by one satellite's ground
track.  Under secular-J2 motion the crossings of each satellite form an
arithmetic comb: epochs advance by the nodal period and longitudes by the
ground-track shift per revolution.  Every crossing therefore lies on the
drift line

    lon(t) = lon_node0 + plane_offset + (shift / nodal_period) * t

which is how this module generates passes, in-plane phasing, and Walker
plane expansion consistently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .earth import EARTH, EarthConstants
from .errors import ConfigError
from .sensor import radius_at_latitude

TWO_PI = 2.0 * math.pi


def wrap_angle(x):
    """Wrap angle(s) to [-pi, pi)."""
    return (np.asarray(x) + math.pi) % TWO_PI - math.pi


@dataclass(frozen=True)
class OrbitElements:
    """Classical elements of one plane's reference satellite.

    a in km; angles in radians.  nu0 is the true anomaly at analysis start.
    """

    a: float
    e: float = 0.0
    inc: float = 0.0
    raan: float = 0.0
    argp: float = 0.0
    nu0: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.e < 1.0:
            raise ValueError("eccentricity must be in [0, 1)")
        if self.a * (1.0 - self.e) <= EARTH.polar_radius:
            raise ValueError("perigee must be above the Earth surface")
        if not 0.0 <= self.inc <= math.pi:
            raise ValueError("inclination must be in [0, pi]")


@dataclass(frozen=True)
class WalkerConfig:
    """Walker delta pattern t/p/f: total satellites, planes, phasing factor."""

    total: int = 1
    planes: int = 1
    phasing: int = 0

    def __post_init__(self) -> None:
        if self.total < 1 or self.planes < 1:
            raise ValueError("need at least one satellite and one plane")
        if self.total % self.planes != 0:
            raise ValueError("planes must divide the total satellite count")
        if not 0 <= self.phasing < self.planes:
            raise ValueError("phasing factor must be in [0, planes)")

    @property
    def per_plane(self) -> int:
        return self.total // self.planes


@dataclass(frozen=True)
class PlaneSpec:
    """One plane of a non-symmetric constellation.

    raan is absolute (rad); phases are each satellite's in-plane argument
    of latitude lead relative to the reference satellite (rad).
    """

    raan: float
    phases: tuple[float, ...] = (0.0,)


@dataclass(frozen=True)
class Pass:
    lon: float            # crossing longitude, rad in [-pi, pi)
    epoch: float          # s since analysis start
    ascending: bool
    plane_index: int = 0
    sat_index: int = 0


@dataclass(frozen=True)
class PassSet:
    """Time-ordered latitude crossings over the analysis window.

    Parallel arrays sorted by epoch.  The generator fields (branch node
    offsets and timing) are retained so constellation expansion can
    regenerate combs exactly instead of shifting finite sets.
    """

    lon: np.ndarray
    epoch: np.ndarray
    ascending: np.ndarray
    plane_index: np.ndarray
    sat_index: np.ndarray
    shift_per_rev: float
    nodal_period: float
    window: float
    # Generator state: longitude of each branch crossing extrapolated to
    # epoch 0 along the drift line, and the branch crossing time offsets
    # from the reference satellite's node passage.
    _branch_lon0: tuple[float, float] = field(default=(0.0, 0.0), repr=False)
    _branch_dt: tuple[float, float] = field(default=(0.0, 0.0), repr=False)
    _node_time: float = field(default=0.0, repr=False)

    def __len__(self) -> int:
        return int(self.lon.size)

    def passes(self):
        for k in range(len(self)):
            yield Pass(
                lon=float(self.lon[k]),
                epoch=float(self.epoch[k]),
                ascending=bool(self.ascending[k]),
                plane_index=int(self.plane_index[k]),
                sat_index=int(self.sat_index[k]),
            )


@dataclass(frozen=True)
class TrackSegment:
    """Ground-track samples around one latitude crossing.

    Offsets are relative to the crossing: lon_off in rad (includes the
    Earth-rotation accrual between samples), time_frac in revolutions
    (multiply by the nodal period for seconds).  lat is absolute.
    """

    u: np.ndarray          # argument of latitude at each sample, rad
    lat: np.ndarray        # geocentric sub-satellite latitude, rad
    lon_off: np.ndarray    # longitude offset from the crossing, rad
    time_frac: np.ndarray  # time offset from the crossing, revolutions
    ascending: bool


NODAL_FORM_SQUARED = "ratio_squared"   # correction with (Ra/p)^2, standard
NODAL_FORM_LINEAR = "ratio_linear"     # correction with (Ra/p)^1


def keplerian_period(a: float, earth: EarthConstants = EARTH) -> float:
    """Two-body orbital period, s."""
    if a <= 0.0:
        raise ValueError("semi-major axis must be positive")
    return TWO_PI * math.sqrt(a**3 / earth.mu)


def nodal_period(
    a: float,
    e: float,
    inc: float,
    earth: EarthConstants = EARTH,
    form: str = NODAL_FORM_SQUARED,
) -> float:
    """Time between successive ascending-node crossings under J2.

    ``form`` selects the power of the (equatorial radius / semilatus
    rectum) factor in the J2 correction.  The squared form is the standard
    secular expansion and is the one that reproduces the validation
    tables; the linear form is kept selectable for comparison.
    """
    pk = keplerian_period(a, earth)
    p = a * (1.0 - e * e)
    ratio = earth.equatorial_radius / p
    if form == NODAL_FORM_SQUARED:
        factor = ratio * ratio
    elif form == NODAL_FORM_LINEAR:
        factor = ratio
    else:
        raise ValueError(f"unknown nodal period form {form!r}")
    si2 = math.sin(inc) ** 2
    bracket = math.sqrt(1.0 - e * e) * (2.0 - 3.0 * si2) + (4.0 - 5.0 * si2)
    return pk / (1.0 + 0.75 * earth.j2 * factor * bracket)


def raan_drift_rate(
    a: float, e: float, inc: float, earth: EarthConstants = EARTH
) -> float:
    """Secular node drift rate due to J2 (with the J2^2 correction), rad/s.

    Negative for prograde orbits, positive for retrograde.
    """
    n = math.sqrt(earth.mu / a**3)
    p = a * (1.0 - e * e)
    ratio2 = (earth.equatorial_radius / p) ** 2
    ci = math.cos(inc)
    si2 = math.sin(inc) ** 2
    first = -1.5 * n * earth.j2 * ratio2 * ci
    second = (
        (3.0 / 32.0)
        * n
        * earth.j2_squared
        * ratio2
        * ratio2
        * ci
        * (12.0 - 4.0 * e * e - (80.0 + 5.0 * e * e) * si2)
    )
    return first + second


def ground_track_shift(p_n: float, raan_rate: float, earth: EarthConstants = EARTH) -> float:
    """Longitude displacement of successive node crossings, rad/rev.

    Negative (westward) for all LEO orbits: Earth rotation dominates.
    """
    if p_n <= 0.0:
        raise ValueError("nodal period must be positive")
    return p_n * (-earth.rotation_rate + raan_rate)


def _mean_from_true(nu: float, e: float) -> float:
    """Mean anomaly for true anomaly ``nu`` (rad, same revolution)."""
    ecc_anom = 2.0 * math.atan2(
        math.sqrt(1.0 - e) * math.sin(0.5 * nu),
        math.sqrt(1.0 + e) * math.cos(0.5 * nu),
    )
    return ecc_anom - e * math.sin(ecc_anom)


def time_fraction_from_node(el: OrbitElements, nu: float) -> float:
    """Fraction of a revolution from the ascending node to true anomaly nu.

    In [0, 1).  Uses the mean anomaly, so it is exact for eccentric orbits
    and reduces to (argp + nu) / 2pi for circular ones.
    """
    d_mean = _mean_from_true(nu, el.e) - _mean_from_true(-el.argp, el.e)
    return (d_mean % TWO_PI) / TWO_PI


def node_relative_ra(u, inc: float):
    """Right ascension of a track point relative to its ascending node."""
    return np.arctan2(np.sin(u) * math.cos(inc), np.cos(u))


def crossing_longitudes(el: OrbitElements, lat: float, shift: float) -> tuple[float, float]:
    """Earth-fixed longitudes of the first ascending/descending crossings.

    Convention: the reference satellite passes its ascending node at
    longitude ``raan`` (Greenwich aligned with the vernal equinox at the
    node passage); Earth rotation and node drift accrued between the node
    and the crossing are folded in through the per-revolution shift.
    """
    nu_asc, nu_desc, _, _ = radius_at_latitude(el, lat)
    out = []
    for nu in (nu_asc, nu_desc):
        u = el.argp + nu
        frac = time_fraction_from_node(el, nu)
        lon = el.raan + float(node_relative_ra(u, el.inc)) + frac * shift
        out.append(float(wrap_angle(lon)))
    return out[0], out[1]


def _comb_epochs(first: float, period: float, window: float) -> np.ndarray:
    """All epochs first + j*period (j integer) that land inside [0, window]."""
    j_lo = math.ceil(-first / period - 1e-12)
    j_hi = math.floor((window - first) / period + 1e-12)
    if j_hi < j_lo:
        return np.empty(0)
    return first + np.arange(j_lo, j_hi + 1) * period


def pass_series(
    el: OrbitElements,
    lat: float,
    shift: float,
    p_n: float,
    window: float,
) -> PassSet:
    """Latitude crossings of a single satellite over [0, window].

    The analysis clock starts at the reference satellite's ascending-node
    passage; a nonzero nu0 shifts every epoch so the satellite is at nu0
    at t=0.
    """
    if window <= 0.0:
        raise ValueError("analysis window must be positive")
    nu_asc, nu_desc, _, _ = radius_at_latitude(el, lat)
    node_time = -time_fraction_from_node(el, el.nu0) * p_n  # node passage, s
    lons, epochs, asc_flags = [], [], []
    branch_lon0, branch_dt = [], []
    for nu, is_asc in ((nu_asc, True), (nu_desc, False)):
        u = el.argp + nu
        dt = time_fraction_from_node(el, nu) * p_n
        # Drift line: lon(t) = raan + node-relative RA + shift * t / p_n.
        lon0 = el.raan + float(node_relative_ra(u, el.inc))
        t = _comb_epochs(node_time + dt, p_n, window)
        lons.append(lon0 + (t / p_n) * shift)
        epochs.append(t)
        asc_flags.append(np.full(t.shape, is_asc, dtype=bool))
        branch_lon0.append(lon0)
        branch_dt.append(node_time + dt)
    lon = wrap_angle(np.concatenate(lons))
    epoch = np.concatenate(epochs)
    asc = np.concatenate(asc_flags)
    order = np.argsort(epoch, kind="stable")
    zeros = np.zeros(lon.size, dtype=np.int64)
    return PassSet(
        lon=lon[order],
        epoch=epoch[order],
        ascending=asc[order],
        plane_index=zeros,
        sat_index=zeros.copy(),
        shift_per_rev=shift,
        nodal_period=p_n,
        window=window,
        _branch_lon0=(float(branch_lon0[0]), float(branch_lon0[1])),
        _branch_dt=(float(branch_dt[0]), float(branch_dt[1])),
        _node_time=float(node_time),
    )


def _expand(
    base: PassSet,
    offsets: list[tuple[float, float, int, int]],
) -> PassSet:
    """Regenerate the pass combs for satellites at (raan_offset, phase_lead).

    Each entry is (raan_offset_rad, phase_lead_rad, plane_index, sat_index).
    A satellite leading the reference by ``phase_lead`` in argument of
    latitude crosses the latitude earlier by the matching fraction of the
    nodal period; its crossing longitudes follow the shifted drift line.
    """
    p_n, shift, window = base.nodal_period, base.shift_per_rev, base.window
    lons, epochs, ascs, planes, sats = [], [], [], [], []
    for raan_off, lead, plane_idx, sat_idx in offsets:
        dt_sat = -(lead / TWO_PI) * p_n
        for b, is_asc in ((0, True), (1, False)):
            lon0 = base._branch_lon0[b] + raan_off
            t = _comb_epochs(base._branch_dt[b] + dt_sat, p_n, window)
            lons.append(lon0 + (t / p_n) * shift)
            epochs.append(t)
            ascs.append(np.full(t.shape, is_asc, dtype=bool))
            planes.append(np.full(t.shape, plane_idx, dtype=np.int64))
            sats.append(np.full(t.shape, sat_idx, dtype=np.int64))
    epoch = np.concatenate(epochs)
    order = np.argsort(epoch, kind="stable")
    return replace(
        base,
        lon=wrap_angle(np.concatenate(lons))[order],
        epoch=epoch[order],
        ascending=np.concatenate(ascs)[order],
        plane_index=np.concatenate(planes)[order],
        sat_index=np.concatenate(sats)[order],
    )


def walker_expand(base: PassSet, cfg: WalkerConfig) -> PassSet:
    """Expand a single-satellite pass set to a Walker t/p/f pattern.

    Plane m is separated by 2*pi*m/planes in node longitude and its
    satellites lead the reference by 2*pi*m*phasing/total in phase;
    in-plane satellites are equally spaced.
    """
    if cfg.total == 1:
        return base
    offsets = []
    sat_idx = 0
    for m in range(cfg.planes):
        raan_off = TWO_PI * m / cfg.planes
        for l in range(cfg.per_plane):
            lead = TWO_PI * (m * cfg.phasing / cfg.total + l / cfg.per_plane)
            offsets.append((raan_off, lead, m, sat_idx))
            sat_idx += 1
    return _expand(base, offsets)


def custom_expand(base: PassSet, planes: list[PlaneSpec]) -> PassSet:
    """Expand to a non-symmetric constellation of explicit planes.

    Plane RAANs are absolute; the base satellite's own plane is replaced
    by the provided list.
    """
    if not planes:
        raise ConfigError("need at least one plane spec")
    offsets = []
    sat_idx = 0
    base_raan = None
    for m, spec in enumerate(planes):
        if base_raan is None:
            base_raan = spec.raan
        for lead in spec.phases:
            offsets.append((spec.raan - base_raan, lead, m, sat_idx))
            sat_idx += 1
    return _expand(base, offsets)


def ground_track_segment(
    el: OrbitElements,
    lat: float,
    shift: float,
    n_points: int,
    reach: float,
    ascending: bool = True,
    pad: float = 0.1,
) -> TrackSegment:
    """Sample the ground track around one latitude crossing.

    The span covers every point from which a footprint of latitude
    half-height ``reach`` can still touch the target latitude, padded by
    ``pad`` and clamped at the track apex.  Longitude offsets include the
    Earth-rotation accrual between samples.
    """
    if n_points < 3:
        raise ValueError("need at least 3 segment samples")
    sin_i = math.sin(el.inc)
    span = (1.0 + pad) * reach

    def u_at(lat_bound: float) -> float:
        s = min(1.0, max(-1.0, math.sin(lat_bound) / sin_i))
        return math.asin(s)

    u_lo, u_hi = u_at(lat - span), u_at(lat + span)
    u_c = u_at(lat)
    if not ascending:
        u_lo, u_hi = math.pi - u_hi, math.pi - u_lo
        u_c = math.pi - u_c
    # Split the samples at the crossing so the crossing itself is sampled
    # exactly (odd n_points gives equal halves).
    n_lo = (n_points - 1) // 2
    u = np.concatenate(
        [
            np.linspace(u_lo, u_c, n_lo + 1),
            np.linspace(u_c, u_hi, n_points - n_lo)[1:],
        ]
    )
    lat_k = np.arcsin(sin_i * np.sin(u))
    d_ra = wrap_angle(node_relative_ra(u, el.inc) - node_relative_ra(u_c, el.inc))
    nu_c = u_c - el.argp
    frac_c = time_fraction_from_node(el, nu_c)
    frac = np.array([time_fraction_from_node(el, uk - el.argp) for uk in u])
    d_frac = wrap_angle((frac - frac_c) * TWO_PI) / TWO_PI
    lon_off = d_ra + d_frac * shift
    return TrackSegment(
        u=u, lat=lat_k, lon_off=np.asarray(lon_off), time_frac=d_frac,
        ascending=ascending,
    )
