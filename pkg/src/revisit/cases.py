"""Case and sweep configuration, execution, and CSV row assembly.

Degrees and kilometres at this boundary; radians inside.  A case is a
single (orbit, sensor, latitude, constellation) analysis; a sweep varies
one or two case fields over ranges and yields one CSV row per cell.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, replace
from typing import Any

import numpy as np

from .earth import EARTH, sso_inclination
from .engine import EngineSettings, analyze
from .errors import ConfigError, RevisitError
from .passes import NODAL_FORM_SQUARED, OrbitElements, WalkerConfig
from .sensor import SensorSpec

CSV_COLUMNS = (
    "case_id", "alt_km", "inc_deg", "ecc", "lat_deg", "sensor_mode",
    "sensor_deg", "t", "p", "f", "window_days", "mrt_h", "art_h",
    "coverage_frac", "ttc_h", "pass_count", "error",
)

SWEEPABLE_FIELDS = (
    "altitude_km", "inclination_deg", "boresight_deg", "elevation_deg",
    "latitude_deg", "window_days",
)

WINDOW_EXCEEDED = "window_exceeded"


@dataclass(frozen=True)
class CaseConfig:
    """One analysis case, in user units.

    Exactly one of inclination_deg / sso and exactly one of boresight_deg /
    elevation_deg must be given.  Altitude is measured above the equatorial
    radius; semi_major_axis_km may be given instead.
    """

    altitude_km: float | None = None
    semi_major_axis_km: float | None = None
    eccentricity: float = 0.0
    inclination_deg: float | None = None
    sso: bool = False
    boresight_deg: float | None = None
    elevation_deg: float | None = None
    latitude_deg: float = 0.0
    walker: tuple[int, int, int] = (1, 1, 0)
    raan_deg: float = 0.0
    argp_deg: float = 0.0
    nu0_deg: float = 0.0
    window_days: float = 60.0
    grid_res_deg: float = 0.1
    segment_samples: int = 1000
    nodal_form: str = NODAL_FORM_SQUARED

    def validate(self) -> None:
        if (self.altitude_km is None) == (self.semi_major_axis_km is None):
            raise ConfigError("give exactly one of altitude_km / semi_major_axis_km")
        if self.sso == (self.inclination_deg is not None):
            raise ConfigError("give exactly one of inclination_deg / sso")
        if (self.boresight_deg is None) == (self.elevation_deg is None):
            raise ConfigError("give exactly one of boresight_deg / elevation_deg")
        if not -80.0 <= self.latitude_deg <= 80.0:
            raise ConfigError("target latitude limited to [-80, 80] deg")
        if self.window_days <= 0.0:
            raise ConfigError("window_days must be positive")
        t, p, f = self.walker
        WalkerConfig(t, p, f)  # raises on inconsistency


@dataclass(frozen=True)
class ResolvedCase:
    elements: OrbitElements
    sensor: SensorSpec
    lat: float
    walker: WalkerConfig
    settings: EngineSettings
    inclination_deg: float
    altitude_km: float


def resolve_case(cfg: CaseConfig) -> ResolvedCase:
    """Validate and convert a case config to engine inputs."""
    cfg.validate()
    if cfg.semi_major_axis_km is not None:
        a = cfg.semi_major_axis_km
    else:
        a = EARTH.equatorial_radius + float(cfg.altitude_km)
    if cfg.sso:
        inc = sso_inclination(a, cfg.eccentricity)
    else:
        inc = math.radians(float(cfg.inclination_deg))
    try:
        elements = OrbitElements(
            a=a, e=cfg.eccentricity, inc=inc,
            raan=math.radians(cfg.raan_deg),
            argp=math.radians(cfg.argp_deg),
            nu0=math.radians(cfg.nu0_deg),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.boresight_deg is not None:
        sensor = SensorSpec.boresight(math.radians(cfg.boresight_deg))
    else:
        sensor = SensorSpec.elevation(math.radians(cfg.elevation_deg))
    settings = EngineSettings(
        window=cfg.window_days * 86400.0,
        grid_res=math.radians(cfg.grid_res_deg),
        segment_samples=cfg.segment_samples,
        nodal_form=cfg.nodal_form,
    )
    t, p, f = cfg.walker
    return ResolvedCase(
        elements=elements,
        sensor=sensor,
        lat=math.radians(cfg.latitude_deg),
        walker=WalkerConfig(t, p, f),
        settings=settings,
        inclination_deg=math.degrees(inc),
        altitude_km=a - EARTH.equatorial_radius,
    )


def run_case(cfg: CaseConfig):
    """Run the semi-analytical chain for one case."""
    rc = resolve_case(cfg)
    return analyze(rc.elements, rc.sensor, rc.lat, walker=rc.walker, settings=rc.settings)


def case_from_dict(data: dict[str, Any]) -> CaseConfig:
    """Build a CaseConfig from a JSON-style dict (e.g. a config file)."""
    known = {f.name for f in fields(CaseConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown case fields: {sorted(unknown)}")
    if "walker" in data:
        w = data["walker"]
        if isinstance(w, str):
            data = {**data, "walker": parse_walker(w)}
        elif isinstance(w, (list, tuple)):
            data = {**data, "walker": tuple(int(x) for x in w)}
    return CaseConfig(**data)


def parse_walker(text: str) -> tuple[int, int, int]:
    """Parse 't/p/f' Walker notation."""
    try:
        t, p, f = (int(x) for x in text.split("/"))
    except ValueError as exc:
        raise ConfigError(f"walker must look like 't/p/f', got {text!r}") from exc
    return t, p, f


@dataclass(frozen=True)
class SweepSpec:
    """One- or two-parameter sweep over a base case.

    axes maps a sweepable field name to (start, stop, step); stop is
    inclusive up to floating-point slack.
    """

    base: CaseConfig
    axes: dict[str, tuple[float, float, float]] = field(default_factory=dict)

    def validate(self) -> None:
        if not 1 <= len(self.axes) <= 2:
            raise ConfigError("sweep needs one or two axes")
        for name, (lo, hi, step) in self.axes.items():
            if name not in SWEEPABLE_FIELDS:
                raise ConfigError(
                    f"cannot sweep {name!r}; choose from {SWEEPABLE_FIELDS}"
                )
            if step <= 0.0 or hi < lo:
                raise ConfigError(f"bad range for {name}: ({lo}, {hi}, {step})")

    def axis_values(self, name: str) -> np.ndarray:
        lo, hi, step = self.axes[name]
        n = int(math.floor((hi - lo) / step + 1e-9)) + 1
        return lo + step * np.arange(n)

    def cells(self) -> list[CaseConfig]:
        """Cartesian-product cases in row-major order of the axes."""
        self.validate()
        names = list(self.axes)
        grids = [self.axis_values(n) for n in names]
        out = []
        if len(names) == 1:
            for v in grids[0]:
                out.append(replace(self.base, **{names[0]: float(v)}))
        else:
            for v0 in grids[0]:
                for v1 in grids[1]:
                    out.append(
                        replace(self.base, **{names[0]: float(v0), names[1]: float(v1)})
                    )
        return out


def sweep_from_dict(data: dict[str, Any]) -> SweepSpec:
    case_data = dict(data.get("case", {}))
    axes_data = data.get("sweep", {})
    axes = {}
    for name, rng in axes_data.items():
        if isinstance(rng, dict):
            axes[name] = (float(rng["min"]), float(rng["max"]), float(rng["step"]))
        else:
            lo, hi, step = rng
            axes[name] = (float(lo), float(hi), float(step))
        case_data.setdefault(name, None)
    return SweepSpec(base=case_from_dict(case_data), axes=axes)


def _fmt(value: float | None, digits: int = 6) -> str:
    return "" if value is None else f"{value:.{digits}f}"


def case_row(case_id: int, cfg: CaseConfig) -> dict[str, str]:
    """Run one sweep cell and format its CSV row.

    Window-exceeded cells carry the sentinel in the error column and empty
    metric cells; configuration errors are recorded per cell so the sweep
    keeps going.
    """
    row = dict.fromkeys(CSV_COLUMNS, "")
    row["case_id"] = str(case_id)
    row["ecc"] = _fmt(cfg.eccentricity, 4)
    row["lat_deg"] = _fmt(cfg.latitude_deg, 3)
    t, p, f = cfg.walker
    row["t"], row["p"], row["f"] = str(t), str(p), str(f)
    row["window_days"] = _fmt(cfg.window_days, 3)
    if cfg.boresight_deg is not None:
        row["sensor_mode"] = "boresight"
        row["sensor_deg"] = _fmt(cfg.boresight_deg, 3)
    elif cfg.elevation_deg is not None:
        row["sensor_mode"] = "elevation"
        row["sensor_deg"] = _fmt(cfg.elevation_deg, 3)
    try:
        rc = resolve_case(cfg)
        row["alt_km"] = _fmt(rc.altitude_km, 3)
        row["inc_deg"] = _fmt(rc.inclination_deg, 4)
        report = analyze(rc.elements, rc.sensor, rc.lat, walker=rc.walker, settings=rc.settings)
        row["coverage_frac"] = _fmt(report.coverage_fraction)
        row["pass_count"] = str(report.pass_count)
        if report.window_exceeded:
            row["error"] = WINDOW_EXCEEDED
        else:
            row["mrt_h"] = _fmt(report.mrt_hours)
            row["art_h"] = _fmt(report.art_hours)
            row["ttc_h"] = _fmt(report.time_to_full_coverage_hours)
    except RevisitError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _cell_worker(args: tuple[int, CaseConfig]) -> dict[str, str]:
    return case_row(*args)


def default_workers() -> int:
    env = os.environ.get("REVISIT_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_sweep(spec: SweepSpec, max_workers: int | None = None) -> list[dict[str, str]]:
    """Run every sweep cell; rows are returned in sweep-index order.

    Cells are independent and fan out over processes; REVISIT_WORKERS
    overrides the worker count (1 disables multiprocessing).
    """
    cells = spec.cells()
    jobs = list(enumerate(cells))
    workers = max_workers if max_workers is not None else default_workers()
    workers = max(1, min(workers, len(jobs)))
    if workers == 1:
        return [case_row(i, c) for i, c in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_cell_worker, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def rows_to_csv(rows: list[dict[str, str]]) -> str:
    """Render rows with the stable column schema; byte-deterministic."""
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(row[c] for c in CSV_COLUMNS))
    return "\n".join(lines) + "\n"
