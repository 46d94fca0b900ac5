"""Revisit metrics for a single Earth-observation satellite.

Walks the full chain for one configuration: orbit and sensor geometry at
the target latitude, the latitude-crossing pass schedule, and the revisit
statistics over a 60-day window.
"""
import math

import revisit as rv
from revisit.engine import EngineSettings, analyze
from revisit.passes import ground_track_shift, nodal_period, raan_drift_rate
from revisit.sensor import radius_at_latitude, resolve_footprint

# A 500 km sun-synchronous imager with a 30 deg minimum-elevation
# constraint, watching latitude 40 N.
alt_km = 500.0
lat = math.radians(40.0)
a = rv.EARTH.equatorial_radius + alt_km
inc = rv.sso_inclination(a)
el = rv.OrbitElements(a=a, inc=inc)
sensor = rv.SensorSpec.elevation(math.radians(30.0))

print(f"orbit: {alt_km:.0f} km sun-synchronous, inclination {math.degrees(inc):.2f} deg")

# Geometry at the target latitude: how much longitude one pass can see.
_, _, r_asc, _ = radius_at_latitude(el, lat)
fp = resolve_footprint(sensor, r_asc, lat)
print(f"footprint at 40 deg: ground range {math.degrees(fp.ground_range):.2f} deg, "
      f"longitude half-width {math.degrees(fp.lon_half_width):.2f} deg")

# Per-revolution drift of the ground track.
p_n = nodal_period(a, el.e, inc)
shift = ground_track_shift(p_n, raan_drift_rate(a, el.e, inc))
print(f"nodal period {p_n:.1f} s, track shift {math.degrees(shift):.2f} deg/rev")

# Full 60-day analysis at the default 0.1 deg grid.
report = analyze(el, sensor, lat, settings=EngineSettings())
print(f"passes in window: {report.pass_count}")
print(f"max revisit time: {report.mrt_hours:.2f} h")
print(f"avg revisit time: {report.art_hours:.2f} h")
print(f"coverage: {report.coverage_fraction:.1%}, "
      f"full coverage after {report.time_to_full_coverage_hours:.1f} h")
