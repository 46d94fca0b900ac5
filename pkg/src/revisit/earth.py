"""Earth constants and oblate-spheroid geometry.

All angles are radians and all lengths kilometres unless a name says
otherwise.  Degrees appear only at I/O boundaries (CLI, demos).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import SunSyncInfeasibleError

# Mean sun-synchronous node drift: one full revolution per tropical year.
TROPICAL_YEAR_DAYS = 365.2421897
SUN_SYNC_RATE = 2.0 * math.pi / (TROPICAL_YEAR_DAYS * 86400.0)  # rad/s


@dataclass(frozen=True)
class EarthConstants:
    """WGS-84 ellipsoid with EGM96 J2.

    The spheroid is described by its equatorial and polar radii; the
    rotation rate is the sidereal rate.
    """

    equatorial_radius: float = 6378.137          # km
    polar_radius: float = 6356.7523142           # km
    rotation_rate: float = 7.2921158553e-5       # rad/s
    mu: float = 398600.4418                      # km^3/s^2
    j2: float = 1.08262668e-3

    def __post_init__(self) -> None:
        if not (self.equatorial_radius > self.polar_radius > 0.0):
            raise ValueError("require equatorial_radius > polar_radius > 0")
        if self.rotation_rate <= 0.0 or self.mu <= 0.0:
            raise ValueError("rotation_rate and mu must be positive")
        # j2 = 0 is allowed so the unperturbed limit stays expressible.
        if not (0.0 <= self.j2 < 0.01):
            raise ValueError("j2 outside plausible range [0, 0.01)")

    @property
    def j2_squared(self) -> float:
        return self.j2 * self.j2


EARTH = EarthConstants()


def geodetic_radius(lat: float, earth: EarthConstants = EARTH) -> float:
    """Radius of the oblate spheroid at latitude ``lat``.

    Reduces to the equatorial radius at lat=0 and the polar radius at the
    poles; monotonically non-increasing in |lat|.
    """
    ra, rb = earth.equatorial_radius, earth.polar_radius
    c, s = math.cos(lat), math.sin(lat)
    num = (ra * ra * c) ** 2 + (rb * rb * s) ** 2
    den = (ra * c) ** 2 + (rb * s) ** 2
    return math.sqrt(num / den)


def sso_inclination(a: float, e: float = 0.0, earth: EarthConstants = EARTH) -> float:
    """Inclination giving a sun-synchronous node drift for the orbit (a, e).

    Inverts the J2 node-drift rate over the retrograde bracket (90, 180) deg.
    Raises SunSyncInfeasibleError when the orbit is too large (or too
    eccentric) for any inclination to produce the required drift.
    """
    # Import here to avoid a circular import: passes.py needs earth.py.
    from .passes import raan_drift_rate

    def residual(inc: float) -> float:
        return raan_drift_rate(a, e, inc, earth) - SUN_SYNC_RATE

    lo, hi = math.pi / 2.0 + 1e-9, math.pi - 1e-9
    r_lo, r_hi = residual(lo), residual(hi)
    if r_lo * r_hi > 0.0:
        raise SunSyncInfeasibleError(
            f"no sun-synchronous inclination for a={a:.1f} km, e={e:.4f}"
        )
    return float(brentq(residual, lo, hi, xtol=1e-12, rtol=8.9e-16))
