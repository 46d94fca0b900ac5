import math

import pytest

import revisit as rv
from revisit.engine import EngineSettings


def make_orbit(alt_km: float, inc_deg: float, **kw) -> rv.OrbitElements:
    return rv.OrbitElements(
        a=rv.EARTH.equatorial_radius + alt_km, inc=math.radians(inc_deg), **kw
    )


@pytest.fixture(scope="session")
def fast_settings() -> EngineSettings:
    """Coarse, short-window settings for structure-level tests."""
    return EngineSettings(window=5 * 86400.0, grid_res=math.radians(1.0))
