"""Maximum revisit time versus target latitude for one sun-synchronous orbit.

The footprint widens in longitude toward the poles (meridians converge),
so the revisit generally improves at high latitudes; in between, the
near-repeat structure of the ground track makes the curve jagged.
Writes latitude_profile.csv and, when matplotlib is available, a PNG.
"""
import csv
import math

import revisit as rv
from revisit.engine import analyze

a = rv.EARTH.equatorial_radius + 500.0
el = rv.OrbitElements(a=a, inc=rv.sso_inclination(a))
sensor = rv.SensorSpec.elevation(math.radians(30.0))

rows = []
for lat_deg in range(0, 81, 5):
    rep = analyze(el, sensor, math.radians(lat_deg))
    rows.append((lat_deg, rep.mrt_hours, rep.art_hours))
    print(f"lat {lat_deg:3d} deg: MRT {rep.mrt_hours:7.2f} h, ART {rep.art_hours:6.2f} h")

with open("latitude_profile.csv", "w", newline="") as fh:
    w = csv.writer(fh)
    w.writerow(["lat_deg", "mrt_h", "art_h"])
    w.writerows(rows)
print("wrote latitude_profile.csv")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    lats, mrt, art = zip(*rows)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(lats, mrt, "o-", label="max revisit")
    ax.plot(lats, art, "s--", label="avg revisit")
    ax.set_xlabel("target latitude [deg]")
    ax.set_ylabel("revisit time [h]")
    ax.set_title("500 km sun-synchronous orbit, 30 deg elevation mask")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig("latitude_profile.png", dpi=150)
    print("wrote latitude_profile.png")
except ImportError:
    print("matplotlib not installed; skipped the plot")
