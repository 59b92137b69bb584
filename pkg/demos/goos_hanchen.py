"""The lateral shift of a totally reflected beam.

Run with ``python demos/goos_hanchen.py``.
"""
import math

import numpy as np

from evanescent import goos
from evanescent.eikonal import MediumConfig
from evanescent.field import reflection_phase

cfg = MediumConfig(1.5, math.pi / 3, k=100.0)
r = goos.shift(cfg)
print(f"d delta / d theta = {r.d_delta:.5f}")
print(f"X_bar = {r.X_bar:.5f}, D = {r.D:.5f}  ({abs(r.D) / r.wavelength:.3f} wavelengths)")

# The shift grows without bound as the critical angle is approached,
# like (theta - theta_crit)^(-1/2).
tc = cfg.theta_crit
print("\ntheta - theta_crit    |D|/lambda    |D| sqrt(theta - theta_crit)")
for e in (1e-1, 1e-2, 1e-3, 1e-4, 1e-5):
    d = abs(goos.lateral_D(cfg.replace(theta_i=tc + e)))
    print(f"{e:16.0e}   {d / r.wavelength:11.3f}   {d * math.sqrt(e):.5f}")

# A Gaussian beam built from plane waves, each reflected with its own
# phase: the reflected envelope comes back displaced by |X_bar|.
b = goos.beam_shift(cfg)
print(f"\nmeasured lag {b.measured:.5f} (refined {b.refined:.5f}), predicted {b.predicted:.5f}, cell {b.dx:.5f}")

# A scan across the whole range of total reflection.
print("\ntheta_i   delta     X_bar/lambda")
for th in np.linspace(tc + 0.01, math.pi / 2 - 0.01, 6):
    c = cfg.replace(theta_i=float(th))
    print(f"{th:6.3f}  {reflection_phase(c):7.4f}  {goos.shift(c).X_bar / c.wavelength:9.3f}")
