"""The field on both sides of a totally reflecting interface.

Glass (n = 1.5) fills y > 0, vacuum y < 0; light arrives at 60 degrees,
beyond the critical angle of about 41.8 degrees.
Run with ``python demos/total_reflection_field.py``.
"""
import math

import numpy as np

from evanescent import eikonal, field, transport
from evanescent.eikonal import MediumConfig
from evanescent.profiles import ConstantProfile, GaussianProfile

cfg = MediumConfig(1.5, math.pi / 3, k=100.0)
lam = cfg.wavelength
print(f"critical angle {math.degrees(cfg.theta_crit):.2f} deg, wavelength {lam:.4f}")

# The phase change on reflection, and the same number from the Fresnel
# coefficient.
print("delta         ", field.reflection_phase(cfg))
print("Fresnel       ", field.fresnel_phase_oracle(cfg))

# The splitting function v changes sign at the interface, and with it
# the character of the eikonal system.
for y in (1.0, 0.0, -1.0):
    print(f"y = {y:+.0f}: v = {eikonal.v_field(cfg, y):+.4f}, {eikonal.classify_point(cfg, 0.0, y).value}")

# Transport coefficients: alpha beta = tan^2 above, negative below.
co = transport.coefficients(cfg)
print("alpha_I beta_I", co.alpha_I * co.beta_I, " alpha_S beta_S", co.alpha_S * co.beta_S)

# A plane wave: the shadow field decays like exp(k kappa y).
y = np.linspace(-2 * lam, -0.01 * lam, 6)
psi = field.shadow_field(cfg, ConstantProfile(), np.zeros_like(y), y)
print("\n|psi_S| along y:", np.abs(psi).round(5))
print("decay length   ", 1 / (cfg.k * cfg.kappa), "=", 1 / (cfg.k * cfg.kappa) / lam, "wavelengths")

# A beam with a Gaussian wavefront: the two sides agree on the interface,
# linearly in the distance from it.
beam = GaussianProfile(0.0, 2 * lam)
x = np.linspace(-5 * lam, 5 * lam, 100)
rep = field.boundary_match(cfg, beam, x)
for e, m in zip(rep.eps, rep.value_mismatch):
    print(f"eps = {e:.0e} lambda: max |psi_I - psi_S| = {m:.2e}")

# A coarse map, in wavelengths, of |psi|.
grid = field.sample_field(cfg, beam, np.linspace(-3, 3, 13) * lam, np.linspace(-1, 1, 8) * lam)
print("\n|psi| (rows: y from -1 to 1 wavelength)")
print(np.abs(grid.psi).round(2))

# Near grazing incidence the reflected wave merges with the incident one.
graze = MediumConfig(1.5, math.pi / 2 - 1e-9, 100.0)
w = field.grazing_reflected_weight(graze, ConstantProfile(), x, np.linspace(0.01, 1, 20))
print("\ngrazing: distance from a single travelling wave", w)
