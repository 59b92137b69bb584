"""Independent reference values used only for verification.

Nothing in the computation modules calls into this file.

The Airy oracle evaluates the steepest-descent form of the Airy integral
in Bessel normalization,

    Ai(z)  =  (1/pi) sqrt(z/3) K_{1/3}(zeta)
    Ai'(z) = -(z/(pi sqrt 3)) K_{2/3}(zeta),      zeta = (2/3) z^{3/2},

    K_nu(zeta) = sqrt(pi) (zeta/2)^nu / Gamma(nu + 1/2)
                 * int_1^inf e^{-zeta s} (s^2 - 1)^{nu - 1/2} ds,

with the ``s`` ray rotated off the real axis so that ``zeta (s - 1)``
stays close to real and positive.  The exponential ``e^{-zeta}`` comes
out in closed form, so the quadrature is well conditioned even where Ai
is exponentially small.  Phases beyond ``5 pi/6`` use the rotation
identity ``Ai(-w) = e^{i pi/3} Ai(w e^{i pi/3}) + e^{-i pi/3} Ai(w e^{-i pi/3})``.
"""
from __future__ import annotations

import math
import warnings

import numpy as np
from scipy import integrate, special

def _cquad(f, a: float, b: float) -> complex:
    # a loose pass fixes the absolute floor so that a part which vanishes by
    # symmetry does not chase an unreachable relative tolerance
    # roundoff notices near the floor are expected; accuracy is checked
    # against an arbitrary-precision library in the test suite
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        rough = abs(integrate.quad(lambda x: abs(f(x)), a, b, limit=200)[0])
        floor = 2e-15 * rough
        re = integrate.quad(lambda x: f(x).real, a, b, epsabs=floor, epsrel=1e-12, limit=500)[0]
        im = integrate.quad(lambda x: f(x).imag, a, b, epsabs=floor, epsrel=1e-12, limit=500)[0]
    return complex(re, im)


def _bessel_k_scaled(nu: float, a: float, phz: float) -> complex:
    """``e^{zeta} K_nu(zeta)`` for ``zeta = a e^{i phz}``, ``|phz| < 5pi/4``."""
    zeta = a * complex(math.cos(phz), math.sin(phz))
    phi = phz * 2.0 / 3.0
    d = complex(math.cos(phi), -math.sin(phi))
    p = nu - 0.5
    # s - 1 = r d with r = x**6 removes the algebraic endpoint singularity
    branch = complex(math.cos(-p * phi), math.sin(-p * phi))

    def f(x):
        r = x**6
        s1 = r * d
        return np.exp(-zeta * s1) * r**p * branch * (2.0 + s1) ** p * d * 6.0 * x**5

    rate = a * math.cos(phz - phi)
    xmax = (45.0 / rate) ** (1.0 / 6.0)
    integral = _cquad(f, 0.0, xmax)
    pref = math.sqrt(math.pi) * (a / 2.0) ** nu / special.gamma(nu + 0.5)
    return pref * complex(math.cos(nu * phz), math.sin(nu * phz)) * integral


def _direct(z: complex) -> tuple[complex, complex]:
    r = abs(z)
    th = math.atan2(z.imag, z.real)
    phz = 1.5 * th
    a = (2.0 / 3.0) * r**1.5
    decay = np.exp(-a * complex(math.cos(phz), math.sin(phz)))
    sqz = math.sqrt(r) * complex(math.cos(th / 2), math.sin(th / 2))
    ai = sqz / math.sqrt(3.0) / math.pi * decay * _bessel_k_scaled(1.0 / 3.0, a, phz)
    aip = -z / (math.pi * math.sqrt(3.0)) * decay * _bessel_k_scaled(2.0 / 3.0, a, phz)
    return ai, aip


def _contour_rays(z: complex) -> tuple[complex, complex]:
    """Airy integral ``(1/2 pi i) int exp(t^3/3 - z t) dt`` along ``ph t = -pi/3 -> +pi/3``."""
    out_ai = 0j
    out_aip = 0j
    for sgn in (1.0, -1.0):
        e = complex(math.cos(math.pi / 3), sgn * math.sin(math.pi / 3))

        def f(r, e=e):
            return np.exp(-r**3 / 3.0 - z * r * e) * e

        def g(r, e=e):
            return -r * e * np.exp(-r**3 / 3.0 - z * r * e) * e

        out_ai += sgn * _cquad(f, 0.0, 12.0)
        out_aip += sgn * _cquad(g, 0.0, 12.0)
    return out_ai / (2j * math.pi), out_aip / (2j * math.pi)


def airy_quadrature(z) -> tuple[complex, complex]:
    """``(Ai(z), Ai'(z))`` by contour quadrature."""
    z = complex(z)
    if abs(z) <= 1.0:
        return _contour_rays(z)
    if abs(math.atan2(z.imag, z.real)) <= 5.0 * math.pi / 6.0:
        return _direct(z)
    w = -z
    e = complex(math.cos(math.pi / 3), math.sin(math.pi / 3))
    a1, d1 = _direct(w * e)
    a2, d2 = _direct(w / e)
    ai = e * a1 + a2 / e
    aip = -(e * e * d1 + d2 / (e * e))
    return ai, aip


def ai_quadrature(z) -> complex:
    return airy_quadrature(z)[0]


def ai_prime_quadrature(z) -> complex:
    return airy_quadrature(z)[1]


def ai_power_series_at_zero() -> tuple[float, float]:
    """``Ai(0) = 3^{-2/3}/Gamma(2/3)`` and ``Ai'(0) = -3^{-1/3}/Gamma(1/3)``."""
    return 3.0 ** (-2.0 / 3.0) / special.gamma(2.0 / 3.0), -(3.0 ** (-1.0 / 3.0)) / special.gamma(1.0 / 3.0)


def lambda0_exponential_integral(z) -> complex:
    """``Lambda_0(z) = z e^z E_1(z)`` on the principal branch."""
    z = complex(z)
    return z * np.exp(z) * special.exp1(z)

