"""Leading-order transport system for linear wavefronts.

With ``u`` and ``v`` from :mod:`evanescent.eikonal` the transport pair
for ``(g0, h0)`` reduces in both media to::

    g0_y + beta  y^{1/3}  h0_x =  g0 / (6y)
    h0_y + alpha y^{-1/3} g0_x = -h0 / (6y)

(``y^{1/3}`` is the real cube root, negative below the interface).  The
product ``alpha beta`` is ``tan^2(theta) > 0`` above the interface
(hyperbolic, characteristics ``x pm y tan(theta) = const``) and
``-n^2 sin^2 / kappa^2 < 0`` below it (elliptic).

Shadow solution sign: with ``c = sqrt(-alpha_S beta_S)`` the pair
``g0 = (-y)^{1/6} [f1(x + icy) + f2(x - icy)]``,
``h0 = -i sqrt(-alpha_S/beta_S) (-y)^{-1/6} [f1 - f2]``
solves the system.  The opposite sign in front of ``h0`` leaves an O(1)
residual, which :func:`shadow_amplitudes` can reproduce through
``h_sign=+1`` for comparison.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .eikonal import MediumConfig, RegionType
from .errors import CriticalIncidenceError, GrazingError, RegionError, SubcriticalError
from .profiles import WavefrontProfile


@dataclass(frozen=True)
class TransportCoefficients:
    alpha_I: float
    beta_I: float
    alpha_S: float | None
    beta_S: float | None
    lambda_plus: float
    lambda_minus: float

    @property
    def shadow_speed(self) -> float:
        """``c = sqrt(-alpha_S beta_S)``, the imaginary slope of the shadow arguments."""
        if self.alpha_S is None:
            raise SubcriticalError("no shadow coefficients below the critical angle")
        return math.sqrt(-self.alpha_S * self.beta_S)

    @property
    def shadow_ratio(self) -> float:
        """``sqrt(-alpha_S / beta_S)``, positive root."""
        if self.alpha_S is None:
            raise SubcriticalError("no shadow coefficients below the critical angle")
        return math.sqrt(-self.alpha_S / self.beta_S)


@dataclass(frozen=True)
class AmplitudePair:
    g0: complex
    h0: complex


@dataclass(frozen=True)
class CharacteristicLine:
    """The line ``x + sign * tan(theta) * y = x0`` through ``(x0, 0)``."""

    sign: int
    tan_theta: float
    x0: float

    @property
    def slope_dx_dy(self) -> float:
        return -self.sign * self.tan_theta

    @property
    def direction(self) -> tuple[float, float]:
        d = (self.slope_dx_dy, 1.0)
        r = math.hypot(*d)
        return d[0] / r, d[1] / r

    def x_at(self, y):
        return self.x0 - self.sign * self.tan_theta * np.asarray(y)

    def value(self, x, y):
        return np.asarray(x) + self.sign * self.tan_theta * np.asarray(y)


def coefficients(cfg: MediumConfig) -> TransportCoefficients:
    """``alpha``, ``beta`` in both media and the eigenvalues ``pm tan(theta)``.

    Below the critical angle the shadow pair is ``None``; exactly at it
    the shadow pair is singular and :class:`CriticalIncidenceError` is
    raised.
    """
    if cfg.theta_i >= math.pi / 2:
        raise GrazingError("transport coefficients are singular at grazing incidence")
    t = math.tan(cfg.theta_i)
    a = 1.5 * cfg.n * cfg.cos_t
    alpha_I = t * a ** (-1.0 / 3.0)
    beta_I = t * a ** (1.0 / 3.0)
    if cfg.is_critical:
        raise CriticalIncidenceError("alpha_S and beta_S diverge at the critical angle")
    if cfg.supercritical:
        kap2 = (cfg.n * cfg.sin_t) ** 2 - 1.0
        ns = cfg.n * cfg.sin_t
        alpha_S = (2.0 / 3.0) ** (1.0 / 3.0) * kap2 ** (-2.0 / 3.0) * ns
        beta_S = -(1.5 ** (1.0 / 3.0)) * kap2 ** (-1.0 / 3.0) * ns
    else:
        alpha_S = beta_S = None
    root = math.sqrt(alpha_I * beta_I)
    return TransportCoefficients(alpha_I, beta_I, alpha_S, beta_S, root, -root)


def characteristic_curves(coef: TransportCoefficients, x0: float) -> tuple[CharacteristicLine, CharacteristicLine]:
    """``C+ : x + y tan = x0`` and ``C- : x - y tan = x0``."""
    t = coef.lambda_plus
    return CharacteristicLine(1, t, x0), CharacteristicLine(-1, t, x0)


def gamma_matrix(coef: TransportCoefficients, y: float) -> np.ndarray:
    """Eigenvector matrix ``Gamma`` with ``q = Gamma p``."""
    yc = np.cbrt(y)
    t = coef.lambda_plus
    return np.array([[coef.beta_I * yc, t], [-t, coef.alpha_I / yc]])


def p_representation(coef: TransportCoefficients, f1: WavefrontProfile, f2: WavefrontProfile,
                     x, y) -> tuple:
    """``p1 = f1(x + y tan) y^{-1/6}``, ``p2 = f2(x - y tan) y^{1/6}``.

    Normalised so that ``Gamma p`` reproduces :func:`illuminated_amplitudes`.
    """
    y = np.asarray(y, dtype=float)
    t = coef.lambda_plus
    p1 = f1(np.asarray(x) + y * t) * y ** (-1.0 / 6.0)
    p2 = f2(np.asarray(x) - y * t) * y ** (1.0 / 6.0)
    return p1, p2


def illuminated_amplitudes(coef: TransportCoefficients, f1: WavefrontProfile, f2: WavefrontProfile,
                           x, y) -> AmplitudePair:
    """Hyperbolic solution built on the two characteristic families."""
    if np.any(np.asarray(y) <= 0):
        raise RegionError("illuminated amplitudes need y > 0")
    y = np.asarray(y, dtype=float)
    t = coef.lambda_plus
    sa, sb = math.sqrt(coef.alpha_I), math.sqrt(coef.beta_I)
    F1 = f1(np.asarray(x) + y * t)
    F2 = f2(np.asarray(x) - y * t)
    y6 = y ** (1.0 / 6.0)
    g0 = sb * y6 * (sb * F1 + sa * F2)
    h0 = sa / y6 * (-sb * F1 + sa * F2)
    return AmplitudePair(g0, h0)


def shadow_amplitudes(coef: TransportCoefficients, f1: WavefrontProfile, f2: WavefrontProfile,
                      x, y, h_sign: int = -1) -> AmplitudePair:
    """Elliptic solution from analytic profiles at ``x pm i c y``.

    ``h_sign`` selects the sign of the ``i`` in front of ``h0``; only the
    default ``-1`` satisfies the transport system.
    """
    if np.any(np.asarray(y) >= 0):
        raise RegionError("shadow amplitudes need y < 0")
    c = coef.shadow_speed
    y = np.asarray(y, dtype=float)
    f1.check_strip(c * y)
    f2.check_strip(c * y)
    F1 = f1(np.asarray(x) + 1j * c * y)
    F2 = f2(np.asarray(x) - 1j * c * y)
    m6 = (-y) ** (1.0 / 6.0)
    g0 = m6 * (F1 + F2)
    h0 = h_sign * 1j * coef.shadow_ratio / m6 * (F1 - F2)
    return AmplitudePair(g0, h0)


def _ab(coef: TransportCoefficients, region: RegionType) -> tuple[float, float]:
    if region == RegionType.HYPERBOLIC:
        return coef.alpha_I, coef.beta_I
    if region == RegionType.ELLIPTIC:
        if coef.alpha_S is None:
            raise SubcriticalError("no elliptic transport below the critical angle")
        return coef.alpha_S, coef.beta_S
    raise RegionError("the transport system is not posed on the interface")


def transport_residual(fields: Callable, coef: TransportCoefficients, region: RegionType,
                       x: float, y: float, h: float) -> tuple[complex, complex]:
    """Residuals of both transport equations at ``(x, y)``.

    ``fields(x, y)`` returns ``(g0, h0)``.  Derivatives use the five-point
    central stencil (second order in ``h``).
    """
    if y == 0 or (y > 0) != (y + h > 0) or (y > 0) != (y - h > 0):
        raise RegionError("the stencil straddles the interface")
    if (region == RegionType.HYPERBOLIC) != (y > 0):
        raise RegionError("region does not match the sign of y")
    alpha, beta = _ab(coef, region)
    g, hh = fields(x, y)
    gxp, hxp = fields(x + h, y)
    gxm, hxm = fields(x - h, y)
    gyp, hyp = fields(x, y + h)
    gym, hym = fields(x, y - h)
    g_x, h_x = (gxp - gxm) / (2 * h), (hxp - hxm) / (2 * h)
    g_y, h_y = (gyp - gym) / (2 * h), (hyp - hym) / (2 * h)
    yc = float(np.cbrt(y))
    ra = g_y + beta * yc * h_x - g / (6.0 * y)
    rb = h_y + alpha / yc * g_x + hh / (6.0 * y)
    return ra, rb


def convergence_order(hs, residuals) -> float:
    """Least-squares slope of ``log|r|`` against ``log h``."""
    return float(np.polyfit(np.log(np.asarray(hs, float)), np.log(np.abs(np.asarray(residuals))), 1)[0])
