"""Goos-Hanchen lateral shift.

Linearising the reflection phase about the carrier wavenumber
``k_x0 = k n sin(theta)``::

    delta(k_x) ~ delta0 + X k_x,    X = d delta/d k_x = (lambda / (2 pi n cos theta)) d delta/d theta

and the measured shift across the rays is ``D = X cos(theta)``.  Both are
negative; the reflected beam moves by ``|X|`` along ``+x``.

:func:`beam_shift` measures the displacement of a reflected Gaussian beam
built from plane waves, each reflected with its own exact phase, so it
checks the linearisation rather than restating it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eikonal import MediumConfig
from .errors import CriticalIncidenceError, DomainError, GrazingError, SubcriticalError
from .field import illuminated_terms, reflection_phase
from .profiles import WavefrontProfile


@dataclass(frozen=True)
class ShiftResult:
    X_bar: float
    D: float
    delta0: float
    wavelength: float
    d_delta: float


def _check_supercritical(cfg: MediumConfig) -> None:
    if cfg.is_critical:
        raise CriticalIncidenceError("d delta/d theta diverges at the critical angle")
    if not cfg.supercritical:
        raise SubcriticalError("the lateral shift is defined for total reflection")


def delta_derivative(cfg: MediumConfig) -> float:
    """``d delta/d theta = -2 sin(theta) / sqrt(sin^2 theta - sin^2 theta_crit)``.

    Diverges like ``(theta - theta_crit)^{-1/2}`` at the critical angle.
    """
    _check_supercritical(cfg)
    q2 = cfg.sin_t**2 - 1.0 / cfg.n**2
    return -2.0 * cfg.sin_t / math.sqrt(q2)


def delta_derivative_fd(cfg: MediumConfig, h: float | None = None) -> float:
    """Richardson-extrapolated central difference of :func:`reflection_phase` in ``theta``.

    The default step shrinks with the distance to the nearer end of the
    total-reflection range, where ``delta`` behaves like a square root.
    """
    _check_supercritical(cfg)
    th = cfg.theta_i
    gap = min(th - cfg.theta_crit, math.pi / 2 - th)
    if h is None:
        h = min(1e-4, 1e-2 * gap) if gap > 0 else 1e-6
    if gap <= 2 * h:
        lo = cfg.replace(theta_i=th - h)
        hi = cfg.replace(theta_i=min(th + h, math.pi / 2))
        return (reflection_phase(hi) - reflection_phase(lo)) / (hi.theta_i - lo.theta_i)

    def central(step):
        hi = reflection_phase(cfg.replace(theta_i=th + step))
        lo = reflection_phase(cfg.replace(theta_i=th - step))
        return (hi - lo) / (2 * step)

    return (4.0 * central(h / 2) - central(h)) / 3.0


def lateral_D(cfg: MediumConfig) -> float:
    """``D = (lambda / (2 pi n)) d delta/d theta``; finite up to grazing incidence."""
    return cfg.wavelength / (2.0 * math.pi * cfg.n) * delta_derivative(cfg)


def shift(cfg: MediumConfig) -> ShiftResult:
    if cfg.theta_i >= math.pi / 2:
        raise GrazingError("X_bar = D / cos(theta) is unbounded at grazing incidence")
    dd = delta_derivative(cfg)
    lam = cfg.wavelength
    D = lam / (2.0 * math.pi * cfg.n) * dd
    X = D / cfg.cos_t
    delta0 = reflection_phase(cfg) - X * cfg.k * cfg.n * cfg.sin_t
    return ShiftResult(X, D, delta0, lam, dd)


def shifted_field(cfg: MediumConfig, f1: WavefrontProfile, x, y, psi0=None):
    """Illuminated field with the reflected term linearised about the carrier.

    The reflected envelope and phase are both evaluated at ``x + X_bar``;
    the phase at the carrier itself is unchanged because
    ``delta0 + k n sin(theta) X_bar = delta``.
    """
    if np.any(np.asarray(y) <= 0):
        raise DomainError("the shifted field is defined for y > 0")
    r = shift(cfg)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    inc, _ = illuminated_terms(cfg, f1, x, y, psi0)
    s, c = cfg.sin_t, cfg.cos_t
    a = (math.sqrt(cfg.k) if psi0 is None else complex(psi0)) / math.sqrt(cfg.k)
    xs = x + r.X_bar
    ref = a * np.exp(1j * r.delta0) * f1(xs - y * s / c) * np.exp(1j * cfg.k * cfg.n * (xs * s + y * c))
    return inc, ref


def correlation_lag(a: np.ndarray, b: np.ndarray, dx: float, refine: bool = False) -> float:
    """Shift of ``b`` relative to ``a`` (positive when ``b`` lies at larger x).

    Integer-cell argmax of the circular cross-correlation, optionally
    refined by a parabola through the peak and its neighbours.
    """
    a = np.asarray(a, dtype=float) - np.mean(a)
    b = np.asarray(b, dtype=float) - np.mean(b)
    corr = np.fft.ifft(np.conj(np.fft.fft(a)) * np.fft.fft(b)).real
    i = int(np.argmax(corr))
    m = len(corr)
    off = 0.0
    if refine:
        l, c0, r = corr[(i - 1) % m], corr[i], corr[(i + 1) % m]
        den = l - 2 * c0 + r
        if den != 0:
            off = 0.5 * (l - r) / den
    lag = i if i <= m // 2 else i - m
    return (lag + off) * dx


@dataclass(frozen=True)
class BeamShift:
    measured: float
    predicted: float
    dx: float
    refined: float


def beam_shift(cfg: MediumConfig, sigma_wavelengths: float = 20.0, cells_per_wavelength: int = 20,
               span_sigmas: float = 12.0) -> BeamShift:
    """Displacement along the interface of a totally reflected Gaussian beam.

    The incident trace on ``y = 0`` is ``exp(-x^2/sigma^2) e^{i k n sin(theta) x}``.
    It is split into plane waves by FFT, each component with tangential
    wavenumber ``k_x`` is multiplied by ``e^{i delta}`` at its own angle
    ``asin(k_x / (k n))``, and the reflected trace is rebuilt.  The lag of
    ``|reflected|`` against ``|incident|`` is compared with ``|X_bar|``.
    """
    r = shift(cfg)
    lam = cfg.wavelength
    dx = lam / cells_per_wavelength
    sigma = sigma_wavelengths * lam
    npts = int(2 ** math.ceil(math.log2(span_sigmas * sigma / dx)))
    x = (np.arange(npts) - npts // 2) * dx
    kn = cfg.k * cfg.n
    inc = np.exp(-(x / sigma) ** 2) * np.exp(1j * kn * cfg.sin_t * x)
    spec = np.fft.fft(inc)
    kx = 2.0 * np.pi * np.fft.fftfreq(npts, d=dx)
    weight = np.abs(spec) / np.max(np.abs(spec))
    live = weight > 1e-12
    s = kx[live] / kn
    if np.any(s * cfg.n <= 1.0) or np.any(np.abs(s) >= 1.0):
        raise DomainError("beam spectrum leaves the total-reflection range; widen the beam")
    q = np.sqrt(s**2 - 1.0 / cfg.n**2)
    c = np.sqrt(1.0 - s**2)
    factor = np.zeros(npts, dtype=complex)
    factor[live] = np.exp(-2j * np.arctan2(q, c))
    ref = np.fft.ifft(spec * factor)
    measured = correlation_lag(np.abs(inc), np.abs(ref), dx)
    refined = correlation_lag(np.abs(inc), np.abs(ref), dx, refine=True)
    return BeamShift(measured, abs(r.X_bar), dx, refined)
