"""Wavefield synthesis on both sides of the interface.

Above the interface (``y > 0``) the matched field is an incident and a
reflected plane wave carrying the same wavefront profile ``f1``::

    psi_I = (psi0/sqrt k) [ f1(x + y t) e^{ikn(x s - y c)} + e^{i delta} f1(x - y t) e^{ikn(x s + y c)} ]

with ``s, c, t`` the sine, cosine and tangent of the incidence angle.
Below it (``y < 0``) the field is evanescent::

    psi_S = (psi0/sqrt k) [1 + i tan(delta/2)] [ f1(x + i c_S y) + cos(delta) f1(x - i c_S y) ]
            * e^{ikn x s} e^{k kappa y}

where ``c_S = sqrt(-alpha_S beta_S)``.  Because
``(1 + i tan(delta/2))(1 + cos delta) = 1 + e^{i delta}`` the two
expressions agree on ``y = 0``.  The normal derivatives agree at order
``k``; the O(1) remainder, from the envelope, is outside the accuracy of
the leading-order construction.

Below the critical angle the reflected term carries ``e^{-i pi/2}`` and
no shadow field is built.  Within ``grazing_tol`` of ``pi/2`` the two
illuminated terms merge into one wave travelling along the interface.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .eikonal import MediumConfig
from .errors import (
    DomainError,
    RegionError,
    ResolutionError,
    SubcriticalError,
)
from .profiles import WavefrontProfile
from .transport import coefficients

GRAZING_TOL = 1e-6
SUBCRITICAL_PHASE = -math.pi / 2


def _q(cfg: MediumConfig) -> float:
    """``sqrt(sin^2 theta - sin^2 theta_crit)``."""
    if cfg.is_critical:
        return 0.0
    d = cfg.sin_t**2 - 1.0 / cfg.n**2
    if d < -1e-12:
        raise SubcriticalError(
            f"theta_i = {cfg.theta_i:.6g} is below the critical angle {cfg.theta_crit:.6g}")
    return math.sqrt(max(d, 0.0))


@dataclass(frozen=True)
class ReflectionPhase:
    delta: float
    ratio_form: float | None = None

    @property
    def coefficient(self) -> complex:
        return complex(math.cos(self.delta), math.sin(self.delta))


def reflection_phase(cfg: MediumConfig, check: bool = True) -> float:
    """Phase of total reflection, ``-2 arctan(sqrt(sin^2 - sin^2_crit) / cos)``.

    With ``check`` the equivalent form built from the transport
    coefficients, ``-2 arctan sqrt(-alpha_I beta_I / (alpha_S beta_S))``,
    must agree to 1e-12.
    """
    return reflection_phase_full(cfg, check).delta


def reflection_phase_full(cfg: MediumConfig, check: bool = True) -> ReflectionPhase:
    q = _q(cfg)
    delta = -2.0 * math.atan2(q, cfg.cos_t)
    ratio = None
    if check and cfg.supercritical and cfg.theta_i < math.pi / 2:
        co = coefficients(cfg)
        ratio = -2.0 * math.atan(math.sqrt(-co.alpha_I * co.beta_I / (co.alpha_S * co.beta_S)))
        if abs(ratio - delta) > 1e-12 * max(1.0, abs(delta)):
            raise ArithmeticError(f"phase forms disagree: {delta!r} vs {ratio!r}")
    return ReflectionPhase(delta, ratio)


def fresnel_phase_oracle(cfg: MediumConfig) -> float:
    """Argument of the TE Fresnel coefficient ``(c - i q)/(c + i q)`` by complex division."""
    q = _q(cfg)
    c = cfg.cos_t
    r = complex(c, -q) / complex(c, q)
    return math.atan2(r.imag, r.real)


def fresnel_coefficient(cfg: MediumConfig) -> complex:
    q = _q(cfg)
    return complex(cfg.cos_t, -q) / complex(cfg.cos_t, q)


def reflected_factor(cfg: MediumConfig) -> complex:
    """``e^{i delta}`` at or beyond the critical angle, ``e^{-i pi/2}`` below it."""
    if cfg.supercritical or cfg.is_critical:
        d = reflection_phase(cfg, check=False)
    else:
        d = SUBCRITICAL_PHASE
    return complex(math.cos(d), math.sin(d))


def _norm(cfg: MediumConfig, psi0) -> complex:
    return (math.sqrt(cfg.k) if psi0 is None else complex(psi0)) / math.sqrt(cfg.k)


def is_grazing(cfg: MediumConfig, tol: float = GRAZING_TOL) -> bool:
    return math.pi / 2 - cfg.theta_i <= tol


def _plane_terms(cfg: MediumConfig, f1: WavefrontProfile, x, y, factor: complex):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    s, c = cfg.sin_t, cfg.cos_t
    t = s / c
    kn = cfg.k * cfg.n
    inc = f1(x + y * t) * np.exp(1j * kn * (x * s - y * c))
    ref = factor * f1(x - y * t) * np.exp(1j * kn * (x * s + y * c))
    return inc, ref


def illuminated_terms(cfg: MediumConfig, f1: WavefrontProfile, x, y, psi0=None):
    """Incident and reflected terms of the illuminated field, separately."""
    if np.any(np.asarray(y) <= 0):
        raise RegionError("the illuminated field needs y > 0")
    a = _norm(cfg, psi0)
    inc, ref = _plane_terms(cfg, f1, x, y, reflected_factor(cfg))
    return a * inc, a * ref


def illuminated_field(cfg: MediumConfig, f1: WavefrontProfile, x, y, psi0=None,
                      grazing_tol: float = GRAZING_TOL):
    """Matched field above the interface.

    Within ``grazing_tol`` of grazing incidence the result is the single
    wave ``(1 + e^{-i pi/2}) f1(x) e^{iknx}``.
    """
    if np.any(np.asarray(y) <= 0):
        raise RegionError("the illuminated field needs y > 0")
    if is_grazing(cfg, grazing_tol):
        return grazing_field(cfg, f1, x, y, psi0)
    inc, ref = illuminated_terms(cfg, f1, x, y, psi0)
    return inc + ref


def grazing_field(cfg: MediumConfig, f1: WavefrontProfile, x, y, psi0=None):
    """``sqrt(2) e^{-i pi/4} f1(x) e^{iknx}``: one wave along the interface."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    a = _norm(cfg, psi0) * (1.0 + complex(math.cos(SUBCRITICAL_PHASE), math.sin(SUBCRITICAL_PHASE)))
    out = a * f1(x + 0.0 * y) * np.exp(1j * cfg.k * cfg.n * x)
    return out


def grazing_reflected_weight(cfg: MediumConfig, f1: WavefrontProfile, x, y) -> float:
    """How far the two-term field with the ``e^{-i pi/2}`` phase is from a single grazing wave.

    Returns ``max |two_term - single| / max |single|`` over the tensor
    grid ``x`` by ``y``; it vanishes as ``theta_i -> pi/2``, where the
    reflected wave can no longer be told apart from the incident one.
    """
    x, y = np.meshgrid(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    inc, ref = _plane_terms(cfg, f1, x, y, complex(0.0, -1.0))
    single = grazing_field(cfg, f1, x, y, psi0=math.sqrt(cfg.k))
    return float(np.max(np.abs(inc + ref - single)) / np.max(np.abs(single)))


def shadow_prefactor(cfg: MediumConfig) -> complex:
    d = reflection_phase(cfg, check=False)
    return 1.0 + 1j * math.tan(d / 2.0)


def shadow_field(cfg: MediumConfig, f1: WavefrontProfile, x, y, psi0=None):
    """Evanescent field below the interface (needs ``theta_i > theta_crit``)."""
    if np.any(np.asarray(y) >= 0):
        raise RegionError("the shadow field needs y < 0")
    if not cfg.supercritical:
        raise SubcriticalError("no evanescent field at or below the critical angle")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    co = coefficients(cfg)
    cs = co.shadow_speed
    f1.check_strip(cs * y)
    d = reflection_phase(cfg, check=False)
    env = f1(x + 1j * cs * y) + math.cos(d) * f1(x - 1j * cs * y)
    carrier = np.exp(1j * cfg.k * cfg.n * cfg.sin_t * x + cfg.k * cfg.kappa * y)
    return _norm(cfg, psi0) * shadow_prefactor(cfg) * env * carrier


def shadow_profiles(cfg: MediumConfig, f1: WavefrontProfile, C: complex = 0.0):
    """``(f1_S, f2_S)`` from the matching conditions, for equal normalisations.

    ``f1_S = sqrt(beta_I) [1 + i tan(delta/2)] f1 + C`` and
    ``f2_S = sqrt(beta_I) [1 + i tan(delta/2)] cos(delta) f1 - C``.
    """
    co = coefficients(cfg)
    d = reflection_phase(cfg, check=False)
    p = math.sqrt(co.beta_I) * shadow_prefactor(cfg)

    def f1s(w):
        return p * f1(w) + C

    def f2s(w):
        return p * math.cos(d) * f1(w) - C

    return f1s, f2s


def field(cfg: MediumConfig, f1: WavefrontProfile, x, y, psi0=None):
    """Field on either side; ``y = 0`` is refused."""
    y = np.asarray(y, dtype=float)
    x = np.broadcast_to(np.asarray(x, dtype=float), np.broadcast(np.asarray(x), y).shape)
    y = np.broadcast_to(y, x.shape)
    if np.any(y == 0):
        raise RegionError("the interface itself is only a matching locus")
    out = np.full(x.shape, np.nan + 0j)
    up = y > 0
    if np.any(up):
        out[up] = illuminated_field(cfg, f1, x[up], y[up], psi0)
    down = ~up
    if np.any(down):
        out[down] = shadow_field(cfg, f1, x[down], y[down], psi0)
    return out


# --------------------------------------------------------------------------
# grids

@dataclass
class FieldGrid:
    x: np.ndarray
    y: np.ndarray
    psi: np.ndarray
    region: np.ndarray
    metadata: dict = dc_field(default_factory=dict)

    @property
    def spacing(self) -> tuple[float, float]:
        dx = float(self.x[1] - self.x[0]) if self.x.size > 1 else math.inf
        dy = float(self.y[1] - self.y[0]) if self.y.size > 1 else math.inf
        return dx, dy


def sample_field(cfg: MediumConfig, f1: WavefrontProfile, x, y, psi0=None,
                 grazing_tol: float = GRAZING_TOL) -> FieldGrid:
    """Field on the tensor grid ``x`` by ``y``; rows at ``y = 0`` are dropped.

    Below the critical angle the shadow rows are left as NaN and tagged
    ``"unmodelled"``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dropped = int(np.sum(y == 0))
    y = y[y != 0]
    X, Y = np.meshgrid(x, y)
    psi = np.full(X.shape, np.nan + 0j)
    region = np.where(Y > 0, "illuminated", "shadow").astype(object)
    up = Y > 0
    if np.any(up):
        psi[up] = illuminated_field(cfg, f1, X[up], Y[up], psi0, grazing_tol)
    if np.any(~up):
        if cfg.supercritical:
            psi[~up] = shadow_field(cfg, f1, X[~up], Y[~up], psi0)
        else:
            region[~up] = "unmodelled"
    meta = {
        "n": cfg.n, "theta_i": cfg.theta_i, "k": cfg.k,
        "profile": f1.describe(), "psi0": "sqrt(k)" if psi0 is None else complex(psi0),
        "dropped_interface_rows": dropped,
        "grazing": is_grazing(cfg, grazing_tol),
    }
    return FieldGrid(x, y, psi, region, meta)


# --------------------------------------------------------------------------
# boundary matching

@dataclass
class BoundaryReport:
    eps: list
    value_mismatch: list
    derivative_mismatch: list
    derivative_scale: float
    phase_identity_residual: float
    continuity_residual: float
    shadow_relation_residual: float


def _one_sided_dy(fun, x, y0, h, direction):
    # second-order one-sided difference pointing away from the interface
    f0 = fun(x, y0)
    f1 = fun(x, y0 + direction * h)
    f2 = fun(x, y0 + 2 * direction * h)
    return direction * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h)


def boundary_match(cfg: MediumConfig, f1: WavefrontProfile, x, psi0=None,
                   eps=(1e-2, 1e-3, 1e-4), C: complex = 0.0) -> BoundaryReport:
    """Continuity of the field and its normal derivative across ``y = 0``.

    ``eps`` is in units of the free-space wavelength.  Also checks the
    algebraic relations behind the matching: the Fresnel ratio against
    ``e^{i delta}``, the continuity relation for the shadow profiles and
    ``f2_S = cos(delta) f1_S`` when ``C = 0``.
    """
    if not cfg.supercritical:
        raise SubcriticalError("boundary matching is posed for total reflection")
    x = np.asarray(x, dtype=float)
    lam = cfg.wavelength
    vm, dm = [], []

    def up(xx, yy):
        return illuminated_field(cfg, f1, xx, np.full_like(xx, yy), psi0)

    def down(xx, yy):
        return shadow_field(cfg, f1, xx, np.full_like(xx, yy), psi0)

    for e in eps:
        h = e * lam
        vm.append(float(np.max(np.abs(up(x, h) - down(x, -h)))))
        du = _one_sided_dy(up, x, h, h, 1)
        dd = _one_sided_dy(down, x, -h, h, -1)
        dm.append(float(np.max(np.abs(du - dd))))
    scale = cfg.k * float(np.max(np.abs(up(x, eps[-1] * lam))))

    co = coefficients(cfg)
    d = reflection_phase(cfg)
    phase_res = abs(fresnel_coefficient(cfg) - complex(math.cos(d), math.sin(d)))
    # f2_I = e^{i pi/2} sqrt(beta/alpha) e^{i delta} f1_I, then the continuity relation
    f1v = f1(x)
    f2v = 1j * math.sqrt(co.beta_I / co.alpha_I) * complex(math.cos(d), math.sin(d)) * f1v
    f1s, f2s = shadow_profiles(cfg, f1, C)
    lhs = f1s(x) + f2s(x)
    rhs = math.sqrt(co.beta_I) * f1v - 1j * math.sqrt(co.alpha_I) * f2v
    cont = float(np.max(np.abs(lhs - rhs)))
    rel = float(np.max(np.abs(f2s(x) - math.cos(d) * f1s(x)))) if C == 0 else math.nan
    return BoundaryReport(list(eps), vm, dm, scale, phase_res, cont, rel)


# --------------------------------------------------------------------------
# Helmholtz residual

@dataclass
class HelmholtzReport:
    ks: list
    residuals: list
    slope: float | None
    method: str
    spacing_in_wavelengths: float


def _laplacian_fd(A: np.ndarray, dx: float, dy: float) -> np.ndarray:
    return ((A[1:-1, 2:] - 2 * A[1:-1, 1:-1] + A[1:-1, :-2]) / dx**2
            + (A[2:, 1:-1] - 2 * A[1:-1, 1:-1] + A[:-2, 1:-1]) / dy**2)


def _gradient_fd(A: np.ndarray, dx: float, dy: float):
    ax = (A[1:-1, 2:] - A[1:-1, :-2]) / (2 * dx)
    ay = (A[2:, 1:-1] - A[:-2, 1:-1]) / (2 * dy)
    return ax, ay


def _terms_on_grid(cfg: MediumConfig, f1: WavefrontProfile, X, Y, form: str):
    """``(envelope, grad Phi)`` pairs whose sum is the field, with Phi linear."""
    s, c = cfg.sin_t, cfg.cos_t
    t = s / c
    n = cfg.n
    r = reflected_factor(cfg)
    if form == "matched":
        return [(f1(X + Y * t), (n * s, -n * c)), (r * f1(X - Y * t), (n * s, n * c))]
    if form == "product":
        # transport factor times eikonal factor, before amplitudes are
        # attached to their own rays; f2 from the matching relation
        co = coefficients(cfg)
        amp = math.sqrt(co.beta_I) * (f1(X + Y * t) + 1j * r * f1(X - Y * t))
        return [(amp, (n * s, -n * c)), (-1j * amp, (n * s, n * c))]
    if form == "shadow":
        co = coefficients(cfg)
        cs = co.shadow_speed
        d = reflection_phase(cfg, check=False)
        env = shadow_prefactor(cfg) * (f1(X + 1j * cs * Y) + math.cos(d) * f1(X - 1j * cs * Y))
        return [(env, (n * s, -1j * cfg.kappa))]
    raise DomainError(f"unknown field form '{form}'")


def helmholtz_residual(cfg: MediumConfig, f1: WavefrontProfile, x, y, form: str = "matched",
                       method: str = "envelope", eps0_rel: float = 1e-3) -> float:
    """Normalised residual ``max |lap psi + k^2 n^2 psi| / (k^2 |psi| + eps0)`` on a grid.

    ``form`` is ``"matched"`` (the two-term illuminated field),
    ``"product"`` (the unmatched product form, whose amplitudes are not
    transported along their own rays) or ``"shadow"``.

    ``method="envelope"`` writes each term as ``A e^{ik Phi}`` with a
    linear phase, applies the carrier derivatives exactly and finite
    differences only to the slowly varying ``A``.  ``method="direct"``
    differences ``psi`` itself; at a few points per wavelength this is
    dominated by the stencil error.  ``eps0 = eps0_rel k^2 max|psi|``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dx, dy = x[1] - x[0], y[1] - y[0]
    lam = cfg.wavelength
    if max(dx, dy) > lam / 10 * (1 + 1e-12):
        raise ResolutionError(f"grid spacing {max(dx, dy):.4g} exceeds lambda/10 = {lam / 10:.4g}")
    if form == "shadow":
        if np.any(y >= 0):
            raise RegionError("shadow residual needs y < 0")
        n_loc = 1.0
    else:
        if np.any(y <= 0):
            raise RegionError("illuminated residual needs y > 0")
        n_loc = cfg.n
    X, Y = np.meshgrid(x, y)
    k = cfg.k
    terms = _terms_on_grid(cfg, f1, X, Y, form)
    psi = 0j
    res = 0j
    for A, (px, py) in terms:
        car = np.exp(1j * k * (px * X + py * Y))
        psi = psi + A * car
        if method == "envelope":
            ax, ay = _gradient_fd(A, dx, dy)
            lap = _laplacian_fd(A, dx, dy)
            inner = A[1:-1, 1:-1]
            res = res + car[1:-1, 1:-1] * (
                lap + 2j * k * (ax * px + ay * py) + k * k * (px * px + py * py - n_loc**2) * inner)
    if method == "direct":
        res = _laplacian_fd(psi, dx, dy) + k * k * n_loc**2 * psi[1:-1, 1:-1]
    elif method != "envelope":
        raise DomainError(f"unknown method '{method}'")
    mag = np.abs(psi[1:-1, 1:-1])
    eps0 = eps0_rel * k * k * float(np.max(mag))
    return float(np.max(np.abs(res) / (k * k * mag + eps0)))


def helmholtz_scaling(cfg: MediumConfig, f1: WavefrontProfile, ks=(50, 100, 200, 400, 800),
                      x_range=(-1.0, 1.0), y_range=(0.25, 0.5), points_per_wavelength: int = 20,
                      form: str = "matched", method: str = "envelope") -> HelmholtzReport:
    """Residual for a ladder of wavenumbers at fixed physical window; log-log slope fit."""
    out = []
    for k in ks:
        c = cfg.replace(k=float(k))
        h = c.wavelength / points_per_wavelength
        x = np.arange(x_range[0], x_range[1] + h / 2, h)
        y = np.arange(y_range[0], y_range[1] + h / 2, h)
        out.append(helmholtz_residual(c, f1, x, y, form=form, method=method))
    slope = None
    if len(ks) > 1 and all(r > 0 for r in out):
        slope = float(np.polyfit(np.log(ks), np.log(out), 1)[0])
    return HelmholtzReport(list(ks), out, slope, method, 1.0 / points_per_wavelength)
