"""Ludwig eikonal system for a plane interface.

A denser medium of index ``n`` fills ``y > 0`` and vacuum fills ``y < 0``.
For linear wavefronts the pair ``(u, v)`` that replaces the single
eikonal phase is known in closed form::

    u = n sin(theta) x                                   (both media)
    (2/3) v^{3/2}    =  n cos(theta) y                   (y > 0, v > 0)
    -(2/3) (-v)^{3/2} = kappa y,   kappa = sqrt(n^2 sin^2 theta - 1)   (y < 0)

and the two phases are ``Phi_pm = u pm (2/3) v^{3/2}``, complex in the
shadow.  Fractional powers of ``v`` are always formed on the real branch
of ``|v|``; the imaginary unit of the shadow phase is inserted by hand.

The mixed character of the system follows from the discriminant
``v J^2``: hyperbolic where ``v > 0``, elliptic where ``v < 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateJacobianError,
    DomainError,
    RegionError,
    SubcriticalError,
)

_CRIT_TOL = 1e-12


@dataclass(frozen=True)
class MediumConfig:
    """Index of the denser medium, incidence angle (radians), wavenumber.

    ``theta_i = pi/2`` (grazing) is accepted; only the illuminated
    formulas make sense there.
    """

    n: float
    theta_i: float
    k: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.n) and self.n > 1.0):
            raise DomainError(f"refractive index must exceed 1, got {self.n}")
        if not (0.0 < self.theta_i <= math.pi / 2):
            raise DomainError(f"incidence angle must lie in (0, pi/2], got {self.theta_i}")
        if not (math.isfinite(self.k) and self.k > 0.0):
            raise DomainError(f"wavenumber must be positive, got {self.k}")

    @property
    def theta_crit(self) -> float:
        return math.asin(1.0 / self.n)

    @property
    def wavelength(self) -> float:
        return 2.0 * math.pi / self.k

    @property
    def sin_t(self) -> float:
        return math.sin(self.theta_i)

    @property
    def cos_t(self) -> float:
        # exact zero at grazing incidence
        return 0.0 if self.theta_i == math.pi / 2 else math.cos(self.theta_i)

    @property
    def supercritical(self) -> bool:
        return self.n * self.sin_t > 1.0 + _CRIT_TOL

    @property
    def is_critical(self) -> bool:
        return abs(self.n * self.sin_t - 1.0) <= _CRIT_TOL

    @property
    def kappa(self) -> float:
        """``sqrt(n^2 sin^2 theta - 1)``, the shadow decay rate per unit k."""
        s = self.n * self.sin_t
        if s < 1.0 - _CRIT_TOL:
            raise SubcriticalError(
                f"theta_i = {self.theta_i:.6g} is below the critical angle {self.theta_crit:.6g}")
        return math.sqrt(max(s * s - 1.0, 0.0))

    def replace(self, **kw) -> "MediumConfig":
        d = {"n": self.n, "theta_i": self.theta_i, "k": self.k}
        d.update(kw)
        return MediumConfig(**d)


class Region(str, Enum):
    ILLUMINATED = "illuminated"
    BOUNDARY = "boundary"
    SHADOW = "shadow"


class RegionType(str, Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


def region_of(y: float) -> Region:
    if y > 0:
        return Region.ILLUMINATED
    if y < 0:
        return Region.SHADOW
    return Region.BOUNDARY


@dataclass(frozen=True)
class PhasePair:
    u: float
    v: float
    region: Region


@dataclass(frozen=True)
class GradientSample:
    """Partial derivatives of ``(u, v)`` at one point."""

    u_x: float
    u_y: float
    v_x: float
    v_y: float

    @property
    def J(self) -> float:
        """``u_y v_x - u_x v_y``, the determinant entering ``Delta = v J^2``."""
        return self.u_y * self.v_x - self.u_x * self.v_y

    @property
    def map_jacobian(self) -> float:
        """``u_x v_y - u_y v_x``, the Jacobian of ``(x, y) -> (u, v)``."""
        return -self.J

    @property
    def grad_u_sq(self) -> float:
        return self.u_x**2 + self.u_y**2

    @property
    def grad_v_sq(self) -> float:
        return self.v_x**2 + self.v_y**2


# --------------------------------------------------------------------------
# closed-form fields

def _shadow_kappa(cfg: MediumConfig) -> float:
    if not cfg.supercritical and not cfg.is_critical:
        raise SubcriticalError(
            f"no evanescent shadow: theta_i = {cfg.theta_i:.6g} <= theta_crit = {cfg.theta_crit:.6g}")
    return cfg.kappa


def u_field(cfg: MediumConfig, x, region: Region | None = None):
    """``u = n sin(theta) x``; the same in both media by Snell matching."""
    out = cfg.n * cfg.sin_t * np.asarray(x, dtype=float)
    return out if np.ndim(x) else float(out)


def v_field(cfg: MediumConfig, y):
    """Splitting function ``v(y)``: positive above the interface, negative below."""
    y_arr = np.asarray(y, dtype=float)
    a = 1.5 * cfg.n * cfg.cos_t
    out = np.zeros_like(y_arr)
    pos = y_arr > 0
    out[pos] = np.cbrt(a * y_arr[pos]) ** 2
    neg = y_arr < 0
    if np.any(neg):
        b = 1.5 * _shadow_kappa(cfg)
        out[neg] = -np.cbrt(b * -y_arr[neg]) ** 2
    return out if np.ndim(y) else float(out)


def v_y_field(cfg: MediumConfig, y):
    """``dv/dy`` from the closed forms; singular like ``|y|^{-1/3}`` at the interface."""
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr == 0):
        raise RegionError("dv/dy is singular at y = 0")
    out = np.empty_like(y_arr)
    pos = y_arr > 0
    a = 1.5 * cfg.n * cfg.cos_t
    out[pos] = (2.0 / 3.0) * np.cbrt(a) ** 2 / np.cbrt(y_arr[pos])
    neg = ~pos
    if np.any(neg):
        b = 1.5 * _shadow_kappa(cfg)
        out[neg] = (2.0 / 3.0) * np.cbrt(b) ** 2 / np.cbrt(-y_arr[neg])
    return out if np.ndim(y) else float(out)


def phase_pair(cfg: MediumConfig, x: float, y: float) -> PhasePair:
    return PhasePair(u_field(cfg, x), v_field(cfg, y), region_of(y))


def phase(cfg: MediumConfig, x, y) -> tuple:
    """``(Phi_plus, Phi_minus)`` assembled from ``u`` and ``v``.

    Above the interface ``Phi_pm = u pm (2/3) v^{3/2}``; below it
    ``Phi_pm = u -+ i (2/3)(-v)^{3/2}``.
    """
    u = u_field(cfg, x)
    v = np.asarray(v_field(cfg, y), dtype=float)
    w = (2.0 / 3.0) * np.abs(v) ** 1.5
    plus = np.where(v >= 0, u + w + 0j, u - 1j * w)
    minus = np.where(v >= 0, u - w + 0j, u + 1j * w)
    if np.ndim(plus) == 0:
        return complex(plus), complex(minus)
    return plus, minus


def gradient_closed_form(cfg: MediumConfig, x: float, y: float) -> GradientSample:
    return GradientSample(cfg.n * cfg.sin_t, 0.0, 0.0, v_y_field(cfg, y))


def gradient_numeric(fu, fv, x: float, y: float, h: float | None = None) -> GradientSample:
    """Central-difference gradients of two scalar fields ``f(x, y)``.

    The default step ``1e-6 max(1, |y|)`` balances truncation and
    roundoff for first derivatives.
    """
    if h is None:
        h = 1e-6 * max(1.0, abs(y))
    if y != 0 and abs(y) <= h:
        raise RegionError("difference stencil straddles the interface")
    d = 2.0 * h
    return GradientSample(
        (fu(x + h, y) - fu(x - h, y)) / d,
        (fu(x, y + h) - fu(x, y - h)) / d,
        (fv(x + h, y) - fv(x - h, y)) / d,
        (fv(x, y + h) - fv(x, y - h)) / d,
    )


def phase_gradients(g: GradientSample, v: float) -> tuple:
    """``grad Phi_pm = grad u pm sqrt(v) grad v`` (``sqrt(v) = i sqrt(-v)`` below)."""
    root = math.sqrt(v) if v >= 0 else 1j * math.sqrt(-v)
    gp = (g.u_x + root * g.v_x, g.u_y + root * g.v_y)
    gm = (g.u_x - root * g.v_x, g.u_y - root * g.v_y)
    return gp, gm


def ray_speed_residual(g: GradientSample, v: float, n_local: float) -> tuple[complex, complex]:
    """``grad Phi_pm . grad Phi_pm - n_local^2`` for both phases (bilinear, no conjugate)."""
    out = []
    for gx, gy in phase_gradients(g, v):
        out.append(gx * gx + gy * gy - n_local**2)
    return out[0], out[1]


def local_index(cfg: MediumConfig, y: float) -> float:
    if y > 0:
        return cfg.n
    if y < 0:
        return 1.0
    raise RegionError("the index is not defined on the interface")


# --------------------------------------------------------------------------
# classification and diagnostics

def discriminant(v: float, J: float) -> float:
    return v * J * J


def classify(v: float, J: float) -> RegionType:
    """Type of the eikonal system from ``Delta = v J^2``."""
    if J == 0:
        raise DegenerateJacobianError("J = 0: the type is not determined by v")
    if v > 0:
        return RegionType.HYPERBOLIC
    if v < 0:
        return RegionType.ELLIPTIC
    return RegionType.PARABOLIC


def classify_point(cfg: MediumConfig, x: float, y: float) -> RegionType:
    """Classification using the closed-form ``v`` and a nonzero ``J``.

    On the interface ``v_y`` is infinite, so ``J`` is taken from a point
    just above it; only its sign matters and ``v = 0`` decides anyway.
    """
    v = v_field(cfg, y)
    yj = y if y != 0 else 1e-12
    J = gradient_closed_form(cfg, x, yj).J
    return classify(v, J)


def characteristic_slopes(g: GradientSample, v: float) -> tuple[float, float]:
    """``dx/dy = (u_x pm sqrt(v) v_x)/(u_y pm sqrt(v) v_y)`` in the hyperbolic region."""
    if v < 0:
        raise RegionError("no real characteristics where v < 0")
    r = math.sqrt(v)
    out = []
    for s in (1.0, -1.0):
        den = g.u_y + s * r * g.v_y
        if den == 0:
            raise DomainError("vertical characteristic: dy/dx = 0")
        out.append((g.u_x + s * r * g.v_x) / den)
    return out[0], out[1]


@dataclass(frozen=True)
class BeltramiReport:
    rho: float
    residual_a: float
    residual_b: float
    q_min: float
    bracket_ok: bool
    inequality_lhs: float
    inequality_rhs: float
    inequality_ok: bool
    opposite_sign_rhs: float
    identity_residual: float


def beltrami_check(g: GradientSample, v: float, n_local: float = 1.0) -> BeltramiReport:
    """Beltrami form ``u_x = rho v_y``, ``u_y = -rho v_x`` with ``rho = |grad u|/|grad v|``.

    ``q_min = rho + 1/rho`` is the smallest ``Q`` satisfying the bracket
    ``1/Q <= rho + 1/rho <= Q``; the distortion inequality
    ``|grad u|^2 + |grad v|^2 <= (1/Q + Q) J`` is evaluated with ``Q = q_min``
    and with ``J`` the Jacobian of ``(x, y) -> (u, v)``, which is positive
    here.  ``opposite_sign_rhs`` repeats the right side with the opposite
    sign convention ``u_y v_x - u_x v_y``.  ``identity_residual`` is
    ``|grad u|^2 - (n_local^2 - v |grad v|^2)``.
    """
    if v >= 0:
        raise RegionError("the Beltrami form holds only where v < 0")
    gv = math.sqrt(g.grad_v_sq)
    if gv == 0:
        raise DegenerateJacobianError("grad v vanishes")
    gu = math.sqrt(g.grad_u_sq)
    rho = gu / gv
    ra = g.u_x - rho * g.v_y
    rb = g.u_y + rho * g.v_x
    q = rho + 1.0 / rho
    lhs = g.grad_u_sq + g.grad_v_sq
    rhs = (1.0 / q + q) * g.map_jacobian
    scale = max(lhs, 1e-300)
    return BeltramiReport(
        rho=rho,
        residual_a=ra,
        residual_b=rb,
        q_min=q,
        bracket_ok=1.0 / q <= rho + 1.0 / rho <= q * (1 + 1e-12),
        inequality_lhs=lhs,
        inequality_rhs=rhs,
        inequality_ok=lhs <= rhs + 1e-12 * scale,
        opposite_sign_rhs=(1.0 / q + q) * g.J,
        identity_residual=g.grad_u_sq - (n_local**2 - v * g.grad_v_sq),
    )


def backlund_residual(g: GradientSample, v: float, n_local: float = 1.0) -> float:
    """Distance of ``grad u`` from ``-+ sqrt(n^2 - v|grad v|^2)/|grad v| (-v_y, v_x)``.

    The smaller of the two sign choices is returned.
    """
    if v >= 0:
        raise RegionError("the Backlund map is formulated for v < 0")
    gv2 = g.grad_v_sq
    if gv2 == 0:
        raise DegenerateJacobianError("grad v vanishes")
    c = math.sqrt(n_local**2 - v * gv2) / math.sqrt(gv2)
    best = math.inf
    for s in (1.0, -1.0):
        ex = -s * c * -g.v_y
        ey = -s * c * g.v_x
        best = min(best, math.hypot(g.u_x - ex, g.u_y - ey))
    return best


def eikonal_residual(g: GradientSample, v: float, n_local: float) -> tuple[float, float]:
    """``(|grad u|^2 + v |grad v|^2 - n^2, grad u . grad v)``."""
    return (g.grad_u_sq + v * g.grad_v_sq - n_local**2, g.u_x * g.v_x + g.u_y * g.v_y)


def decay_exponent(cfg: MediumConfig, y):
    """``(2/3)(-v)^{3/2}`` below the interface; equals ``kappa |y|``."""
    v = np.asarray(v_field(cfg, y), dtype=float)
    out = (2.0 / 3.0) * np.abs(np.minimum(v, 0.0)) ** 1.5
    return out if np.ndim(y) else float(out)


__all__ = [
    "MediumConfig", "Region", "RegionType", "PhasePair", "GradientSample", "BeltramiReport",
    "region_of", "u_field", "v_field", "v_y_field", "phase_pair", "phase", "gradient_closed_form",
    "gradient_numeric", "phase_gradients", "ray_speed_residual", "local_index", "discriminant",
    "classify", "classify_point", "characteristic_slopes", "beltrami_check", "backlund_residual",
    "eikonal_residual", "decay_exponent",
]
