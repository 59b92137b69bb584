"""Borel sums of factorial tails and their monodromy.

``Lambda_n(z) = (1/n!) int_0^inf t^n e^{-t} / (1 + t/z) dt`` is the Borel
sum of ``sum_{m>=n} (-1)^m m!/z^m`` (up to the factor ``n!/(-z)^n``).  The
integrand has a pole at ``t = -z``; continuing ``z`` once around the
origin drags the path across it, which is the source of the Stokes jump
of the Airy asymptotics.

Values off the principal sheet are produced as principal value plus an
integer multiple of the residue term.  :func:`continue_lambda` does the
same bookkeeping step by step along a circular path, switching between
two rotated integration rays and adding a residue whenever the pole ends
up between the old and the new ray.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .airy import airy_coefficients
from .errors import ConvergenceError, DomainError, PoleOnPathError

RAY_ANGLES = (-math.pi / 3.0, math.pi / 3.0)
M_MIN = 10
DEFAULT_S_MAX = 3
STABILITY_TOL = 1e-8


# --------------------------------------------------------------------------
# Lambda_n

def _check_order(n: int) -> int:
    if int(n) != n or n < 0:
        raise DomainError(f"order n must be a non-negative integer, got {n!r}")
    return int(n)


def ray_integral(n: int, z, alpha: float) -> complex:
    """``(1/n!) int t^n e^{-t}/(1+t/z) dt`` along ``t = s e^{i alpha}``, ``s >= 0``.

    Equals ``Lambda_n(z)`` on whichever sheet has no pole between this ray
    and the positive real axis.  Needs ``|alpha| < pi/2``.
    """
    n = _check_order(n)
    z = complex(z)
    if z == 0:
        raise DomainError("Lambda_n needs z != 0")
    if abs(alpha) >= math.pi / 2:
        raise DomainError("ray must lie in the right half plane")
    e = complex(math.cos(alpha), math.sin(alpha))
    pole = -z / e
    if abs(pole.imag) < 1e-14 * abs(z) and pole.real >= 0.0:
        raise PoleOnPathError(f"pole t = {-z} lies on the ray at angle {alpha}")
    lg = math.lgamma(n + 1)

    def f(s):
        t = s * e
        if s == 0.0:
            lead = 1.0 if n == 0 else 0.0
            return lead * e / (1.0 + t / z)
        return np.exp(n * np.log(t) - t - lg) * e / (1.0 + t / z)

    c = math.cos(alpha)
    peak = n / c if n else 1.0
    upper = (n + 40.0 + 12.0 * math.sqrt(n + 1.0)) / c
    pts = sorted(p for p in {peak, pole.real} if 0.0 < p < upper)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        re = integrate.quad(lambda s: f(s).real, 0.0, upper, points=pts or None,
                            epsabs=1e-14, epsrel=1e-13, limit=400)[0]
        im = integrate.quad(lambda s: f(s).imag, 0.0, upper, points=pts or None,
                            epsabs=1e-14, epsrel=1e-13, limit=400)[0]
    return complex(re, im)


def residue_term(n: int, z) -> complex:
    """``z (-z)^n e^z / n!``, the residue of the integrand at ``t = -z`` times ``n!``-normalization."""
    n = _check_order(n)
    z = complex(z)
    return z * (-z) ** n * np.exp(z) / math.factorial(n)


def monodromy_jump(n: int, z, turns: int) -> complex:
    """Additive change of ``Lambda_n`` after ``turns`` (+1 or -1) turns about 0.

    ``Lambda_n(z e^{+-2 pi i}) = Lambda_n(z) -+ 2 pi i e^{+-i pi n} z^{n+1} e^z / n!``.
    """
    if turns not in (1, -1):
        raise DomainError("turns must be +1 or -1")
    z = complex(z)
    if z == 0:
        raise DomainError("monodromy is undefined at z = 0")
    return -turns * 2j * math.pi * residue_term(n, z)


def _principal(n: int, z: complex, ph: float) -> complex:
    # choose a ray that keeps well away from the pole at angle ph - pi (mod 2 pi)
    if abs(ph) <= 2.0 * math.pi / 3.0:
        alpha = 0.0
    else:
        alpha = math.copysign(math.pi / 3.0, ph)
    return ray_integral(n, z, alpha)


def lambda_n(n: int, z, phase: float | None = None) -> complex:
    """``Lambda_n(z)`` on the sheet selected by the unwrapped ``phase``.

    Without ``phase`` the principal sheet ``|ph z| < pi`` is used.  Phases
    that are odd multiples of ``pi`` put the pole on the path.
    """
    n = _check_order(n)
    z = complex(z)
    if z == 0:
        raise DomainError("Lambda_n needs z != 0")
    if phase is None:
        phase = math.atan2(z.imag, z.real)
        if z.imag == 0.0 and z.real < 0.0:
            raise PoleOnPathError("ph z = pi puts the pole on the integration path")
    else:
        phase = float(phase)
        if abs(abs(z) * complex(math.cos(phase), math.sin(phase)) - z) > 1e-9 * abs(z):
            raise DomainError("phase is inconsistent with z")
    turns = math.floor((phase + math.pi) / (2.0 * math.pi))
    ph0 = phase - 2.0 * math.pi * turns
    if abs(abs(ph0) - math.pi) < 1e-12:
        raise PoleOnPathError("ph z is an odd multiple of pi: pole on the integration path")
    val = _principal(n, z, ph0)
    if turns:
        val += turns * monodromy_jump(n, z, 1)
    return val


def lambda_recurrence(n: int, z, lam_prev: complex) -> complex:
    """``Lambda_n = (z/n)(1 - Lambda_{n-1})`` from integration by parts."""
    return complex(z) / n * (1.0 - lam_prev)


def lateral_values(n: int, z) -> tuple[complex, complex]:
    """Both lateral Borel sums on the ray ``ph z = pi``.

    Returns ``(from_below, from_above)``: the limits of the principal
    value as ``ph z -> pi^-`` and ``ph z -> -pi^+``.
    """
    z = complex(z)
    return ray_integral(n, z, RAY_ANGLES[1]), ray_integral(n, z, RAY_ANGLES[0])


@dataclass
class ContinuationResult:
    value: complex
    residue_count: int
    switches: int
    max_switch_defect: float
    path: list = field(default_factory=list)


def continue_lambda(n: int, z, turns: float = 1.0, steps: int = 96) -> ContinuationResult:
    """Continue ``Lambda_n`` along ``z e^{i phi}``, ``phi`` from 0 to ``2 pi turns``.

    The value is carried as ``ray_integral(alpha) + c * 2 pi i * residue``.
    Whenever the pole comes within ``pi/6`` of the active ray the other
    ray is taken and ``c`` is updated by the residue the switch sweeps
    over.  ``max_switch_defect`` reports how well the two representations
    agreed at each switch.
    """
    n = _check_order(n)
    z = complex(z)
    ph0 = math.atan2(z.imag, z.real)
    if abs(abs(ph0) - math.pi) < 1e-12:
        raise PoleOnPathError("start point lies on the cut")
    r = abs(z)
    alpha = 0.0 if abs(ph0) <= 2.0 * math.pi / 3.0 else math.copysign(math.pi / 3.0, ph0)
    count = 0
    switches = 0
    defect = 0.0
    path = []
    total = 2.0 * math.pi * turns
    for j in range(steps + 1):
        ph = ph0 + total * j / steps
        zj = r * complex(math.cos(ph), math.sin(ph))
        pole = math.remainder(ph - math.pi, 2.0 * math.pi)
        if abs(math.remainder(pole - alpha, 2.0 * math.pi)) < math.pi / 6.0:
            new = -math.copysign(math.pi / 3.0, pole) if alpha == 0.0 else -alpha
            res = 2j * math.pi * residue_term(n, zj)
            old_val = ray_integral(n, zj, alpha) + count * res
            if min(alpha, new) < pole < max(alpha, new):
                # int_up - int_down = -2 pi i Res with the pole in between
                count += 1 if new > alpha else -1
            alpha = new
            switches += 1
            new_val = ray_integral(n, zj, alpha) + count * res
            defect = max(defect, abs(new_val - old_val) / max(abs(old_val), 1e-300))
        path.append((ph, alpha, count))
    value = ray_integral(n, zj, alpha) + count * 2j * math.pi * residue_term(n, zj)
    return ContinuationResult(value, count, switches, defect, path)


# --------------------------------------------------------------------------
# Dingle late terms and resummed tails

@dataclass(frozen=True)
class LateTermModel:
    """Late-term data for ``W_-`` at a point ``z``.

    ``F = (4/3) z^{3/2}`` is the singulant; ``s_max`` is the number of
    inner-sum terms kept; ``W_early[s] = u_s / zeta^s`` with
    ``zeta = F/2``.
    """

    F: complex
    s_max: int
    W_early: tuple[complex, ...]

    @classmethod
    def at(cls, z, s_max: int = DEFAULT_S_MAX, ph: float | None = None) -> "LateTermModel":
        z = complex(z)
        if z == 0:
            raise DomainError("late terms need z != 0")
        if ph is None:
            ph = math.atan2(z.imag, z.real)
        F = (4.0 / 3.0) * abs(z) ** 1.5 * complex(math.cos(1.5 * ph), math.sin(1.5 * ph))
        return cls.from_singulant(F, s_max)

    @classmethod
    def from_singulant(cls, F, s_max: int = DEFAULT_S_MAX) -> "LateTermModel":
        F = complex(F)
        if s_max < 1:
            raise DomainError("s_max must be >= 1")
        if F == 0:
            raise DomainError("singulant must be nonzero")
        zeta = F / 2.0
        u = airy_coefficients(s_max + 1)
        return cls(F, s_max, tuple(u[s] / zeta**s for s in range(s_max + 1)))

    def with_terms(self, s_max: int) -> "LateTermModel":
        return LateTermModel.from_singulant(self.F, s_max)


def late_term(model: LateTermModel, m: int) -> complex:
    """Dingle's late-term approximation of ``W_m``.

    ``W_m ~ (1/(2 pi F^m)) sum_{s<s_max} (-F)^s (m-s-1)! W_s``.
    """
    if m < M_MIN:
        raise DomainError(f"late-term formula needs m >= {M_MIN}, got {m}")
    F = model.F
    total = 0j
    for s in range(model.s_max):
        total += (-F) ** s * math.factorial(m - s - 1) * model.W_early[s]
    return total / (2.0 * math.pi * F**m)


def _tail_sum(model: LateTermModel, n: int, lam) -> complex:
    F = model.F
    total = 0j
    for s in range(model.s_max):
        k = n - s - 1
        total += (-F) ** s * math.factorial(k) * model.W_early[s] * lam(k)
    return total / (2.0 * math.pi * (-F) ** n)


def resum_tail(model: LateTermModel, n: int, check: bool = True) -> complex:
    """Borel-resummed tail ``sum_{m>=n} (-1)^m W_m`` for ``|ph F| < pi``.

    With ``check`` the result is accepted only if one more inner term
    changes it by less than ``STABILITY_TOL``, measured in units of
    ``W_0 = 1``.
    """
    F = model.F
    ph = math.atan2(F.imag, F.real)
    if F.imag == 0.0 and F.real < 0.0 or abs(abs(ph) - math.pi) < 1e-12:
        raise DomainError("resum_tail needs |ph F| < pi")
    if n <= model.s_max:
        raise DomainError("n must exceed s_max")
    value = _tail_sum(model, n, lambda k: lambda_n(k, F))
    if check and n > model.s_max + 1:
        more = _tail_sum(model.with_terms(model.s_max + 1), n, lambda k: lambda_n(k, F))
        if abs(more - value) > STABILITY_TOL:
            raise ConvergenceError(
                f"tail not stabilized: one more inner term moves it by {abs(more - value):.3g}")
    return value


def lateral_tails(model: LateTermModel, n: int) -> tuple[complex, complex]:
    """Resummed tail on the Stokes ray ``ph F = pi`` from both sides.

    Returns ``(below, above)``: limits as ``ph F -> pi^-`` and as
    ``ph F -> -pi^+`` of the principal sum, computed on rays rotated
    to either side of the pole.
    """
    if n <= model.s_max:
        raise DomainError("n must exceed s_max")
    below = _tail_sum(model, n, lambda k: ray_integral(k, model.F, RAY_ANGLES[1]))
    above = _tail_sum(model, n, lambda k: ray_integral(k, model.F, RAY_ANGLES[0]))
    return below, above


def stokes_discontinuity(model: LateTermModel) -> complex:
    """Predicted jump ``above - below`` of the principal tail across ``ph F = pi``.

    The residue relation applied to each ``Lambda_{n-s-1}(F)`` gives
    ``-i e^F sum_s W_s``, independent of ``n``.  The continued (smooth)
    tail therefore exceeds the principal one beyond the ray by
    ``+i e^F sum_s W_s``; multiplied by ``e^{-F/2}`` this is the ``i w_+``
    term switched on in the sector table.
    """
    return -1j * np.exp(model.F) * sum(model.W_early[: model.s_max])
