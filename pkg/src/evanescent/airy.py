"""Airy function engine with sector-aware asymptotics.

Phases follow the ``ph z in [0, 2*pi)`` convention.  The asymptotic
representation of Ai switches on the Stokes rays ``2*pi/3`` and
``4*pi/3``::

    Ai(z) = w_-(z) / (2 sqrt(pi))                 0 <= ph z < 2pi/3
    Ai(z) = (w_-(z) + i w_+(z)) / (2 sqrt(pi))    2pi/3 < ph z < 4pi/3
    Ai(z) = w_-(z) / (2 sqrt(pi))                 4pi/3 < ph z < 2pi

with ``w_pm = z**(-1/4) exp(pm zeta) W_pm(z)``, ``zeta = (2/3) z**(3/2)``.
In the last sector ``w_-`` is the continuation of the first-sector
function clockwise through ``ph z = 0`` (which is not a Stokes ray of
Ai), so it is evaluated with phase ``ph z - 2*pi``; see
:class:`SectorRepresentation.eval_shift`.

Accurate values come from :func:`ai_exact` / :func:`ai_prime_exact`,
which combine a Maclaurin series, Taylor continuation of the Airy ODE
and optimally truncated asymptotics.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DivergenceError, DomainError, SingularityError, StokesRayError

TWO_PI = 2.0 * math.pi
STOKES_RAYS = (2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)
ANTI_STOKES_RAYS = (math.pi / 3.0, math.pi, 5.0 * math.pi / 3.0)

AI0 = 3.0 ** (-2.0 / 3.0) / math.gamma(2.0 / 3.0)
AIP0 = -(3.0 ** (-1.0 / 3.0)) / math.gamma(1.0 / 3.0)
BI0 = 3.0 ** (-1.0 / 6.0) / math.gamma(2.0 / 3.0)
BIP0 = 3.0 ** (1.0 / 6.0) / math.gamma(1.0 / 3.0)

# Radii of the three evaluation zones of ai_exact.
R_SERIES = 2.5
R_ASYMP = 8.0
ENVELOPE = 30.0
_STEP = 0.75
_RAY_TOL = 1e-12
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class SectorRepresentation:
    """Which asymptotic solutions represent Ai in a phase sector.

    ``terms`` holds ``(solution_id, coefficient)`` pairs with ids ``"w-"``
    and ``"w+"``; ``dominance`` is aligned with ``terms``.  ``eval_shift``
    is added to ``ph z`` before the multivalued powers are formed.
    """

    sector: tuple[float, float]
    terms: tuple[tuple[str, complex], ...]
    dominance: tuple[str, ...]
    eval_shift: float = 0.0


def _as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def phase(z) -> float:
    """Argument of ``z`` reduced to ``[0, 2*pi)``."""
    p = math.atan2(z.imag, z.real)
    if p < 0.0:
        p += TWO_PI
    if p >= TWO_PI:
        p -= TWO_PI
    return p


def _power(r: float, ph: float, p: float) -> complex:
    """``z**p`` for ``z = r e^{i ph}`` on the branch fixed by ``ph``."""
    return r**p * complex(math.cos(p * ph), math.sin(p * ph))


def zeta_of(z, ph: float | None = None) -> complex:
    """``(2/3) z**(3/2)`` on the branch fixed by ``ph`` (default ``[0, 2pi)``)."""
    z = complex(z)
    if ph is None:
        ph = phase(z)
    return (2.0 / 3.0) * _power(abs(z), ph, 1.5)


# --------------------------------------------------------------------------
# asymptotic coefficients

@lru_cache(maxsize=None)
def airy_coefficients(count: int) -> tuple[float, ...]:
    """First ``count`` coefficients ``u_m`` of the Airy asymptotic series.

    ``u_0 = 1`` and ``u_{m+1} = u_m (6m+1)(6m+5) / (72 (m+1))``; the series
    runs in powers of ``1/zeta``.
    """
    u = [1.0]
    for m in range(count - 1):
        u.append(u[-1] * (6 * m + 1) * (6 * m + 5) / (72.0 * (m + 1)))
    return tuple(u)


@lru_cache(maxsize=None)
def airy_prime_coefficients(count: int) -> tuple[float, ...]:
    """Coefficients ``v_m = -(6m+1)/(6m-1) u_m`` of the derivative series."""
    u = airy_coefficients(count)
    return tuple(-(6 * m + 1) / (6 * m - 1) * u[m] for m in range(count))


def series_term(z, m: int, ph: float | None = None) -> complex:
    """``W_m(z) = u_m / zeta**m``."""
    return airy_coefficients(m + 1)[m] / zeta_of(z, ph) ** m


# --------------------------------------------------------------------------
# WKB building blocks

def wkb_approximant(z, sign: int, ph: float | None = None) -> complex:
    """``z**(-1/4) exp(sign * (2/3) z**(3/2))``.

    ``ph`` overrides the ``[0, 2pi)`` phase of ``z`` and selects the sheet
    of the two fractional powers.
    """
    z = _as_complex(z)
    if z == 0:
        raise SingularityError("w_pm has a branch point at z = 0")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if ph is None:
        ph = phase(z)
    r = abs(z)
    return _power(r, ph, -0.25) * np.exp(sign * zeta_of(z, ph))


def corrective_series(z, sign: int, order: int, ph: float | None = None) -> complex:
    """Truncated corrective series ``sum_{m<order} (sign)^m W_m(z)``.

    Raises :class:`DivergenceError` when the last retained term is not
    smaller than the one before it, i.e. the truncation is already past
    the smallest term.
    """
    z = _as_complex(z)
    if order < 1:
        raise ValueError("order must be >= 1")
    if z == 0:
        raise SingularityError("corrective series undefined at z = 0")
    zeta = zeta_of(z, ph)
    u = airy_coefficients(order + 1)
    total = 0j
    prev = None
    for m in range(order):
        term = (sign ** m) * u[m] / zeta**m
        if prev is not None and abs(term) >= abs(prev):
            raise DivergenceError(
                f"asymptotic series diverging at term {m} for |z| = {abs(z):.4g}"
            )
        total += term
        prev = term
    return total


def _corrective_prime(z, sign: int, order: int, ph: float) -> complex:
    zeta = zeta_of(z, ph)
    v = airy_prime_coefficients(order)
    return sum((sign ** m) * v[m] / zeta**m for m in range(order))


# --------------------------------------------------------------------------
# sector table

def _on_ray(ph: float, rays) -> float | None:
    for ray in rays:
        if abs(ph - ray) < _RAY_TOL:
            return ray
    return None


def _dominance(ph_eval: float, sign: int) -> str:
    c = math.cos(1.5 * ph_eval)
    if abs(c) < 1e-12:
        return "comparable"
    # Re(sign * zeta) has the sign of sign * c
    return "dominant" if sign * c > 0 else "subdominant"


def sector_of(ph_z: float) -> SectorRepresentation:
    """Sector representation of Ai for ``ph_z`` in ``[0, 2pi)``.

    >>> sector_of(0.1).terms
    (('w-', (0.28209479177387814+0j)),)
    """
    ph_z = float(ph_z)
    if not 0.0 <= ph_z < TWO_PI:
        raise DomainError(f"phase {ph_z} outside [0, 2pi)")
    ray = _on_ray(ph_z, STOKES_RAYS)
    if ray is not None:
        raise StokesRayError(f"ph z = {ray:.6f} is a Stokes ray of Ai")
    c = 1.0 / (2.0 * _SQRT_PI)
    lo, hi = STOKES_RAYS
    if ph_z < lo:
        return SectorRepresentation((0.0, lo), (("w-", complex(c)),),
                                    (_dominance(ph_z, -1),))
    if ph_z < hi:
        if abs(ph_z - math.pi) < 1e-12:
            dom = ("comparable", "comparable")
        else:
            dom = (_dominance(ph_z, -1), _dominance(ph_z, 1))
        return SectorRepresentation((lo, hi), (("w-", complex(c)), ("w+", 1j * c)), dom)
    shift = -TWO_PI
    return SectorRepresentation((hi, TWO_PI), (("w-", complex(c)),),
                                (_dominance(ph_z + shift, -1),), eval_shift=shift)


def _solution(z, sid: str, order: int, ph: float) -> complex:
    sign = -1 if sid == "w-" else 1
    return wkb_approximant(z, sign, ph) * corrective_series(z, sign, order, ph)


def ai_asymptotic(z, order: int) -> complex:
    """Sector-correct truncated asymptotic value of Ai(z)."""
    z = _as_complex(z)
    if z == 0:
        raise SingularityError("no asymptotic representation at z = 0")
    ph = phase(z)
    rep = sector_of(ph)
    ph_eval = ph + rep.eval_shift
    return sum(coef * _solution(z, sid, order, ph_eval) for sid, coef in rep.terms)


def ai_unswitched(z, order: int, ph: float | None = None) -> complex:
    """Single-term ``w_-/(2 sqrt(pi))`` continued from ``ph z = 0`` without switching.

    Agrees with Ai only up to the first Stokes ray; used to exhibit the
    Stokes jump.
    """
    z = _as_complex(z)
    if ph is None:
        ph = phase(z)
    return _solution(z, "w-", order, ph) / (2.0 * _SQRT_PI)


# --------------------------------------------------------------------------
# accurate evaluation

def _taylor_step(z0: complex, w: complex, dw: complex, h: complex,
                 max_terms: int = 400) -> tuple[complex, complex]:
    """Advance a solution of ``w'' = z w`` from ``z0`` to ``z0 + h``."""
    a = [w, dw * h, 0.5 * z0 * w * h * h]
    val = a[0] + a[1] + a[2]
    der = a[1] + 2.0 * a[2]
    small = 0
    k = 1
    while k < max_terms:
        # a_{k+2} h^{k+2} from a_k h^k and a_{k-1} h^{k-1}
        nxt = (z0 * a[k] * h * h + a[k - 1] * h * h * h) / ((k + 2) * (k + 1))
        a.append(nxt)
        val += nxt
        der += (k + 2) * nxt
        scale = abs(val) + abs(der) + 1e-300
        if abs(nxt) * (k + 3) < 1e-18 * scale:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        k += 1
    return val, der / h


def _maclaurin(z: complex, w0: float, dw0: float) -> tuple[complex, complex]:
    if z == 0:
        return complex(w0), complex(dw0)
    return _taylor_step(0j, complex(w0), complex(dw0), z)


def _march(z_from: complex, z_to: complex, w: complex, dw: complex) -> tuple[complex, complex]:
    d = z_to - z_from
    nsteps = max(1, int(math.ceil(abs(d) / _STEP)))
    h = d / nsteps
    z = z_from
    for _ in range(nsteps):
        w, dw = _taylor_step(z, w, dw, h)
        z = z + h
    return w, dw


def _optimal_sum(zeta: complex, coeffs_fn, sign: int) -> complex:
    n = 2 * int(abs(zeta)) + 4
    c = coeffs_fn(n)
    total = 0j
    prev = math.inf
    for m in range(n):
        term = (sign ** m) * c[m] / zeta**m
        if abs(term) >= prev:
            break
        total += term
        prev = abs(term)
        if prev < 1e-18 * abs(total):
            break
    return total


def _asymptotic_pair(z: complex) -> tuple[complex, complex]:
    ph = phase(z)
    rep = sector_of(ph) if _on_ray(ph, STOKES_RAYS) is None else sector_of(ph + 1e-9)
    ph_eval = ph + rep.eval_shift
    r = abs(z)
    val = 0j
    der = 0j
    for sid, coef in rep.terms:
        sign = -1 if sid == "w-" else 1
        zeta = zeta_of(z, ph_eval)
        ex = np.exp(sign * zeta)
        val += coef * _power(r, ph_eval, -0.25) * ex * _optimal_sum(zeta, airy_coefficients, sign)
        der += coef * sign * _power(r, ph_eval, 0.25) * ex * _optimal_sum(
            zeta, airy_prime_coefficients, sign)
    return val, der


def _ai_pair(z) -> tuple[complex, complex]:
    z = _as_complex(z)
    r = abs(z)
    if r <= R_SERIES:
        return _maclaurin(z, AI0, AIP0)
    if r >= R_ASYMP:
        val, der = _asymptotic_pair(z)
        if not (np.isfinite(val) and np.isfinite(der)):
            raise DomainError(f"Ai overflows at |z| = {r:.4g}")
        return val, der
    u = z / r
    theta = math.atan2(z.imag, z.real)
    if abs(theta) <= math.pi / 3.0:
        # Ai is recessive along this ray: march inward from the asymptotic zone
        start = u * R_ASYMP
        w, dw = _asymptotic_pair(start)
        return _march(start, z, w, dw)
    start = u * R_SERIES
    w, dw = _maclaurin(start, AI0, AIP0)
    return _march(start, z, w, dw)


def ai_exact(z) -> complex:
    """Ai(z) to about 1e-13 relative accuracy for ``|z| <= 30``.

    Maclaurin series for ``|z| <= 2.5``; optimally truncated, sector
    switched asymptotics for ``|z| >= 8``; in between, Taylor continuation
    of the Airy equation along the ray through ``z``, marched in the
    direction in which Ai is not recessive.
    """
    return _ai_pair(z)[0]


def ai_prime_exact(z) -> complex:
    """Ai'(z); same method and accuracy as :func:`ai_exact`."""
    return _ai_pair(z)[1]


def ai_and_prime(z) -> tuple[complex, complex]:
    return _ai_pair(z)


def bi_exact(z) -> tuple[complex, complex]:
    """``(Bi(z), Bi'(z))`` for ``|z| <= 2.5`` or real ``z >= 0``.

    Only the ph z = 0 branch of the Bi representation is supported.
    """
    z = _as_complex(z)
    if abs(z) <= R_SERIES or (z.imag == 0.0 and z.real >= 0.0):
        if abs(z) < R_ASYMP:
            return _maclaurin(z, BI0, BIP0)
        x = z.real
        zeta = (2.0 / 3.0) * x**1.5
        ex = math.exp(zeta)
        val = x**-0.25 * ex * _optimal_sum(complex(zeta), airy_coefficients, 1) / _SQRT_PI
        der = x**0.25 * ex * _optimal_sum(complex(zeta), airy_prime_coefficients, 1) / _SQRT_PI
        return val, der
    raise DomainError("Bi is only provided on ph z = 0 and inside |z| <= 2.5")


def wronskian(z) -> complex:
    """``Ai Bi' - Ai' Bi``; equals ``1/pi``."""
    a, da = ai_and_prime(z)
    b, db = bi_exact(z)
    return a * db - da * b


def first_omitted_term(z, order: int, ph: float | None = None) -> float:
    """Magnitude of ``W_order(z)``, the first term left out at this order."""
    return abs(series_term(z, order, ph))


ai_exact_vec = np.vectorize(ai_exact, otypes=[complex])
ai_prime_exact_vec = np.vectorize(ai_prime_exact, otypes=[complex])
