"""Acceptance checks shared by the test suite and the ``verify`` scenario.

Each check returns a :class:`CriterionResult` with the measured
quantities; none of them raises on failure.
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import airy, borel, eikonal, field as fieldmod, goos, oracles, transport
from .eikonal import MediumConfig, RegionType
from .profiles import ConstantProfile, GaussianProfile


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    measured: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.number:2d} {self.name}: {self.detail}"

    def as_dict(self) -> dict:
        return asdict(self)


def _timed(fn):
    def wrapper(*a, **kw):
        t0 = time.perf_counter()
        res = fn(*a, **kw)
        res.seconds = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def check_phase_equivalence() -> CriterionResult:
    worst = 0.0
    t0 = time.perf_counter()
    for n in (1.33, 1.5, 2.4):
        tc = math.asin(1.0 / n)
        for th in np.linspace(tc + 1e-6, math.pi / 2 - 1e-6, 1000):
            cfg = MediumConfig(n, float(th))
            worst = max(worst, abs(fieldmod.reflection_phase(cfg) - fieldmod.fresnel_phase_oracle(cfg)))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-12 and dt < 1.0
    return CriterionResult(1, "reflection phase vs Fresnel", ok,
                           f"max |diff| = {worst:.2e} rad (tol 1e-12), {dt:.2f} s (< 1 s)",
                           {"max_abs_diff": worst, "runtime": dt})


@_timed
def check_phase_endpoints() -> CriterionResult:
    vals = {}
    ok = True
    for n in (1.33, 1.5, 2.4):
        d0 = fieldmod.reflection_phase(MediumConfig(n, math.asin(1.0 / n)))
        d1 = fieldmod.reflection_phase(MediumConfig(n, math.pi / 2 - 1e-6))
        vals[n] = (d0, d1 + math.pi)
        ok &= abs(d0) == 0.0 and abs(d1 + math.pi) <= 1e-3
    worst = max(abs(v[1]) for v in vals.values())
    return CriterionResult(2, "phase endpoints", ok,
                           f"delta(theta_crit) = 0 for all n; max |delta(pi/2 - 1e-6) + pi| = {worst:.2e} (tol 1e-3)",
                           {"endpoint_errors": {str(k): v for k, v in vals.items()}})


@_timed
def check_airy_oracle() -> CriterionResult:
    t0 = time.perf_counter()
    worst = 0.0
    where = None
    for r in np.geomspace(0.1, 25.0, 200):
        for j in range(8):
            z = r * complex(math.cos(j * math.pi / 4), math.sin(j * math.pi / 4))
            ref = oracles.ai_quadrature(z)
            err = abs(airy.ai_exact(z) - ref) / abs(ref)
            if err > worst:
                worst, where = err, z
    dt = time.perf_counter() - t0
    ok = worst <= 1e-10 and dt < 30.0
    return CriterionResult(3, "Ai against quadrature oracle", ok,
                           f"max rel err = {worst:.2e} (tol 1e-10) at z = {where:.4g}, {dt:.1f} s (< 30 s)",
                           {"max_rel_err": worst, "runtime": dt})


@_timed
def check_stokes_table() -> CriterionResult:
    sector_err = {}
    for ph in (math.pi / 3, math.pi, 5 * math.pi / 3, 0.1, 2.0, 4.5):
        z = 8.0 * complex(math.cos(ph), math.sin(ph))
        ex = airy.ai_exact(z)
        sector_err[round(ph, 4)] = abs(airy.ai_asymptotic(z, 6) - ex) / abs(ex)
    unswitched = 0.0
    for ph in np.linspace(2 * math.pi / 3 + 0.01, 4 * math.pi / 3 - 0.01, 60):
        z = 8.0 * complex(math.cos(ph), math.sin(ph))
        ex = airy.ai_exact(z)
        unswitched = max(unswitched, abs(airy.ai_unswitched(z, 6, ph) - ex) / abs(ex))
    worst = max(sector_err.values())
    ok = worst <= 1e-6 and unswitched >= 1e-2
    return CriterionResult(4, "Stokes sector table", ok,
                           f"order-6 max rel err at |z|=8 = {worst:.2e} (tol 1e-6); "
                           f"unswitched max rel err = {unswitched:.2e} (needs >= 1e-2)",
                           {"sector_errors": sector_err, "unswitched": unswitched})


@_timed
def check_monodromy() -> CriterionResult:
    worst = 0.0
    for z in (0.5, 1.0, 2.0, 4.0):
        lam0 = borel.lambda_n(0, z)
        cont = borel.continue_lambda(0, z, turns=1.0)
        expect = lam0 - 2j * math.pi * z * math.exp(z)
        worst = max(worst, abs(cont.value - expect) / abs(lam0))
    ok = worst <= 1e-10
    return CriterionResult(5, "Lambda_0 monodromy", ok,
                           f"max |continued - (Lambda_0 - 2 pi i z e^z)| / |Lambda_0| = {worst:.2e} (tol 1e-10)",
                           {"max_rel_err": worst})


@_timed
def check_late_terms() -> CriterionResult:
    model = borel.LateTermModel.at(3.0)
    ratios = {m: abs(borel.late_term(model, m) / airy.series_term(3.0, m) - 1.0) for m in range(25, 41)}
    seq = [ratios[m] for m in range(25, 41)]
    decreasing = all(b < a for a, b in zip(seq, seq[1:]))
    ok = ratios[25] <= 0.05 and decreasing
    return CriterionResult(6, "Dingle late terms", ok,
                           f"|ratio - 1| at m=25 = {ratios[25]:.2e} (tol 0.05), at m=40 = {ratios[40]:.2e}, "
                           f"decreasing: {decreasing}",
                           {"ratios": ratios})


@_timed
def check_eikonal_identities() -> CriterionResult:
    n = 1.5
    tc = math.asin(1 / n)
    worst = 0.0
    for region, thetas, ys in (
        ("illuminated", np.linspace(0.05, math.pi / 2 - 0.05, 50), np.linspace(0.01, 5.0, 50)),
        ("shadow", np.linspace(tc + 0.01, math.pi / 2 - 0.01, 50), np.linspace(-5.0, -0.01, 50)),
    ):
        for th in thetas:
            cfg = MediumConfig(n, float(th))
            for y in ys:
                g = eikonal.gradient_closed_form(cfg, 0.3, float(y))
                v = eikonal.v_field(cfg, float(y))
                nl = eikonal.local_index(cfg, float(y))
                rp, rm = eikonal.ray_speed_residual(g, v, nl)
                _, orth = eikonal.eikonal_residual(g, v, nl)
                worst = max(worst, abs(rp), abs(rm), abs(orth))
    ok = worst <= 1e-12
    return CriterionResult(7, "eikonal identities", ok,
                           f"max |grad Phi|^2 - n^2 and |grad u . grad v| over 2 x 50 x 50 = {worst:.2e} (tol 1e-12)",
                           {"max_abs": worst})


@_timed
def check_classification(seed: int = 20240601) -> CriterionResult:
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(100):
        n = float(rng.uniform(1.05, 3.0))
        tc = math.asin(1 / n)
        th = float(rng.uniform(tc + 0.01, math.pi / 2 - 0.01))
        cfg = MediumConfig(n, th)
        yp, ym = float(rng.uniform(0.01, 10)), float(-rng.uniform(0.01, 10))
        x = float(rng.uniform(-5, 5))
        bad += eikonal.classify_point(cfg, x, yp) != RegionType.HYPERBOLIC
        bad += eikonal.classify_point(cfg, x, ym) != RegionType.ELLIPTIC
        bad += eikonal.classify_point(cfg, x, 0.0) != RegionType.PARABOLIC
    return CriterionResult(8, "mixed-type classification", bad == 0,
                           f"{300 - bad}/300 points classified correctly over 100 random configs",
                           {"misclassified": bad})


def _pair(p):
    return p.g0, p.h0


@_timed
def check_transport_order() -> CriterionResult:
    cfg = MediumConfig(1.5, math.pi / 3)
    co = transport.coefficients(cfg)
    f1, f2 = GaussianProfile(0.2, 0.8), GaussianProfile(-0.3, 1.1)
    hs = (1e-2, 1e-3, 1e-4)
    orders = {}
    for label, region, y, fn in (
        ("illuminated", RegionType.HYPERBOLIC, 0.7,
         lambda x, y: _pair(transport.illuminated_amplitudes(co, f1, f2, x, y))),
        ("shadow", RegionType.ELLIPTIC, -0.4,
         lambda x, y: _pair(transport.shadow_amplitudes(co, f1, f2, x, y))),
    ):
        rs = [transport.transport_residual(fn, co, region, 0.1, y, h) for h in hs]
        orders[label + "_a"] = transport.convergence_order(hs, [abs(r[0]) for r in rs])
        orders[label + "_b"] = transport.convergence_order(hs, [abs(r[1]) for r in rs])
    ok = all(abs(o - 2.0) <= 0.2 for o in orders.values())
    txt = ", ".join(f"{k} {v:.3f}" for k, v in orders.items())
    return CriterionResult(9, "transport residual order", ok, f"fitted orders {txt} (2.0 +- 0.2)", orders)


@_timed
def check_evanescent_decay() -> CriterionResult:
    cfg = MediumConfig(1.5, math.pi / 3, 100.0)
    y = np.linspace(-0.05, -0.001, 50)
    psi = fieldmod.shadow_field(cfg, ConstantProfile(), np.full_like(y, 0.37), y)
    slope = float(np.polyfit(y, np.log(np.abs(psi)), 1)[0])
    expect = cfg.k * cfg.kappa
    rel = abs(slope - expect) / expect
    return CriterionResult(10, "evanescent decay rate", rel <= 1e-10,
                           f"fitted slope {slope:.12f} vs k kappa {expect:.12f}, rel err {rel:.2e} (tol 1e-10)",
                           {"slope": slope, "expected": expect, "rel_err": rel})


@_timed
def check_helmholtz_scaling() -> CriterionResult:
    cfg = MediumConfig(1.5, math.pi / 3, 100.0)
    t0 = time.perf_counter()
    rep = fieldmod.helmholtz_scaling(cfg, GaussianProfile(0.0, 0.3))
    dt = time.perf_counter() - t0
    ok = rep.slope is not None and abs(rep.slope + 1.0) <= 0.1 and dt < 120
    res = ", ".join(f"{r:.2e}" for r in rep.residuals)
    return CriterionResult(11, "Helmholtz residual scaling", ok,
                           f"slope {rep.slope:.3f} (target -1.0 +- 0.1) over k = {rep.ks}; residuals {res}; {dt:.1f} s",
                           {"slope": rep.slope, "residuals": rep.residuals, "runtime": dt})


@_timed
def check_boundary_matching() -> CriterionResult:
    cfg = MediumConfig(1.5, math.pi / 3, 100.0)
    lam = cfg.wavelength
    x = np.linspace(-5 * lam, 5 * lam, 100)
    rep = fieldmod.boundary_match(cfg, GaussianProfile(0.0, 2 * lam), x)
    slope = float(np.polyfit(np.log(rep.eps), np.log(rep.value_mismatch), 1)[0])
    ok = abs(slope - 1.0) <= 0.1 and all(b < a for a, b in zip(rep.value_mismatch, rep.value_mismatch[1:]))
    mm = ", ".join(f"{m:.2e}" for m in rep.value_mismatch)
    return CriterionResult(12, "boundary matching", ok,
                           f"max value mismatch {mm} at eps = {rep.eps}; slope {slope:.3f} (linear: 1 +- 0.1)",
                           {"slope": slope, "mismatch": rep.value_mismatch})


@_timed
def check_goos_hanchen() -> CriterionResult:
    cfg = MediumConfig(1.5, math.pi / 3, 100.0)
    tc = cfg.theta_crit
    deriv_err = 0.0
    for th in np.linspace(tc + 1e-3, math.pi / 2 - 1e-3, 200):
        c = cfg.replace(theta_i=float(th))
        a = goos.delta_derivative(c)
        deriv_err = max(deriv_err, abs(a - goos.delta_derivative_fd(c)) / abs(a))
    r = goos.shift(cfg)
    exact = r.D == r.X_bar * cfg.cos_t
    ratio = abs(r.D) / r.wavelength
    prods = []
    for th in np.linspace(tc + 1e-6, tc + 0.1, 100):
        c = cfg.replace(theta_i=float(th))
        prods.append(abs(goos.lateral_D(c)) * math.sqrt(th - tc))
    bounded = max(prods) < 10 * r.wavelength and min(prods) > 0
    b = goos.beam_shift(cfg)
    corr_ok = abs(b.measured - b.predicted) <= b.dx
    ok = deriv_err <= 1e-8 and exact and 0.1 < ratio < 10 and bounded and corr_ok
    return CriterionResult(
        13, "Goos-Hanchen shift", ok,
        f"d delta/d theta vs FD {deriv_err:.1e} (tol 1e-8); D = X cos exact: {exact}; |D|/lambda = {ratio:.3f}; "
        f"|D| sqrt(theta - theta_crit) in [{min(prods):.3g}, {max(prods):.3g}]; "
        f"beam lag {b.measured:.5f} vs |X| {b.predicted:.5f} (cell {b.dx:.5f})",
        {"deriv_err": deriv_err, "D_over_lambda": ratio, "beam_lag": b.measured, "X_bar": b.predicted,
         "cell": b.dx})


@_timed
def check_grazing() -> CriterionResult:
    cfg = MediumConfig(1.5, math.pi / 2 - 1e-9, 100.0)
    x = np.linspace(-1.0, 1.0, 101)
    y = np.linspace(0.01, 1.0, 50)
    weight = fieldmod.grazing_reflected_weight(cfg, ConstantProfile(), x, y)
    X, Y = np.meshgrid(x, y)
    single = np.allclose(fieldmod.illuminated_field(cfg, ConstantProfile(), X, Y),
                         fieldmod.grazing_field(cfg, ConstantProfile(), X, Y), rtol=0, atol=0)
    ok = weight <= 1e-6 and single
    return CriterionResult(14, "grazing degeneracy", ok,
                           f"reflected-term relative weight {weight:.2e} (tol 1e-6); single-term output: {single}",
                           {"weight": weight})


CHECKS = (
    check_phase_equivalence, check_phase_endpoints, check_airy_oracle, check_stokes_table,
    check_monodromy, check_late_terms, check_eikonal_identities, check_classification,
    check_transport_order, check_evanescent_decay, check_helmholtz_scaling,
    check_boundary_matching, check_goos_hanchen, check_grazing,
)


def run_all(verbose: bool = True) -> list[CriterionResult]:
    out = []
    for chk in CHECKS:
        res = chk()
        if verbose:
            print(res.line(), flush=True)
        out.append(res)
    return out
