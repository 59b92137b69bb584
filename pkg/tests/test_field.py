import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from evanescent import field as F
from evanescent.eikonal import MediumConfig
from evanescent.errors import RegionError, ResolutionError, StripViolationError, SubcriticalError
from evanescent.profiles import ConstantProfile, GaussianProfile, RaisedCosineProfile

ONE = ConstantProfile()


def test_reflection_phase_example(glass):
    assert F.reflection_phase(glass) == pytest.approx(-1.670963748, abs=1e-9)
    assert F.reflection_phase(glass) == pytest.approx(F.fresnel_phase_oracle(glass), abs=1e-14)
    full = F.reflection_phase_full(glass)
    assert full.delta == pytest.approx(full.ratio_form, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.floats(1.01, 4.0), st.floats(1e-6, 1 - 1e-6))
def test_phase_matches_fresnel(n, frac):
    tc = math.asin(1 / n)
    cfg = MediumConfig(n, tc + frac * (math.pi / 2 - tc))
    assert abs(F.reflection_phase(cfg) - F.fresnel_phase_oracle(cfg)) <= 1e-12
    assert -math.pi <= F.reflection_phase(cfg) <= 0.0
    assert abs(F.fresnel_coefficient(cfg)) == pytest.approx(1.0, abs=1e-14)


def test_phase_endpoints():
    for n in (1.33, 1.5, 2.4):
        assert F.reflection_phase(MediumConfig(n, math.asin(1 / n))) == 0.0
        assert abs(F.reflection_phase(MediumConfig(n, math.pi / 2 - 1e-6)) + math.pi) <= 1e-3


def test_phase_below_critical_refused():
    with pytest.raises(SubcriticalError):
        F.reflection_phase(MediumConfig(1.5, 0.5))
    assert F.reflected_factor(MediumConfig(1.5, 0.5)) == pytest.approx(-1j)


def test_continuity_at_interface(glass):
    x = np.linspace(-1, 1, 7)
    up = F.illuminated_field(glass, ONE, x, np.full_like(x, 1e-12))
    down = F.shadow_field(glass, ONE, x, np.full_like(x, -1e-12))
    assert np.allclose(up, down, rtol=1e-9, atol=0)


def test_shadow_decay_rate(glass):
    y = np.linspace(-0.05, -0.001, 30)
    psi = F.shadow_field(glass, ONE, np.zeros_like(y), y)
    slope = np.polyfit(y, np.log(np.abs(psi)), 1)[0]
    assert slope == pytest.approx(glass.k * glass.kappa, rel=1e-10)
    assert glass.kappa == pytest.approx(0.8291562, abs=1e-7)


def test_shadow_strip_enforced():
    cfg = MediumConfig(1.5, math.pi / 3, 10.0)
    with pytest.raises(StripViolationError):
        F.shadow_field(cfg, RaisedCosineProfile(0.0, 0.2), np.zeros(3), np.array([-5.0, -1.0, -0.1]))


def test_region_guards(glass):
    with pytest.raises(RegionError):
        F.illuminated_field(glass, ONE, 0.0, -1.0)
    with pytest.raises(RegionError):
        F.shadow_field(glass, ONE, 0.0, 1.0)
    with pytest.raises(RegionError):
        F.field(glass, ONE, 0.0, 0.0)


def test_constant_cancels(glass):
    x = np.linspace(-1, 1, 5)
    a = F.shadow_profiles(glass, GaussianProfile(), 0.0)
    b = F.shadow_profiles(glass, GaussianProfile(), 0.7 - 0.2j)
    assert np.allclose(a[0](x) + a[1](x), b[0](x) + b[1](x), atol=1e-14)


def test_boundary_matching_linear(glass):
    lam = glass.wavelength
    x = np.linspace(-5 * lam, 5 * lam, 100)
    rep = F.boundary_match(glass, GaussianProfile(0.0, 2 * lam), x)
    slope = np.polyfit(np.log(rep.eps), np.log(rep.value_mismatch), 1)[0]
    assert slope == pytest.approx(1.0, abs=0.1)
    assert rep.phase_identity_residual < 1e-14
    assert rep.continuity_residual < 1e-12
    assert rep.shadow_relation_residual < 1e-14
    assert max(rep.derivative_mismatch) < rep.derivative_scale


def test_grazing_single_wave():
    cfg = MediumConfig(1.5, math.pi / 2 - 1e-9, 100.0)
    assert F.is_grazing(cfg)
    x = np.linspace(-1, 1, 21)
    y = np.linspace(0.01, 1, 11)
    assert F.grazing_reflected_weight(cfg, ONE, x, y) <= 1e-6
    X, Y = np.meshgrid(x, y)
    psi = F.illuminated_field(cfg, ONE, X, Y)
    assert np.array_equal(psi, F.grazing_field(cfg, ONE, X, Y))
    assert np.allclose(np.abs(psi), math.sqrt(2))


def test_grazing_weight_shrinks():
    x, y = np.linspace(-1, 1, 21), np.linspace(0.01, 1, 11)
    w = [F.grazing_reflected_weight(MediumConfig(1.5, math.pi / 2 - e, 100.0), ONE, x, y)
         for e in (1e-3, 1e-5, 1e-7)]
    assert w[0] > w[1] > w[2]


def test_sample_field_subcritical_is_unmodelled():
    cfg = MediumConfig(1.5, 0.5, 10.0)
    grid = F.sample_field(cfg, ONE, np.linspace(-1, 1, 4), np.array([-0.5, 0.0, 0.5]))
    assert grid.metadata["dropped_interface_rows"] == 1
    assert list(grid.region[:, 0]) == ["unmodelled", "illuminated"]
    assert np.all(np.isnan(grid.psi[0])) and np.all(np.isfinite(grid.psi[1]))


def test_normalisation(glass):
    a = F.illuminated_field(glass, ONE, 0.3, 0.2)
    b = F.illuminated_field(glass, ONE, 0.3, 0.2, psi0=2 * math.sqrt(glass.k))
    assert b == pytest.approx(2 * a)


def test_helmholtz_plane_wave_floor(glass):
    h = glass.wavelength / 20
    x = np.arange(-0.2, 0.2, h)
    assert F.helmholtz_residual(glass, ONE, x, np.arange(0.1, 0.2, h)) < 1e-12
    assert F.helmholtz_residual(glass, ONE, x, np.arange(-0.2, -0.1, h), form="shadow") < 1e-12


def test_helmholtz_resolution_guard(glass):
    h = glass.wavelength / 5
    with pytest.raises(ResolutionError):
        F.helmholtz_residual(glass, ONE, np.arange(0, 1, h), np.arange(0.1, 1, h))


def test_helmholtz_residual_decreases_with_k(glass):
    rep = F.helmholtz_scaling(glass, GaussianProfile(0.0, 0.3), ks=(50, 100, 200))
    assert rep.residuals[0] > rep.residuals[1] > rep.residuals[2]
    # amplitudes transported along their own rays: residual ~ k^-2
    assert rep.slope == pytest.approx(-2.0, abs=0.1)
