import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from evanescent import transport
from evanescent.eikonal import MediumConfig, RegionType
from evanescent.errors import CriticalIncidenceError, GrazingError, RegionError, SubcriticalError
from evanescent.profiles import GaussianProfile

CFG = MediumConfig(1.5, math.pi / 3)
F1, F2 = GaussianProfile(0.2, 0.8), GaussianProfile(-0.3, 1.1)


def test_coefficients():
    co = transport.coefficients(CFG)
    assert co.alpha_I * co.beta_I == pytest.approx(math.tan(math.pi / 3) ** 2)
    assert transport.coefficients(MediumConfig(1.5, math.pi / 4)).beta_I == pytest.approx(1.16741, abs=1e-5)
    assert co.alpha_S * co.beta_S == pytest.approx(-(1.5 * math.sin(math.pi / 3)) ** 2 / CFG.kappa**2)
    assert co.lambda_plus == -co.lambda_minus == pytest.approx(math.tan(math.pi / 3))


def test_coefficient_errors():
    with pytest.raises(GrazingError):
        transport.coefficients(MediumConfig(1.5, math.pi / 2))
    with pytest.raises(CriticalIncidenceError):
        transport.coefficients(MediumConfig(1.5, math.asin(1 / 1.5)))
    co = transport.coefficients(MediumConfig(1.5, 0.5))
    assert co.alpha_S is None
    with pytest.raises(SubcriticalError):
        co.shadow_speed


def test_characteristics():
    co = transport.coefficients(CFG)
    cp, cm = transport.characteristic_curves(co, 1.0)
    assert cp.value(cp.x_at(2.0), 2.0) == pytest.approx(1.0)
    assert cm.value(cm.x_at(2.0), 2.0) == pytest.approx(1.0)
    dx, dy = cp.direction
    assert math.hypot(dx, dy) == pytest.approx(1.0)


def test_gamma_reproduces_amplitudes():
    co = transport.coefficients(CFG)
    x, y = 0.4, 0.9
    p1, p2 = transport.p_representation(co, F1, F2, x, y)
    q = transport.gamma_matrix(co, y) @ np.array([p1, p2])
    a = transport.illuminated_amplitudes(co, F1, F2, x, y)
    assert q[0] == pytest.approx(a.g0)
    assert q[1] == pytest.approx(a.h0)


def _pair(p):
    return p.g0, p.h0


@pytest.mark.parametrize("y", [0.3, 1.5])
def test_illuminated_residual_second_order(y):
    co = transport.coefficients(CFG)
    hs = (1e-2, 1e-3, 1e-4)
    fn = lambda x, yy: _pair(transport.illuminated_amplitudes(co, F1, F2, x, yy))
    rs = [transport.transport_residual(fn, co, RegionType.HYPERBOLIC, 0.1, y, h) for h in hs]
    for i in (0, 1):
        assert transport.convergence_order(hs, [abs(r[i]) for r in rs]) == pytest.approx(2.0, abs=0.2)


@pytest.mark.parametrize("y", [-0.3, -1.0])
def test_shadow_residual_second_order(y):
    co = transport.coefficients(CFG)
    hs = (1e-2, 1e-3, 1e-4)
    fn = lambda x, yy: _pair(transport.shadow_amplitudes(co, F1, F2, x, yy))
    rs = [transport.transport_residual(fn, co, RegionType.ELLIPTIC, 0.1, y, h) for h in hs]
    for i in (0, 1):
        assert transport.convergence_order(hs, [abs(r[i]) for r in rs]) == pytest.approx(2.0, abs=0.2)


def test_opposite_shadow_sign_leaves_finite_residual():
    co = transport.coefficients(CFG)
    fn = lambda x, yy: _pair(transport.shadow_amplitudes(co, F1, F2, x, yy, h_sign=1))
    r = [transport.transport_residual(fn, co, RegionType.ELLIPTIC, 0.1, -0.4, h) for h in (1e-3, 1e-4)]
    assert abs(r[1][0]) > 0.1
    assert abs(r[1][0]) == pytest.approx(abs(r[0][0]), rel=1e-2)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.8, 1.5), st.floats(0.2, 2.0), st.floats(-1, 1))
def test_illuminated_residual_small(th, y, x):
    co = transport.coefficients(MediumConfig(1.5, th))
    fn = lambda xx, yy: _pair(transport.illuminated_amplitudes(co, F1, F2, xx, yy))
    ra, rb = transport.transport_residual(fn, co, RegionType.HYPERBOLIC, x, y, 1e-4)
    tol = 1e-6 * (1 + math.tan(th)) ** 3
    assert abs(ra) < tol and abs(rb) < tol


def test_region_guards():
    co = transport.coefficients(CFG)
    fn = lambda x, yy: _pair(transport.illuminated_amplitudes(co, F1, F2, x, yy))
    with pytest.raises(RegionError):
        transport.transport_residual(fn, co, RegionType.HYPERBOLIC, 0.0, 1e-5, 1e-4)
    with pytest.raises(RegionError):
        transport.transport_residual(fn, co, RegionType.ELLIPTIC, 0.0, 0.5, 1e-4)
    with pytest.raises(RegionError):
        transport.illuminated_amplitudes(co, F1, F2, 0.0, -1.0)
    with pytest.raises(RegionError):
        transport.shadow_amplitudes(co, F1, F2, 0.0, 1.0)
