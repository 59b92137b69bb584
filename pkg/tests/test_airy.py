import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from evanescent import airy
from evanescent.errors import DivergenceError, DomainError, SingularityError, StokesRayError

from conftest import mp_ai, mp_aip


def polar(r, ph):
    return r * complex(math.cos(ph), math.sin(ph))


def test_values_at_origin():
    assert airy.ai_exact(0) == pytest.approx(0.3550280538878172, rel=1e-15)
    assert airy.ai_prime_exact(0) == pytest.approx(-0.2588194037928068, rel=1e-15)


def test_coefficients_recurrence():
    u = airy.airy_coefficients(4)
    assert u[0] == 1.0
    assert u[1] == pytest.approx(5 / 72)
    assert u[2] == pytest.approx(385 / 10368)
    assert u[3] / u[2] == pytest.approx(13 * 17 / (72 * 3))


def test_first_corrective_term_uses_zeta():
    # W_1 = u_1 / zeta with zeta = (2/3) z^{3/2}
    z = 4.0
    assert airy.series_term(z, 1) == pytest.approx((5 / 72) / ((2 / 3) * 8.0))


@pytest.mark.parametrize("ph", [0.0, 0.3, 1.0, 2.5, math.pi, 4.0, 5.5, 6.2])
@pytest.mark.parametrize("r", [0.05, 1.0, 2.4, 2.6, 5.0, 7.9, 8.1, 15.0, 25.0])
def test_ai_exact_against_mpmath(r, ph):
    z = polar(r, ph)
    ref = mp_ai(z)
    assert abs(airy.ai_exact(z) - ref) <= 1e-12 * abs(ref)
    refp = mp_aip(z)
    assert abs(airy.ai_prime_exact(z) - refp) <= 1e-12 * abs(refp)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.01, 20.0), st.floats(0.0, 2 * math.pi, exclude_max=True))
def test_ai_exact_random_points(r, ph):
    z = polar(r, ph)
    ref = mp_ai(z)
    assert abs(airy.ai_exact(z) - ref) <= 1e-11 * abs(ref)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.1, 6.0), st.floats(0.0, 2 * math.pi, exclude_max=True))
def test_airy_equation_residual(r, ph):
    # Ai'' = z Ai, checked by a central difference of Ai'
    z = polar(r, ph)
    h = 1e-5
    d2 = (airy.ai_prime_exact(z + h) - airy.ai_prime_exact(z - h)) / (2 * h)
    assert abs(d2 - z * airy.ai_exact(z)) <= 1e-7 * max(1.0, abs(z * airy.ai_exact(z)))


@pytest.mark.parametrize("z", [0.5, 1.0, 2.0, 2.0j, 5.0, 9.0])
def test_wronskian(z):
    assert airy.wronskian(z) == pytest.approx(1 / math.pi, rel=1e-11)


def test_sector_table():
    assert [sid for sid, _ in airy.sector_of(0.5).terms] == ["w-"]
    mid = airy.sector_of(math.pi)
    assert [sid for sid, _ in mid.terms] == ["w-", "w+"]
    assert mid.terms[1][1] == pytest.approx(1j * mid.terms[0][1])
    assert mid.dominance == ("comparable", "comparable")
    last = airy.sector_of(5.0)
    assert last.eval_shift == pytest.approx(-2 * math.pi)
    with pytest.raises(StokesRayError):
        airy.sector_of(2 * math.pi / 3)
    with pytest.raises(DomainError):
        airy.sector_of(7.0)


def test_dominance_on_positive_axis():
    assert airy.sector_of(0.0).dominance == ("subdominant",)
    assert airy.sector_of(2.0).dominance == ("dominant",)
    assert airy.sector_of(2.5).dominance == ("dominant", "subdominant")


@pytest.mark.parametrize("ph", [0.2, 1.0, 2.2, 3.0, math.pi, 3.5, 4.3, 5.0, 6.0])
def test_asymptotic_accuracy_order6(ph):
    z = polar(8.0, ph)
    assert abs(airy.ai_asymptotic(z, 6) - airy.ai_exact(z)) <= 1e-6 * abs(airy.ai_exact(z))


def test_error_tracks_first_omitted_term():
    z = 10.0
    for order in (2, 4, 6):
        err = abs(airy.ai_asymptotic(z, order) / airy.ai_exact(z) - 1)
        assert err < 2 * airy.first_omitted_term(z, order)


def test_unswitched_fails_beyond_stokes_ray():
    z = polar(8.0, math.pi)
    ex = airy.ai_exact(z)
    assert abs(airy.ai_unswitched(z, 6) - ex) / abs(ex) > 0.5
    # before the Stokes ray the two agree
    z = polar(8.0, 1.0)
    assert airy.ai_unswitched(z, 6) == pytest.approx(airy.ai_asymptotic(z, 6))


def test_divergence_detected():
    with pytest.raises(DivergenceError):
        airy.corrective_series(0.5, -1, 10)


def test_singular_at_origin():
    with pytest.raises(SingularityError):
        airy.wkb_approximant(0.0, 1)
    with pytest.raises(SingularityError):
        airy.ai_asymptotic(0.0, 3)


def test_conjugate_symmetry():
    for z in (3 + 4j, -6 + 1j, 10 - 2j):
        assert airy.ai_exact(z.conjugate()) == pytest.approx(airy.ai_exact(z).conjugate(), rel=1e-12)


def test_vectorised():
    z = np.array([0.5, 1 + 1j, -3.0])
    out = airy.ai_exact_vec(z)
    assert out.shape == (3,)
    assert out[2] == pytest.approx(mp_ai(-3.0 + 0j), rel=1e-12)


def test_phase_range():
    assert airy.phase(-1 - 1e-300j) < 2 * math.pi
    assert airy.phase(complex(1, -0.0)) == 0.0
    assert airy.phase(cmath.rect(1, -0.5)) == pytest.approx(2 * math.pi - 0.5)
