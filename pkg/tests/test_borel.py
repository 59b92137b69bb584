import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from evanescent import airy, borel, oracles
from evanescent.errors import ConvergenceError, DomainError, PoleOnPathError


def test_lambda0_at_one():
    assert borel.lambda_n(0, 1.0).real == pytest.approx(0.5963473624, abs=1e-10)


@pytest.mark.parametrize("z", [0.3, 1.0, 2 + 1j, -3 + 0.5j, 5j, 20.0])
def test_lambda0_against_exponential_integral(z):
    assert abs(borel.lambda_n(0, z) - oracles.lambda0_exponential_integral(z)) <= 1e-12 * max(
        1.0, abs(borel.lambda_n(0, z)))


def test_lambda0_large_argument_tends_to_one():
    assert borel.lambda_n(0, 1e6) == pytest.approx(1.0, abs=2e-6)


@pytest.mark.parametrize("z", [1.0, 0.7 + 2j, -2 - 1j])
def test_recurrence(z):
    lam = borel.lambda_n(0, z)
    for n in (1, 2, 3):
        nxt = borel.lambda_n(n, z)
        assert nxt == pytest.approx(borel.lambda_recurrence(n, z, lam), rel=1e-10, abs=1e-12)
        lam = nxt


def test_pole_on_path():
    with pytest.raises(PoleOnPathError):
        borel.lambda_n(0, -2.0)


def test_monodromy_examples():
    assert borel.monodromy_jump(0, 1.0, 1) == pytest.approx(-2j * math.pi * math.e)
    assert abs(borel.monodromy_jump(0, 1.0, 1)) == pytest.approx(17.0795, abs=1e-4)
    assert borel.monodromy_jump(0, 1.0, -1) == pytest.approx(2j * math.pi * math.e)
    assert borel.monodromy_jump(1, 1.0, 1) == pytest.approx(2j * math.pi * math.e)
    with pytest.raises(DomainError):
        borel.monodromy_jump(0, 0.0, 1)
    with pytest.raises(DomainError):
        borel.monodromy_jump(0, 1.0, 2)


@pytest.mark.parametrize("r", [0.5, 1.0, 2.0, 4.0])
@pytest.mark.parametrize("ph", [0.0, math.pi / 4, math.pi / 2])
def test_continuation_matches_residue_bookkeeping(r, ph):
    z = cmath.rect(r, ph)
    for n in (0, 2):
        res = borel.continue_lambda(n, z, turns=1.0)
        expect = borel.lambda_n(n, z) + borel.monodromy_jump(n, z, 1)
        assert abs(res.value - expect) <= 1e-10 * max(1.0, abs(borel.lambda_n(n, z)))
        # counterclockwise: value = ray integral - 2 pi i Res
        assert res.residue_count == -1
        assert res.max_switch_defect < 1e-10


def test_continuation_backwards():
    z = 1.5
    res = borel.continue_lambda(0, z, turns=-1.0)
    assert res.value == pytest.approx(borel.lambda_n(0, z) + borel.monodromy_jump(0, z, -1), rel=1e-10)


def test_sheet_selection_by_phase():
    z = cmath.rect(2.0, 0.5)
    on_next = borel.lambda_n(0, z, phase=0.5 + 2 * math.pi)
    assert on_next == pytest.approx(borel.lambda_n(0, z) + borel.monodromy_jump(0, z, 1), rel=1e-11)


def test_late_term_single_inner_term():
    model = borel.LateTermModel.from_singulant(4 / 3, s_max=1)
    expect = math.factorial(19) / (4 / 3) ** 20 / (2 * math.pi)
    assert borel.late_term(model, 20).real == pytest.approx(expect, rel=1e-13)


def test_late_term_ratio():
    model = borel.LateTermModel.from_singulant(4.0, s_max=1)
    for m in (20, 40):
        assert borel.late_term(model, m + 1) / borel.late_term(model, m) == pytest.approx(m / 4.0)


def test_late_terms_approach_recurrence():
    model = borel.LateTermModel.at(3.0)
    prev = math.inf
    for m in range(25, 41):
        err = abs(borel.late_term(model, m) / airy.series_term(3.0, m) - 1)
        assert err < prev
        prev = err
    assert prev < 1e-5


def test_late_term_range():
    with pytest.raises(DomainError):
        borel.late_term(borel.LateTermModel.at(3.0), 9)
    with pytest.raises(DomainError):
        borel.LateTermModel.from_singulant(1.0, s_max=0)


def test_resummed_tail_reconstructs_w_minus():
    z, n = 6.0, 10
    model = borel.LateTermModel.at(z)
    exact = airy.ai_exact(z) * 2 * math.sqrt(math.pi) / airy.wkb_approximant(z, -1)
    truncated = airy.corrective_series(z, -1, n)
    tail = borel.resum_tail(model, n)
    assert abs(truncated + tail - exact) <= 1e-8
    assert abs(truncated + tail - exact) < abs(truncated - exact) / 100


def test_resum_tail_domain():
    model = borel.LateTermModel.from_singulant(-5.0)
    with pytest.raises(DomainError):
        borel.resum_tail(model, 10)
    with pytest.raises(DomainError):
        borel.resum_tail(borel.LateTermModel.at(4.0), 3)


def test_resum_tail_unstable_inner_sum():
    # at small |F| the inner sum has not settled; one more term moves the tail
    with pytest.raises(ConvergenceError):
        borel.resum_tail(borel.LateTermModel.from_singulant(2.0, s_max=1), 6)


def test_dingle_rule_homogeneous_phase_on_stokes_ray():
    model = borel.LateTermModel.from_singulant(-8.0)
    phases = [cmath.phase((-1) ** m * borel.late_term(model, m)) for m in range(10, 30)]
    for a, b in zip(phases, phases[1:]):
        assert abs(a - b) <= 1e-8


@pytest.mark.parametrize("F", [-8.0, -12.0])
def test_dingle_rule_jump_out_of_phase(F):
    model = borel.LateTermModel.from_singulant(F)
    below, above = borel.lateral_tails(model, 12)
    jump = above - below
    pred = borel.stokes_discontinuity(model)
    assert abs(jump - pred) <= 1e-8 * abs(pred)
    series_phase = cmath.phase(borel.late_term(model, 12) * (-1) ** 12)
    diff = abs(cmath.phase(jump) - series_phase)
    assert abs(diff - math.pi / 2) <= 1e-6


@settings(max_examples=25, deadline=None)
@given(st.floats(0.2, 5.0), st.floats(-2.5, 2.5))
def test_recurrence_property(r, th):
    z = cmath.rect(r, th)
    lam0 = borel.lambda_n(0, z)
    lam1 = borel.lambda_n(1, z)
    assert abs(lam1 - borel.lambda_recurrence(1, z, lam0)) <= 1e-10 * max(1.0, abs(lam1))
