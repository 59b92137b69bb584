import math

import numpy as np
import pytest

from evanescent.errors import DomainError, StripViolationError
from evanescent.profiles import (
    ConstantProfile,
    CustomProfile,
    GaussianProfile,
    RaisedCosineProfile,
    parse_profile,
)


def test_parse():
    assert isinstance(parse_profile("const"), ConstantProfile)
    assert parse_profile("const:2")(0.3) == 2.0
    g = parse_profile("gaussian:0.5,2")
    assert (g.x0, g.sigma) == (0.5, 2.0)
    rc = parse_profile("raised-cosine:0,1,0.2")
    assert rc.strip == 0.2
    for bad in ("gaussian:1", "wobble", "const:a", "raised-cosine:1"):
        with pytest.raises(DomainError):
            parse_profile(bad)


def test_describe_round_trip():
    g = GaussianProfile(0.25, 1.5)
    h = parse_profile(g.describe())
    assert (h.x0, h.sigma) == (0.25, 1.5)


def test_gaussian_complex_argument():
    g = GaussianProfile(0.0, 1.0)
    assert g(0.5j) == pytest.approx(math.exp(0.25))
    assert g(np.array([0.0, 1.0])).shape == (2,)


def test_strips():
    GaussianProfile().check_strip(100.0)
    rc = RaisedCosineProfile(0.0, 1.0)
    rc.check_strip(0.4)
    with pytest.raises(StripViolationError):
        rc.check_strip(np.array([0.1, 0.6]))
    cp = CustomProfile(lambda w: w)
    cp.check_strip(0.0)
    with pytest.raises(StripViolationError):
        cp.check_strip(0.1)


def test_raised_cosine_support_and_smoothness():
    rc = RaisedCosineProfile(0.0, 1.0)
    assert rc(0.0) == pytest.approx(1.0)
    assert rc(1.5) == 0.0
    h = 1e-6
    # value and slope vanish at the edge (C1 join)
    assert abs(rc(1.0 - h)) < 1e-10
    assert abs((rc(1.0 - h) - rc(1.0 - 2 * h)) / h) < 1e-5


def test_invalid_widths():
    with pytest.raises(DomainError):
        GaussianProfile(0.0, 0.0)
    with pytest.raises(DomainError):
        RaisedCosineProfile(0.0, -1.0)
