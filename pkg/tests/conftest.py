import math

import mpmath
import pytest

from evanescent.eikonal import MediumConfig

mpmath.mp.dps = 30


def mp_ai(z):
    return complex(mpmath.airyai(mpmath.mpc(z.real, z.imag)))


def mp_aip(z):
    return complex(mpmath.airyai(mpmath.mpc(z.real, z.imag), derivative=1))


@pytest.fixture
def glass():
    """n = 1.5 at 60 degrees, k = 100: well inside total reflection."""
    return MediumConfig(1.5, math.pi / 3, 100.0)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for res in sorted(RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(res.line())
