"""Why the asymptotic form of Ai changes across ph z = 2 pi / 3.

Run with ``python demos/stokes_switching.py``.
"""
import math

import numpy as np

from evanescent import airy, borel

np.set_printoptions(precision=3)

# Walk round the circle |z| = 8.  The single exponential w_- is enough up
# to the first Stokes ray; past it the sector table adds i w_+.
r = 8.0
print("ph z     sector            switched err   unswitched err")
for ph in np.linspace(0.2, 2 * math.pi - 0.2, 12):
    z = r * complex(math.cos(ph), math.sin(ph))
    exact = airy.ai_exact(z)
    rep = airy.sector_of(ph)
    switched = abs(airy.ai_asymptotic(z, 6) - exact) / abs(exact)
    unswitched = abs(airy.ai_unswitched(z, 6) - exact) / abs(exact)
    print(f"{ph:5.2f}   {len(rep.terms)} term(s) {rep.dominance[0]:>12}   {switched:10.1e}   {unswitched:10.1e}")

# The unswitched error is tiny while w_+ is subdominant and becomes O(1)
# beyond the anti-Stokes ray ph z = pi, where both exponentials are the
# same size.

# Where does the jump come from?  The tail of the W_- series is a Borel
# sum with a pole at t = -F.  Continuing once round the origin picks up
# the residue:
z = 1.0
cont = borel.continue_lambda(0, z)
print("\nLambda_0(1)                  ", borel.lambda_n(0, z))
print("after one turn               ", cont.value)
print("predicted  -2 pi i z e^z     ", borel.monodromy_jump(0, z, 1))

# On the Stokes ray itself (ph F = pi) the two lateral sums differ by a
# term whose phase sits a quarter turn from the late terms: this is i w_+ in disguise.
model = borel.LateTermModel.from_singulant(-(4 / 3) * r**1.5)
below, above = borel.lateral_tails(model, 12)
print("\njump of the resummed tail    ", above - below)
print("residue prediction           ", borel.stokes_discontinuity(model))
print("late term (-1)^m W_m, m = 12 ", borel.late_term(model, 12))

# Dingle's late terms reproduce the exact coefficients once m is large.
model = borel.LateTermModel.at(3.0)
for m in (10, 20, 30, 40):
    ratio = borel.late_term(model, m) / airy.series_term(3.0, m)
    print(f"m = {m:2d}: late / exact = {ratio.real:.8f}")
