"""
Hurwitz zeta with an error bound
================================

``hurwitz_zeta`` returns a value together with a bound on
its absolute error.  Here we compare against closed forms and watch the
bound stay small across orders and shifts.
"""

import math
from fractions import Fraction

from semigap import bernoulli_numbers, hurwitz_zeta, riemann_zeta

print("B_0..B_12:", [str(b) for b in bernoulli_numbers(6)])

z2 = riemann_zeta(2)
print(f"zeta(2) = {z2.value!r}  pi^2/6 = {math.pi**2 / 6!r}  bound = {z2.error_bound:.1e}")

half = hurwitz_zeta(2, 0.5)
print(f"zeta(2, 1/2) = {half.value!r}  pi^2/2 = {math.pi**2 / 2!r}")

###############################################################################
# Rational shifts are accepted exactly; the bound accounts for rounding q.

for q in (Fraction(1, 3), Fraction(2, 3), Fraction(29, 30)):
    z = hurwitz_zeta(5, q)
    print(f"  zeta(5, {q}) = {z.value:.16e} +- {z.error_bound:.1e}")

###############################################################################
# The recurrence zeta(n, q) = q**-n + zeta(n, q + 1)

for n, q in [(2, 0.25), (7, 1.5), (30, 0.9)]:
    a, b = hurwitz_zeta(n, q), hurwitz_zeta(n, q + 1)
    print(f"  n={n:2d} q={q}: residual {abs(a.value - b.value - q**-n):.1e}")
