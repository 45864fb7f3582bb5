"""
Four routes to the gap series
=============================

``g_{-n}`` -- the sum of ``gap**-n`` -- can be summed directly, via a finite
harmonic form (n = 1), or via zeta closed forms in either generator order.
They should all agree.
"""

from semigap import (
    Semigroup2,
    g_minus_1_finite,
    g_minus_n_direct,
    g_minus_n_nonconverted,
    g_minus_n_zeta,
    psi_n,
    psi_n_series_form,
)

s = Semigroup2(5, 8)

direct = g_minus_n_direct(s, 1)
finite = g_minus_1_finite(s)
print(f"n=1 direct {direct.exact}  finite {finite.exact}  equal: {direct.exact == finite.exact}")

for n in (2, 3, 6):
    exact = g_minus_n_direct(s, n)
    a, b = g_minus_n_zeta(s, n, "A"), g_minus_n_zeta(s, n, "B")
    print(
        f"n={n}: exact {exact.value:.17g}  A {a.value:.17g} (+-{a.error_bound:.0e})"
        f"  B {b.value:.17g} (+-{b.error_bound:.0e})"
    )

###############################################################################
# Without the zeta conversion the series only converges like cutoff**(1-n).

for cutoff in (10, 100, 1000, 10000):
    approx = g_minus_n_nonconverted(s, 2, cutoff)
    print(f"  cutoff {cutoff:5d}: error {abs(approx - g_minus_n_direct(s, 2).value):.2e}")

###############################################################################
# The polylog-type generating function, by gaps and by its series form

for z in (0.3, 0.9):
    print(f"  psi_2({z}) = {psi_n(s, 2, z):.15f}  series {psi_n_series_form(s, 2, z):.15f}")
