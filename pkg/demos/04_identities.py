"""
Zeta identities from semigroup gaps
===================================

Equating two evaluations of the gap series yields identities among Hurwitz
zeta values at rational shifts.  Each check reports a residual and the error
budget it is judged against.
"""

from collections import Counter

from semigap import Semigroup2, identity_from_gaps, scan_identities, verify_dual_identity

r = verify_dual_identity(3, 4, 5)
print(f"dual <3,4> n=5: lhs {r.lhs!r} rhs {r.rhs!r} residual {r.residual:.1e} budget {r.budget:.1e}")

# <2,3> has the single gap 1: zeta(n,2/3) + zeta(n,4/3) = (3**n - 1) zeta(n) - 3**n
for n in (2, 4, 8):
    r = identity_from_gaps(Semigroup2(2, 3), n)
    print(f"  n={n}: {r.lhs:.16e} vs {r.rhs:.16e}  passed={r.passed}")

###############################################################################
# A small scan over every coprime pair up to 10

reports = scan_identities(10, range(2, 7))
print(Counter((r.kind, r.passed) for r in reports))
worst = max(reports, key=lambda r: r.residual / abs(r.lhs))
print(f"worst relative residual: {worst.residual / abs(worst.lhs):.1e} at <{worst.d1},{worst.d2}> n={worst.n}")
