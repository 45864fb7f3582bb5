"""
Gaps of a two-generator semigroup
=================================

Which non-negative integers can be written as ``k1*d1 + k2*d2``?  For coprime
generators only finitely many cannot; this script lists them and walks the
lattice that enumerates the rest.
"""

import numpy as np

from semigap import Semigroup2, gaps, hilbert_series, gap_generating_function, lattice_nodes

s = Semigroup2(5, 8)
print(f"<{s.d1},{s.d2}>: frobenius={s.frobenius} conductor={s.conductor} genus={s.genus}")
print("gaps:", list(gaps(s)))

# every integer from the conductor on is a member
print("members 28..40:", all(x in s for x in range(28, 41)))

###############################################################################
# Lattice walk
# ------------
# Each member has exactly one representation with 0 <= k1 < d2.

for node in lattice_nodes(s, 24):
    print(f"  {node.value:3d} = {node.k1}*{s.d1} + {node.k2}*{s.d2}")

###############################################################################
# Generating functions
# --------------------
# Members and gaps split 1/(1-z) between them.

z = np.linspace(0.05, 0.95, 7)
h = np.array([hilbert_series(s, float(t)) for t in z])
phi = np.array([gap_generating_function(s, float(t)) for t in z])
print("max |H + Phi - 1/(1-z)|:", np.max(np.abs(h + phi - 1 / (1 - z))))
