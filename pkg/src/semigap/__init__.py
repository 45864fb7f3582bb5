"""
semigap: gaps and inverse-power gap series of numerical semigroups ``<d1, d2>``.

The gap series ``g_{-n} = sum over gaps g of g**-n`` is computed exactly as
a rational, through a finite harmonic-sum form, and through closed forms
in Riemann and Hurwitz zeta; the zeta identities these imply are checked
numerically with explicit error budgets.
"""

__version__ = "0.1.0"

from .errors import DomainError, GeneratorTooSmall, NotCoprime, SemigapError
from .semigroup import (
    GapSet,
    LatticeNode,
    Semigroup2,
    conductor,
    frobenius,
    g_n_nonneg,
    gap_generating_function,
    gaps,
    hilbert_series,
    is_member,
    lattice_nodes,
    new_semigroup,
)
from .hurwitz import ZetaEval, bernoulli_numbers, hurwitz_zeta, riemann_zeta
from .series import (
    Method,
    SeriesValue,
    big_g_minus_n,
    g_minus_1_finite,
    g_minus_n_direct,
    g_minus_n_nonconverted,
    g_minus_n_zeta,
    psi_n,
    psi_n_series_form,
    psi_n_series_tail_bound,
)
from .identities import (
    IdentityReport,
    coprime_pairs,
    identity_from_gaps,
    scan_identities,
    verify_dual_identity,
)
