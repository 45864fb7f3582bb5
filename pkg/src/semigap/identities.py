"""
Hurwitz-zeta identities implied by two-generator semigroups.

``verify_dual_identity`` checks that the non-gap series expanded over the
residues of ``d2`` equals the expansion over the residues of ``d1``::

    d2**-n [zeta(n) + sum_{k<d2} zeta(n, k d1/d2)]
        == d1**-n [zeta(n) + sum_{k<d1} zeta(n, k d2/d1)]

``identity_from_gaps`` checks::

    sum_{k<d2} zeta(n, k d1/d2) == (d2**n - 1) zeta(n) - d2**n g_{-n}

with ``g_{-n}`` the exact rational gap sum.  The right-hand side cancels
catastrophically in double precision once ``d2**n`` is large, so it is
evaluated with ``zeta(n)`` split into an exact partial sum plus a Hurwitz
tail, and the exact part is carried in high-precision decimal arithmetic.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .hurwitz import UNIT_ROUNDOFF, hurwitz_zeta, riemann_zeta
from .semigroup import Semigroup2
from .series import g_minus_n_direct

__all__ = [
    "DEFAULT_TOLERANCE",
    "IdentityReport",
    "verify_dual_identity",
    "identity_from_gaps",
    "coprime_pairs",
    "scan_identities",
]

DEFAULT_TOLERANCE = 1e-12
MAX_ORDER = 64


@dataclass(frozen=True)
class IdentityReport:
    """Numerical check of one identity instance.

    ``budget`` is the rigorous sum of the error bounds of both sides.  The
    check passes when ``residual <= max(budget, tolerance * |lhs|)``, or,
    in strict mode, when ``residual <= budget``.
    """

    d1: int
    d2: int
    n: int
    kind: str
    lhs: float
    rhs: float
    residual: float
    budget: float
    tolerance: float
    passed: bool


def _report(d1, d2, n, kind, lhs, rhs, budget, tolerance, strict) -> IdentityReport:
    residual = abs(lhs - rhs)
    threshold = budget if strict else max(budget, tolerance * abs(lhs))
    return IdentityReport(
        d1=d1,
        d2=d2,
        n=n,
        kind=kind,
        lhs=lhs,
        rhs=rhs,
        residual=residual,
        budget=budget,
        tolerance=tolerance,
        passed=residual <= threshold,
    )


def _check_order(n: int) -> None:
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")


def _residue_sum(d1: int, d2: int, n: int) -> tuple[float, float]:
    """``sum_{k=1}^{d2-1} zeta(n, k d1/d2)`` and its error bound."""
    evals = [hurwitz_zeta(n, Fraction(k * d1, d2)) for k in range(1, d2)]
    value = math.fsum(e.value for e in evals)
    bound = math.fsum(e.error_bound for e in evals) + len(evals) * UNIT_ROUNDOFF * value
    return value, bound


def _dual_side(d1: int, d2: int, n: int) -> tuple[float, float]:
    zeta_n = riemann_zeta(n)
    total, total_err = _residue_sum(d1, d2, n)
    weight = float(Fraction(1, d2**n))
    inner = zeta_n.value + total
    value = weight * inner
    bound = weight * (zeta_n.error_bound + total_err) + 3 * UNIT_ROUNDOFF * value
    return value, bound


def verify_dual_identity(
    d1: int,
    d2: int,
    n: int,
    tolerance: float = DEFAULT_TOLERANCE,
    strict: bool = False,
) -> IdentityReport:
    """Check the identity between the two residue expansions of ``G_{-n}``.

    Swapping ``d1`` and ``d2`` swaps ``lhs`` and ``rhs`` and leaves the
    residual unchanged.
    """
    Semigroup2(d1, d2)
    _check_order(n)
    lhs, lhs_err = _dual_side(d1, d2, n)
    rhs, rhs_err = _dual_side(d2, d1, n)
    return _report(d1, d2, n, "dual", lhs, rhs, lhs_err + rhs_err, tolerance, strict)


def _gap_rhs(s: Semigroup2, n: int) -> tuple[float, float]:
    """``(d2**n - 1) zeta(n) - d2**n g_{-n}`` without cancellation loss.

    ``zeta(n) = H + zeta(n, c + 1)`` with ``H`` the exact partial sum to
    ``c = 64 d1``.  The Hurwitz tail then stays below the result, so the
    only rounding that matters is in the (well-conditioned) tail term.
    """
    d1, d2 = s.d1, s.d2
    g = g_minus_n_direct(s, n).exact
    scale = d2**n
    cut = 64 * d1
    digits = math.ceil(n * math.log10(max(d1, d2, cut))) + 40
    with localcontext() as ctx:
        ctx.prec = digits
        partial = sum(Decimal(1) / Decimal(m) ** n for m in range(1, cut + 1))
        exact_part = (scale - 1) * partial - scale * (Decimal(g.numerator) / g.denominator)
        # relative rounding per operation is 10**(1 - prec)
        decimal_err = float(4 * cut * scale * Decimal(10) ** (1 - digits))
        exact_float = float(exact_part)
    tail = hurwitz_zeta(n, cut + 1)
    weight = float(scale - 1)
    tail_term = weight * tail.value
    value = exact_float + tail_term
    bound = (
        weight * tail.error_bound
        + decimal_err
        + UNIT_ROUNDOFF * abs(exact_float)
        + 2 * UNIT_ROUNDOFF * abs(tail_term)
        + UNIT_ROUNDOFF * abs(value)
    )
    return value, bound


def identity_from_gaps(
    s: Semigroup2,
    n: int,
    tolerance: float = DEFAULT_TOLERANCE,
    strict: bool = False,
) -> IdentityReport:
    """Check ``sum_k zeta(n, k d1/d2) = (d2**n - 1) zeta(n) - d2**n g_{-n}``.

    For ``<2, 3>`` this is ``zeta(n, 2/3) + zeta(n, 4/3) = (3**n - 1) zeta(n) - 3**n``;
    for ``<3, 2>`` it is ``zeta(n, 3/2) = (2**n - 1) zeta(n) - 2**n``.
    """
    _check_order(n)
    lhs, lhs_err = _residue_sum(s.d1, s.d2, n)
    rhs, rhs_err = _gap_rhs(s, n)
    return _report(s.d1, s.d2, n, "gaps", lhs, rhs, lhs_err + rhs_err, tolerance, strict)


def coprime_pairs(dmax: int) -> list[tuple[int, int]]:
    """Coprime ``(d1, d2)`` with ``2 <= d1 < d2 <= dmax``, in lexicographic order."""
    return [
        (d1, d2)
        for d1 in range(2, dmax + 1)
        for d2 in range(d1 + 1, dmax + 1)
        if math.gcd(d1, d2) == 1
    ]


def _pair_reports(args) -> list[IdentityReport]:
    d1, d2, n, tolerance, strict = args
    return [
        verify_dual_identity(d1, d2, n, tolerance, strict),
        identity_from_gaps(Semigroup2(d1, d2), n, tolerance, strict),
    ]


def scan_identities(
    dmax: int,
    n_range: Iterable[int],
    tolerance: float = DEFAULT_TOLERANCE,
    strict: bool = False,
    jobs: int = 1,
) -> list[IdentityReport]:
    """Both identity kinds for every coprime pair up to ``dmax`` and each ``n``.

    Reports are ordered by ``(d1, d2, n, kind)`` whatever ``jobs`` is.
    """
    if dmax < 3:
        raise DomainError(f"dmax must be >= 3, got {dmax}")
    ns = sorted(set(n_range))
    if not ns or ns[0] < 2 or ns[-1] > MAX_ORDER:
        raise DomainError(f"n range must be a non-empty subset of [2, {MAX_ORDER}], got {ns}")
    tasks = [(d1, d2, n, tolerance, strict) for d1, d2 in coprime_pairs(dmax) for n in ns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_pair_reports, tasks, chunksize=8))
    else:
        chunks = [_pair_reports(t) for t in tasks]
    return [report for chunk in chunks for report in chunk]
