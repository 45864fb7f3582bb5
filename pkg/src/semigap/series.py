"""
Inverse-power gap series ``g_{-n} = sum over gaps g of g**-n``.

Three independent routes are provided:

* ``g_minus_n_direct``: exact rational sum over the gap set;
* ``g_minus_1_finite``: exact harmonic-sum form for ``n = 1``, subtracting
  the lattice values of the semigroup below the conductor;
* ``g_minus_n_zeta``: closed forms in Riemann/Hurwitz zeta for ``n >= 2``,
  in either generator order.

Plus the non-gap series ``G_{-n} = zeta(n) - g_{-n}``, the generating
function ``Psi_n(z) = sum z**g / g**n`` and its three-series expansion.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import DomainError
from .hurwitz import UNIT_ROUNDOFF, hurwitz_zeta, riemann_zeta
from .semigroup import Semigroup2, gaps

__all__ = [
    "Method",
    "SeriesValue",
    "inverse_power_sum",
    "g_minus_n_direct",
    "g_minus_1_finite",
    "g_minus_n_zeta",
    "g_minus_n_nonconverted",
    "big_g_minus_n",
    "psi_n",
    "psi_n_series_form",
    "psi_n_series_tail_bound",
]


class Method(enum.Enum):
    DIRECT = "direct"
    FINITE_FORM = "finite"
    ZETA_A = "zeta-a"
    ZETA_B = "zeta-b"


@dataclass(frozen=True)
class SeriesValue:
    """A computed series value and the route that produced it.

    ``exact`` is set for the rational routes, in which case ``value`` is
    its correctly rounded double and ``error_bound`` is zero.
    """

    value: float
    method: Method
    exact: Fraction | None = None
    error_bound: float = 0.0

    @classmethod
    def from_exact(cls, exact: Fraction, method: Method) -> SeriesValue:
        return cls(value=float(exact), method=method, exact=exact, error_bound=0.0)


def _check_n(n: int, least: int) -> None:
    if n < least:
        raise DomainError(f"n must be >= {least}, got {n}")


def inverse_power_sum(values: Iterable[int], n: int) -> Fraction:
    """Exact ``sum(v**-n)`` over positive integers ``values``."""
    values = list(values)
    if not values:
        return Fraction(0)
    common = math.lcm(*values) ** n
    return Fraction(sum(common // v**n for v in values), common)


def g_minus_n_direct(s: Semigroup2, n: int) -> SeriesValue:
    """Exact ``sum(g**-n)`` over the gaps of ``s``.

    >>> g_minus_n_direct(Semigroup2(3, 4), 1).exact
    Fraction(17, 10)
    """
    _check_n(n, 1)
    return SeriesValue.from_exact(inverse_power_sum(gaps(s), n), Method.DIRECT)


def g_minus_1_finite(s: Semigroup2, cutoff: int | None = None) -> SeriesValue:
    """Exact ``g_{-1}`` as harmonic sum minus reciprocal lattice values.

    All integers up to ``cutoff`` (default: the conductor) are summed, and
    the reciprocals of the semigroup elements in that range are removed:
    the ``k2 >= 1`` part of the lattice and the ``k2 = 0`` row
    ``k1*d1``.  Any cutoff at or above the Frobenius number gives the same
    result.
    """
    if cutoff is None:
        cutoff = s.conductor
    if cutoff < s.frobenius:
        raise DomainError(f"cutoff must be >= the Frobenius number {s.frobenius}, got {cutoff}")
    d1, d2 = s.d1, s.d2
    harmonic = inverse_power_sum(range(1, cutoff + 1), 1)
    upper = [
        k1 * d1 + k2 * d2
        for k1 in range(d2)
        for k2 in range(1, (cutoff - k1 * d1) // d2 + 1)
    ]
    row_len = min(d2 - 1, cutoff // d1)
    row = inverse_power_sum(range(1, row_len + 1), 1) / d1
    exact = harmonic - inverse_power_sum(upper, 1) - row
    return SeriesValue.from_exact(exact, Method.FINITE_FORM)


def _zeta_form(d1: int, d2: int, n: int) -> tuple[float, float]:
    """``(1 - d2**-n) zeta(n) - d2**-n sum_k zeta(n, k d1/d2)`` and its bound."""
    zeta_n = riemann_zeta(n)
    hurwitz = [hurwitz_zeta(n, Fraction(k * d1, d2)) for k in range(1, d2)]
    weight = float(Fraction(1, d2**n))
    total = math.fsum(h.value for h in hurwitz)
    total_err = math.fsum(h.error_bound for h in hurwitz)
    value = math.fsum([zeta_n.value, -weight * zeta_n.value, -weight * total])
    bound = (
        zeta_n.error_bound
        + weight * total_err
        + 4 * UNIT_ROUNDOFF * (zeta_n.value + weight * (zeta_n.value + total))
    )
    return value, bound


def g_minus_n_zeta(s: Semigroup2, n: int, variant: str = "A") -> SeriesValue:
    """``g_{-n}`` from the zeta closed form, ``n >= 2``.

    Variant ``"A"`` expands over the residues of ``d2`` (Hurwitz arguments
    ``k*d1/d2``); variant ``"B"`` is the same formula with the generators
    interchanged.
    """
    _check_n(n, 2)
    variant = variant.upper()
    if variant == "A":
        value, bound = _zeta_form(s.d1, s.d2, n)
        method = Method.ZETA_A
    elif variant == "B":
        value, bound = _zeta_form(s.d2, s.d1, n)
        method = Method.ZETA_B
    else:
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    return SeriesValue(value=value, method=method, error_bound=bound)


def g_minus_n_nonconverted(s: Semigroup2, n: int, cutoff: int) -> float:
    """The three-series form of ``g_{-n}`` with every infinite sum truncated.

    ``sum_{k<=cutoff} k**-n`` minus the lattice part with
    ``1 <= k2 <= cutoff`` minus ``d1**-n sum_{k1<d2} k1**-n``.  Converges
    to ``g_{-n}`` like ``cutoff**(1-n)``.
    """
    _check_n(n, 2)
    if cutoff < 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff}")
    d1, d2 = s.d1, s.d2
    k = np.arange(1, cutoff + 1, dtype=float)
    head = np.sum(np.sort(k**-n))
    lattice = np.arange(d2, dtype=float)[:, None] * d1 + k[None, :] * d2
    lattice_sum = np.sum(np.sort((lattice**-n).ravel()))
    k1 = np.arange(1, d2, dtype=float)
    row = np.sum(k1**-n) / float(d1) ** n
    return float(head - lattice_sum - row)


def big_g_minus_n(s: Semigroup2, n: int) -> SeriesValue:
    """Non-gap series ``G_{-n} = sum over non-zero elements of s**-n``.

    Computed as ``zeta(n) - g_{-n}`` with the variant A closed form.  When
    ``G_{-n}`` is tiny the subtraction cancels; ``error_bound`` reflects it.
    """
    _check_n(n, 2)
    zeta_n = riemann_zeta(n)
    g = g_minus_n_zeta(s, n, "A")
    value = zeta_n.value - g.value
    bound = zeta_n.error_bound + g.error_bound + UNIT_ROUNDOFF * zeta_n.value
    return SeriesValue(value=value, method=Method.ZETA_A, error_bound=bound)


def psi_n(s: Semigroup2, n: int, z: float) -> float:
    """``Psi_n(z) = sum z**g / g**n`` over the gaps, for ``0 <= z <= 1``."""
    _check_n(n, 1)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"z must lie in [0, 1], got {z!r}")
    if z == 1.0:
        return g_minus_n_direct(s, n).value
    return math.fsum(z**g / g**n for g in gaps(s))


def psi_n_series_tail_bound(s: Semigroup2, n: int, z: float, cutoff: int) -> float:
    """Bound on the error of :func:`psi_n_series_form` at ``cutoff``."""
    if z == 0.0:
        return 0.0
    d2 = s.d2
    m = cutoff + 1
    harmonic_tail = z**m / (m**n * (1.0 - z))
    lattice_tail = d2 * z ** (m * d2) / ((m * d2) ** n * -math.expm1(d2 * math.log(z)))
    return harmonic_tail + lattice_tail


def _auto_cutoff(s: Semigroup2, n: int, z: float, target: float = 1e-17) -> int:
    cutoff = 1
    while psi_n_series_tail_bound(s, n, z, cutoff) > target:
        cutoff *= 2
    lo, hi = cutoff // 2, cutoff
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if psi_n_series_tail_bound(s, n, z, mid) > target:
            lo = mid
        else:
            hi = mid
    return max(hi, 1)


def psi_n_series_form(s: Semigroup2, n: int, z: float, cutoff: int | None = None) -> float:
    """``Psi_n(z)`` through its three-series expansion, ``0 <= z < 1``.

    ``sum_k z**k/k**n - d1**-n sum_{k1<d2} z**(k1 d1)/k1**n`` minus the
    lattice sum over ``k2 >= 1``; the infinite sums run to ``cutoff``.
    With ``cutoff=None`` the smallest cutoff whose
    :func:`psi_n_series_tail_bound` is below ``1e-17`` is used.
    """
    _check_n(n, 1)
    if not 0.0 <= z < 1.0:
        raise DomainError(f"z must lie in [0, 1), got {z!r}")
    if cutoff is None:
        cutoff = _auto_cutoff(s, n, z)
    if cutoff < 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff}")
    d1, d2 = s.d1, s.d2
    terms = [z**k / k**n for k in range(1, cutoff + 1)]
    terms += [-(z ** (k1 * d1)) / (k1 * d1) ** n for k1 in range(1, d2)]
    terms += [
        -(z**v) / v**n
        for k1 in range(d2)
        for v in range(k1 * d1 + d2, k1 * d1 + (cutoff + 1) * d2, d2)
    ]
    return math.fsum(terms)
