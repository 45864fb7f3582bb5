"""
Numerical semigroups generated by two coprime integers.

A semigroup ``<d1, d2>`` is the set of all ``k1*d1 + k2*d2`` with
``k1, k2 >= 0``.  Its complement in the positive integers (the gaps) is
finite; the largest gap is the Frobenius number ``d1*d2 - d1 - d2``.

Every element has exactly one representation with ``0 <= k1 <= d2 - 1``,
which gives both an O(1) membership test and a duplicate-free
enumeration of the elements through the lattice of such ``(k1, k2)``.
"""

from __future__ import annotations

import bisect
import heapq
import math
import threading
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .errors import DomainError, GeneratorTooSmall, NotCoprime

__all__ = [
    "Semigroup2",
    "GapSet",
    "LatticeNode",
    "new_semigroup",
    "frobenius",
    "conductor",
    "is_member",
    "gaps",
    "lattice_nodes",
    "hilbert_series",
    "gap_generating_function",
    "g_n_nonneg",
]


@dataclass(frozen=True)
class GapSet:
    """Sorted gaps of a semigroup."""

    gaps: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.gaps)

    def __len__(self) -> int:
        return len(self.gaps)

    def __contains__(self, x: object) -> bool:
        i = bisect.bisect_left(self.gaps, x)
        return i < len(self.gaps) and self.gaps[i] == x

    def __getitem__(self, i):
        return self.gaps[i]


class LatticeNode(NamedTuple):
    k1: int
    k2: int
    value: int


@dataclass(frozen=True)
class Semigroup2:
    """The semigroup generated by ``d1`` and ``d2``, in the order given.

    Use :func:`new_semigroup` (or the constructor) to build one; both
    validate the generators.  The gap set is computed on first use and
    cached on the instance.
    """

    d1: int
    d2: int
    _gaps: list = field(default_factory=list, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )

    def __post_init__(self):
        for d in (self.d1, self.d2):
            if isinstance(d, bool) or not isinstance(d, int):
                raise TypeError(f"generators must be integers, got {d!r}")
        if self.d1 < 2 or self.d2 < 2:
            raise GeneratorTooSmall(
                f"generators must be >= 2, got ({self.d1}, {self.d2})"
            )
        if math.gcd(self.d1, self.d2) != 1:
            raise NotCoprime(
                f"generators not coprime: gcd({self.d1}, {self.d2}) = "
                f"{math.gcd(self.d1, self.d2)}"
            )

    def swapped(self) -> Semigroup2:
        return Semigroup2(self.d2, self.d1)

    @property
    def frobenius(self) -> int:
        return self.d1 * self.d2 - self.d1 - self.d2

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def genus(self) -> int:
        return (self.d1 - 1) * (self.d2 - 1) // 2

    def __contains__(self, x: int) -> bool:
        return is_member(self, x)

    def gap_set(self) -> GapSet:
        if not self._gaps:
            with self._lock:
                if not self._gaps:
                    self._gaps.append(GapSet(_enumerate_gaps(self.d1, self.d2)))
        return self._gaps[0]


def new_semigroup(d1: int, d2: int) -> Semigroup2:
    """Validate ``(d1, d2)`` and return the semigroup they generate.

    Raises :class:`GeneratorTooSmall` if either generator is below 2 and
    :class:`NotCoprime` if they share a factor.

    >>> new_semigroup(5, 8)
    Semigroup2(d1=5, d2=8)
    """
    return Semigroup2(d1, d2)


def frobenius(s: Semigroup2) -> int:
    return s.frobenius


def conductor(s: Semigroup2) -> int:
    return s.conductor


def is_member(s: Semigroup2, x: int) -> bool:
    """True iff ``x`` is a non-negative combination of the generators.

    The unique ``k1`` in ``[0, d2 - 1]`` with ``x = k1*d1 (mod d2)`` is
    found with a modular inverse; ``x`` belongs to the semigroup exactly
    when ``k1*d1 <= x``.
    """
    if x < 0:
        raise DomainError(f"membership is defined for x >= 0, got {x}")
    k1 = (x * pow(s.d1, -1, s.d2)) % s.d2
    return k1 * s.d1 <= x


def _enumerate_gaps(d1: int, d2: int) -> tuple[int, ...]:
    c = d1 * d2 - d1 - d2 + 1
    member = bytearray(c)
    for k1 in range(min(d2, (c - 1) // d1 + 1)):
        member[k1 * d1 : c : d2] = b"\x01" * len(range(k1 * d1, c, d2))
    return tuple(x for x in range(1, c) if not member[x])


def gaps(s: Semigroup2) -> GapSet:
    """All gaps of ``s`` in ascending order.

    Memory and time are O(Frobenius number); the result is cached on ``s``.
    """
    return s.gap_set()


def lattice_nodes(s: Semigroup2, bound: int) -> list[LatticeNode]:
    """Lattice nodes ``(k1, k2)``, ``0 <= k1 < d2``, with value at most ``bound``.

    Nodes are returned in ascending order of value.  The values are
    exactly the semigroup elements ``<= bound``, each appearing once.
    """
    if bound < 0:
        raise DomainError(f"bound must be >= 0, got {bound}")
    d1, d2 = s.d1, s.d2

    def column(k1):
        base = k1 * d1
        return (LatticeNode(k1, k2, base + k2 * d2) for k2 in range((bound - base) // d2 + 1))

    columns = [column(k1) for k1 in range(min(d2, bound // d1 + 1))]
    return list(heapq.merge(*columns, key=lambda node: node.value))


def _check_open_unit(z: float) -> None:
    if not 0.0 <= z < 1.0:
        raise DomainError(f"z must lie in [0, 1), got {z!r}")


def hilbert_series(s: Semigroup2, z: float) -> float:
    """``(1 - z**(d1*d2)) / ((1 - z**d1) * (1 - z**d2))`` for ``0 <= z < 1``."""
    _check_open_unit(z)
    if z == 0.0:
        return 1.0
    log_z = math.log(z)

    def one_minus_pow(d):
        return -math.expm1(d * log_z)

    return one_minus_pow(s.d1 * s.d2) / (one_minus_pow(s.d1) * one_minus_pow(s.d2))


def gap_generating_function(s: Semigroup2, z: float) -> float:
    """Sum of ``z**g`` over the gaps ``g``."""
    _check_open_unit(z)
    return math.fsum(z**g for g in gaps(s))


def g_n_nonneg(s: Semigroup2, n: int) -> int:
    """Exact power sum of the gaps, ``sum(g**n)``; ``n = 0`` gives the genus."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}; use gap_series for negative powers")
    return sum(g**n for g in gaps(s))
