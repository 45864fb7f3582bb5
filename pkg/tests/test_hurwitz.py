import json
import math
from fractions import Fraction
from pathlib import Path

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from semigap import DomainError, bernoulli_numbers, hurwitz_zeta, riemann_zeta

REFERENCE = json.loads((Path(__file__).parent / "data" / "zeta_reference.json").read_text())

PI2 = math.pi**2


def test_bernoulli_textbook_values():
    b = bernoulli_numbers(6)
    assert len(b) == 13
    assert b[0] == 1
    assert b[1] == Fraction(-1, 2)
    assert b[2] == Fraction(1, 6)
    assert b[4] == Fraction(-1, 30)
    assert b[6] == Fraction(1, 42)
    assert b[8] == Fraction(-1, 30)
    assert b[10] == Fraction(5, 66)
    assert b[12] == Fraction(-691, 2730)
    assert all(b[k] == 0 for k in range(3, 13, 2))


def test_bernoulli_small_count():
    assert bernoulli_numbers(1)[2] == Fraction(1, 6)
    assert bernoulli_numbers(2)[4] == Fraction(-1, 30)
    with pytest.raises(ValueError):
        bernoulli_numbers(0)


@pytest.mark.parametrize("j", range(1, 16))
def test_bernoulli_against_even_zeta(j):
    # B_2j = (-1)^(j+1) 2 (2j)! zeta(2j) / (2 pi)^(2j)
    mpmath.mp.dps = 50
    expected = (-1) ** (j + 1) * 2 * mpmath.factorial(2 * j) * mpmath.zeta(2 * j) / (2 * mpmath.pi) ** (2 * j)
    b = bernoulli_numbers(j)[2 * j]
    assert abs(mpmath.mpf(b.numerator) / b.denominator - expected) < mpmath.mpf(10) ** -40 * abs(expected)


@pytest.mark.parametrize(
    "n, q, expected",
    [
        (2, 1, PI2 / 6),
        (2, 0.5, PI2 / 2),
        (2, 1.5, PI2 / 2 - 4),
        (3, 2, 0.2020569031595943),
        (2, Fraction(3, 2), 0.9348022005446793),
    ],
)
def test_hurwitz_examples(n, q, expected):
    z = hurwitz_zeta(n, q)
    assert z.value == pytest.approx(expected, rel=1e-15, abs=1e-15)
    assert z.n == n and z.q == float(q)


def test_riemann_examples():
    assert riemann_zeta(2).value == pytest.approx(1.6449340668482264, rel=1e-15)
    assert riemann_zeta(4).value == pytest.approx(math.pi**4 / 90, rel=1e-15)
    # direct summation converges in a handful of terms at n = 20
    direct = math.fsum(k**-20.0 for k in range(1, 40))
    assert direct == pytest.approx(1.0000009539620338, rel=1e-16)
    assert riemann_zeta(20).value == pytest.approx(direct, rel=1e-15)


@pytest.mark.parametrize("n, q", [(1, 1.0), (0, 2.0), (-3, 1.0), (2, 0.0), (2, -1.5), (3, math.inf), (2, math.nan)])
def test_domain_errors(n, q):
    with pytest.raises(DomainError):
        hurwitz_zeta(n, q)


def test_riemann_rejects_n1():
    with pytest.raises(DomainError):
        riemann_zeta(1)


def test_non_integer_order():
    with pytest.raises(TypeError):
        hurwitz_zeta(2.5, 1.0)


@pytest.mark.parametrize("point", REFERENCE["points"], ids=lambda p: f"n{p['n']}-q{p['q']}")
def test_error_bound_covers_reference(point):
    n, q = point["n"], float(Fraction(point["q"]))
    mpmath.mp.dps = 60
    ref = mpmath.mpf(point["value"])
    z = hurwitz_zeta(n, q)
    assert abs(mpmath.mpf(z.value) - ref) <= z.error_bound
    assert z.error_bound <= 1e-13 * max(1.0, abs(z.value))


def _reference(n, q):
    mpmath.mp.dps = 50
    rough = mpmath.zeta(n, q)
    mpmath.mp.dps = 80 + 2 * int(abs(mpmath.log10(rough)))
    return mpmath.zeta(n, q)


@pytest.mark.parametrize("q", [Fraction(2, 3), Fraction(29, 30), Fraction(1, 30), Fraction(9, 4), Fraction(27, 7)])
@pytest.mark.parametrize("n", [2, 5, 10, 40])
def test_rational_argument_bound(n, q):
    # the bound must cover zeta at the exact rational, not just at float(q)
    z = hurwitz_zeta(n, q)
    ref = _reference(n, mpmath.mpf(q.numerator) / q.denominator)
    assert abs(mpmath.mpf(z.value) - ref) <= z.error_bound


@pytest.mark.parametrize("n", [2, 3, 7, 16, 33, 64])
@pytest.mark.parametrize("q", [1 / 64, 0.1, 0.77, 1.0, 2.5, 15.9, 17.0, 300.0])
def test_error_contract(n, q):
    z = hurwitz_zeta(n, q)
    assert z.error_bound <= 1e-13 * max(1.0, abs(z.value))
    assert abs(mpmath.mpf(z.value) - _reference(n, mpmath.mpf(q))) <= z.error_bound


def test_small_q_bound_scales_with_leading_term():
    z = hurwitz_zeta(4, 1e-3)
    assert z.value == pytest.approx(1e12, rel=1e-9)
    assert z.error_bound <= 1e-13 * z.value


@given(st.integers(2, 40), st.floats(1 / 64, 50.0))
def test_recurrence(n, q):
    a = hurwitz_zeta(n, q)
    b = hurwitz_zeta(n, q + 1.0)
    if q + 1.0 - 1.0 != q:
        return
    lead = q**-n
    slack = a.error_bound + b.error_bound + 2 * 2.0**-53 * (a.value + lead)
    assert abs(a.value - (b.value + lead)) <= slack


@pytest.mark.parametrize("n", range(2, 21))
def test_multiplication_theorem(n):
    half = hurwitz_zeta(n, 0.5).value
    assert half == pytest.approx((2**n - 1) * riemann_zeta(n).value, rel=1e-12)


@pytest.mark.parametrize("n", [2, 3, 8, 30])
def test_monotone_in_q(n):
    grid = np.linspace(0.05, 40.0, 300)
    values = [hurwitz_zeta(n, float(q)).value for q in grid]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("n, q", [(2, 1.0), (3, 1.5), (4, 2.0), (2, 7.25)])
def test_direct_summation_brackets(n, q):
    terms = 10**7
    k = np.arange(terms, dtype=float) + q
    partial = math.fsum(np.sort(k**-n))
    # the partial sum itself is accurate to (n + 2) u relative per term
    slack = (n + 4) * 2.0**-53 * partial
    lower = partial + (terms + q) ** (1 - n) / (n - 1) - slack
    upper = partial + (terms - 1 + q) ** (1 - n) / (n - 1) + slack
    z = hurwitz_zeta(n, q)
    assert lower - z.error_bound <= z.value <= upper + z.error_bound
