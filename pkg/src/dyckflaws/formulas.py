"""Closed-form counts and the row-polynomial recurrence.

Every rational prefactor is applied as an exact integer division that
fails hard when the division is not exact, so a mistranscribed formula
cannot silently truncate.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .polynomials import IntPolynomial


class NonIntegralError(ArithmeticError):
    """A supposedly integral formula produced a remainder."""


def exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise NonIntegralError(f"{numerator} not divisible by {denominator}")
    return q


def catalan(n: int) -> int:
    """comb(2n, n) / (n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return exact_div(comb(2 * n, n), n + 1)


def narayana_peak(n: int, k: int) -> int:
    """Catalan paths of semilength n with k peaks:
    comb(n-1, k-1) * comb(n, k-1) / k; zero outside 1 <= k <= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= k <= n:
        return 0
    return exact_div(comb(n - 1, k - 1) * comb(n, k - 1), k)


def narayana_ascent(n: int, k: int) -> int:
    """Catalan paths of semilength n with k double ascents:
    comb(n-1, k) * comb(n, k) / (k+1); zero outside 0 <= k <= n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n - 1:
        return 0
    return exact_div(comb(n - 1, k) * comb(n, k), k + 1)


def one_flaw_peak(n: int, k: int) -> int:
    """Paths with exactly one flaw and k peaks:
    2(n-k) * comb(n, k-1) * comb(n, k) / (n(n-1)); zero outside 1 <= k <= n-1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 1 <= k <= n - 1:
        return 0
    return exact_div(2 * (n - k) * comb(n, k - 1) * comb(n, k), n * (n - 1))


def peak_pair_sum(n: int, k: int) -> int:
    """The flaw-independent sum p(n,m,k) + p(n,m,n-k) for 1 <= m <= n-1:
    2(n+2) * comb(n, k-1) * comb(n, k+1) / (n(n-1)).

    At k = n/2 (even n) the sum counts the central coefficient twice.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 1 <= k <= n // 2:
        raise ValueError(f"k={k} outside 1..{n // 2}")
    return exact_div(2 * (n + 2) * comb(n, k - 1) * comb(n, k + 1), n * (n - 1))


def central_peak(n: int) -> int:
    """Paths of semilength 2n with any flaw count in 1..2n-1 and n peaks:
    comb(2n, n-1) * comb(2n, n) / (2n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return exact_div(comb(2 * n, n - 1) * comb(2 * n, n), 2 * n - 1)


def _flawless_base_poly(r: int) -> IntPolynomial:
    """sum over k of narayana_peak(r, k) x^(k-1); the all-flaw row polynomial."""
    if r == 0:
        return IntPolynomial.one()
    return IntPolynomial(narayana_peak(r, k) for k in range(1, r + 1))


@lru_cache(maxsize=None)
def recurrence_peak_poly(n: int, m: int) -> IntPolynomial:
    """The peak row polynomial computed purely from the recurrence.

    Base rows n == m come from the shifted Narayana polynomial b_r; for
    n > m the row is x * sum over i in 0..m, j in i..n-m+i-1 of
    b(m-i) * b(n-m+i-j-1) * row(j, i).
    """
    if not 0 <= m <= n:
        raise ValueError(f"flaw count {m} outside 0..{n}")
    if n == m:
        return _flawless_base_poly(n)
    acc = IntPolynomial()
    for i in range(m + 1):
        left = _flawless_base_poly(m - i)
        for j in range(i, n - m + i):
            acc = acc + left * _flawless_base_poly(n - m + i - j - 1) * recurrence_peak_poly(j, i)
    return acc.shifted(1)


def _recurrence_statement_form(n: int, m: int) -> IntPolynomial:
    """Same recurrence indexed as row(m+r, m) with j running 0..r-1."""
    if not 0 <= m <= n:
        raise ValueError(f"flaw count {m} outside 0..{n}")
    r = n - m
    if r == 0:
        return _flawless_base_poly(m)
    acc = IntPolynomial()
    for i in range(m + 1):
        for j in range(r):
            acc = acc + (
                _flawless_base_poly(m - i)
                * _flawless_base_poly(r - j - 1)
                * _recurrence_statement_form(j + i, i)
            )
    return acc.shifted(1)
