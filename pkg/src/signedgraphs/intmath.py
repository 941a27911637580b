"""Exact integer arithmetic for the root and ``1/e`` thresholds."""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def q_root(n: int, q: int) -> int:
    """Smallest ``r`` with ``r**q >= n``, i.e. ``ceil(n ** (1/q))`` exactly."""
    if n < 1 or q < 1:
        raise ValueError("need n >= 1 and q >= 1")
    lo, hi = 1, 1
    while hi**q < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**q >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def e_bounds(terms: int) -> tuple[Fraction, Fraction]:
    """Rational ``lo < e < hi`` from the first ``terms + 1`` series terms."""
    lo = sum(Fraction(1, factorial(j)) for j in range(terms + 1))
    return lo, lo + Fraction(1, factorial(terms) * terms)


def _at_least_root_over_e(m: int, n: int, d: int) -> bool:
    # decides m * e >= n ** (1/d), i.e. (m e)^d >= n; equality is impossible
    # for m >= 1 because e is transcendental
    if m <= 0:
        return n <= 0
    terms = 12
    while True:
        lo, hi = e_bounds(terms)
        if (m * lo) ** d >= n:
            return True
        if (m * hi) ** d < n:
            return False
        terms *= 2


def ceil_root_over_e(n: int, d: int) -> int:
    """``ceil(n ** (1/d) / e)`` computed without floating point."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    m = 1
    while not _at_least_root_over_e(m, n, d):
        m += 1
    return m


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
