"""Fibonacci numbers on the extended index range, and Fibonacci polynomials.

The index convention used throughout the package starts one step before the
usual seed pair: fib(-1) = 1, fib(0) = 0, fib(1) = 1.  Indices below -1 are
rejected.  All results are exact Python ints.
"""

from __future__ import annotations

import math

from .poly import IntPolynomial


def fib(n: int) -> int:
    """Fibonacci number with the extended anchor fib(-1) = 1, fib(0) = 0."""
    if n < -1:
        raise ValueError(f"Fibonacci index must be >= -1, got {n}")
    if n == -1:
        return 1
    prev, cur = 1, 0
    for _ in range(n):
        prev, cur = cur, prev + cur
    return cur


def binomial(a: int, b: int) -> int:
    """C(a, b) with the out-of-range convention C(a, b) = 0 for b < 0 or b > a.

    The convention lets double sums over (i, k) run without edge guards.
    """
    if a < 0:
        raise ValueError(f"binomial requires a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def fib_poly(n: int) -> IntPolynomial:
    """n-th Fibonacci polynomial by the recurrence.

    fib_poly(1) = 1, fib_poly(2) = x, fib_poly(n+1) = x*fib_poly(n) + fib_poly(n-1).
    The result has degree n - 1, and evaluating it at 1 gives fib(n).
    """
    if n < 1:
        raise ValueError(f"fib_poly index must be >= 1, got {n}")
    prev = IntPolynomial.one()
    if n == 1:
        return prev
    x = IntPolynomial.x()
    cur = x
    for _ in range(n - 2):
        prev, cur = cur, x * cur + prev
    return cur


def fib_poly_explicit(n: int) -> IntPolynomial:
    """Fibonacci polynomial of index n + 1 built directly from binomials.

    Returns sum over i of C(n-i, i) * x^(n-2i); independent of the recurrence
    route in fib_poly, so the two can cross-check each other.
    """
    if n < 0:
        raise ValueError(f"fib_poly_explicit index must be >= 0, got {n}")
    coeffs = [0] * (n + 1)
    for i in range(n // 2 + 1):
        coeffs[n - 2 * i] = binomial(n - i, i)
    return IntPolynomial(coeffs)


def shift_poly(p: IntPolynomial) -> IntPolynomial:
    """Exact composition p(x - 1)."""
    return p(IntPolynomial.x() - 1)
