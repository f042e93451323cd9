"""Convolved Fibonacci numbers by three independent routes.

``convolved_fib(r, m)`` is the coefficient of x^(m-1) in (1 - x - x^2)^(-r),
i.e. the m-th term of the r-fold convolution of the Fibonacci sequence with
itself.  Row r = 1 is the Fibonacci sequence.  The same numbers fall out of

* a double binomial sum (``convolved_fib_binomial``), and
* sums of principal minors of the build_F matrices
  (``convolved_fib_minor_route``),

which lets each route act as a check on the others.
"""

from __future__ import annotations

from .fib import binomial, fib, fib_poly, shift_poly
from .hessenberg import DEFAULT_MINOR_BOUND, build_F, minor_sums
from .poly import convolve


def convolved_series(r: int, length: int) -> list[int]:
    """First ``length`` coefficients of (1 - x - x^2)^(-r), exactly."""
    if r < 1:
        raise ValueError(f"convolution order must be >= 1, got {r}")
    if length < 0:
        raise ValueError(f"series length must be >= 0, got {length}")
    base = [fib(i + 1) for i in range(length)]
    series = base[:]
    for _ in range(r - 1):
        series = convolve(series, base, length)
    return series


def convolved_fib(r: int, m: int) -> int:
    """m-th convolved Fibonacci number of order r (r-1 exact convolutions).

    Equals the sum of fib(j_1+1)*...*fib(j_r+1) over all nonnegative tuples
    with j_1+...+j_r = m-1; order 1 collapses to fib(m), and the first term
    of every row is 1.
    """
    if m < 1:
        raise ValueError(f"series index must be >= 1, got {m}")
    return convolved_series(r, m)[m - 1]


def convolved_table(r_max: int, m_max: int) -> list[list[int]]:
    """Rows r = 1..r_max of convolved Fibonacci numbers, m = 1..m_max each."""
    if r_max < 1 or m_max < 1:
        raise ValueError("table bounds must be >= 1")
    base = [fib(i + 1) for i in range(m_max)]
    table = [base[:]]
    for _ in range(r_max - 1):
        table.append(convolve(table[-1], base, m_max))
    return table


def convolved_fib_binomial(n: int, k: int) -> int:
    """Convolved Fibonacci number of order k+1 at index n-k+1, via binomials.

    Computes sum over i of C(n-i, i) * C(n-2i, k); no series arithmetic, so it
    is independent of the convolution route.
    """
    if n < 0 or not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return sum(
        binomial(n - i, i) * binomial(n - 2 * i, k) for i in range((n - k) // 2 + 1)
    )


def convolved_fib_minor_route(
    n: int, k: int, bound: int = DEFAULT_MINOR_BOUND
) -> int:
    """Brute-force sum of the order-(n-k) principal minors of build_F(n).

    Agrees with convolved_fib(k+1, n-k+1); exponential in n, so treat it as
    the ground-truth side only.
    """
    if n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n}")
    if not (0 <= k <= n - 1):
        raise ValueError(f"need 0 <= k <= n-1, got n={n}, k={k}")
    return minor_sums(build_F(n), bound)[n - k]


def verify_charpoly_coefficients(n: int) -> bool:
    """Check the expansion of the shifted Fibonacci polynomial of index n+1.

    True iff the coefficient of x^k in fib_poly(n+1) composed with (x-1)
    equals (-1)^(n-k) * convolved_fib(k+1, n-k+1) for every k = 0..n.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    shifted = shift_poly(fib_poly(n + 1))
    return all(
        shifted.coefficient(k) == (-1) ** (n - k) * convolved_fib(k + 1, n - k + 1)
        for k in range(n + 1)
    )


def alternating_sum(n: int) -> int:
    """(-1)^n times the double sum of (-2)^k C(n-i, i) C(n-2i, k) over k and i."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    total = 0
    for k in range(n + 1):
        sign_pow = (-2) ** k
        for i in range((n - k) // 2 + 1):
            total += sign_pow * binomial(n - i, i) * binomial(n - 2 * i, k)
    return (-1) ** n * total


def verify_alternating_identity(n: int) -> bool:
    """True iff the alternating double sum collapses to fib(n+1)."""
    return alternating_sum(n) == fib(n + 1)
