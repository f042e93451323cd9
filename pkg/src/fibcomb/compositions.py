"""The triangle c(n, k): compositions of n with exactly k parts equal to 1.

Five independent routes compute the same triangle (OEIS A105422):

* ``c_bruteforce``   - enumerate all 2^(n-1) compositions and count;
* ``c_formula``      - coefficient extraction from powers of the series
                       G(x) = 1 + x^2/(1 - x - x^2);
* ``c_recurrence``   - memoized recurrence peeling off the first part equal
                       to 1;
* ``bitstring_singles_oracle`` - count bit strings that start with 0 and
                       have exactly k maximal runs of length 1;
* ``c_minor_route``  - brute-force principal-minor sums of build_G(n).

Boundary conventions: c(0, 0) = 1 (the empty composition), and c(m, k) = 0
for k < 0, k > m, or m < 0.  Row 0 of the bit-string route counts the empty
string, which has no runs; that anchors the same convention.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache
from math import prod

from .fib import fib
from .hessenberg import (
    DEFAULT_MINOR_BOUND,
    EnumerationBoundError,
    build_G,
    check_minor_bound,
    minor_sums,
)
from .poly import convolve

# 2^(n-1) compositions / bit strings per row; refuse targets above this
# unless the caller raises the bound explicitly.
DEFAULT_COMPOSITION_BOUND = 24

Composition = tuple[int, ...]

ROUTES = ("bruteforce", "formula", "recurrence", "bitstring", "minors")


def _check_target(n: int, bound: int) -> None:
    if n < 0:
        raise ValueError(f"target must be >= 0, got {n}")
    if n > bound:
        raise EnumerationBoundError(
            f"target {n} exceeds the enumeration bound {bound} "
            f"(2^(n-1) items); pass a larger bound to force it"
        )


def _check_nk(n: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"target must be >= 0, got {n}")
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def enumerate_compositions(
    n: int, bound: int = DEFAULT_COMPOSITION_BOUND
) -> Iterator[Composition]:
    """All ordered tuples of positive parts summing to n, each exactly once.

    n = 0 yields the single empty composition; n >= 1 yields 2^(n-1) tuples.
    """
    _check_target(n, bound)
    return _compositions(n)


def _compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def c_bruteforce(n: int, k: int, bound: int = DEFAULT_COMPOSITION_BOUND) -> int:
    """Count compositions of n with exactly k ones by full enumeration."""
    _check_nk(n, k)
    return sum(1 for comp in enumerate_compositions(n, bound) if comp.count(1) == k)


def _ones_series(length: int) -> list[int]:
    # G(x) = sum_m fib(m-1) x^m = 1 + x^2/(1 - x - x^2): the generating
    # function of compositions with no part equal to 1, plus the empty one.
    return [fib(m - 1) for m in range(length)]


def c_formula(n: int, k: int) -> int:
    """c(n, k) as the coefficient of x^(n-k) in G(x)^(k+1).

    Equivalent to summing fib(j_1)*...*fib(j_{k+1}) over tuples with every
    j_t >= -1 and j_1+...+j_{k+1} = n-2k-1, but costs k truncated
    convolutions instead of an exponential tuple scan.
    """
    _check_nk(n, k)
    length = n - k + 1
    g = _ones_series(length)
    series = g[:]
    for _ in range(k):
        series = convolve(series, g, length)
    return series[n - k]


def _signed_tuples(parts: int, total: int) -> Iterator[tuple[int, ...]]:
    # every tuple of `parts` integers >= -1 summing to `total`
    if parts == 1:
        if total >= -1:
            yield (total,)
        return
    for j in range(-1, total + parts):
        for rest in _signed_tuples(parts - 1, total - j):
            yield (j,) + rest


def c_formula_naive(n: int, k: int) -> int:
    """Slow reference for c_formula: literal sum over the index tuples."""
    _check_nk(n, k)
    return sum(
        prod(fib(j) for j in t) for t in _signed_tuples(k + 1, n - 2 * k - 1)
    )


def c_formula_wrong_index(n: int, k: int) -> int:
    """Variant of c_formula with the tuple-sum constraint shifted to n-2k+1.

    Kept as a counterexample generator: it does NOT count compositions (at
    n=3, k=1 it yields 5 where the true count is 2; at k=0 it yields
    fib(n+1) instead of fib(n-1)).
    """
    _check_nk(n, k)
    length = n - k + 3
    g = _ones_series(length)
    series = g[:]
    for _ in range(k):
        series = convolve(series, g, length)
    return series[n - k + 2]


@cache
def _c_rec(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if k == 0:
        return fib(n - 1)
    # split at the first part equal to 1: a 1-free prefix summing to j+1,
    # then the 1, then a composition of n-j-2 with k-1 ones
    return sum(fib(j) * _c_rec(n - j - 2, k - 1) for j in range(-1, n - k))


def c_recurrence(n: int, k: int) -> int:
    """c(n, k) by the memoized first-one recurrence, base row c(m, 0) = fib(m-1)."""
    _check_nk(n, k)
    return _c_rec(n, k)


def bitstring_runs(
    n: int, bound: int = DEFAULT_COMPOSITION_BOUND
) -> Iterator[tuple[int, ...]]:
    """Run-length tuples of every length-n bit string that starts with 0.

    Maximal runs map to composition parts, so this enumerates the
    compositions of n in bit-string disguise.  n = 0 yields the empty run
    tuple for the empty string.
    """
    _check_target(n, bound)
    return _bit_runs(n)


def _bit_runs(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for pattern in range(1 << (n - 1)):
        runs = []
        run = 1
        prev = 0
        bits = pattern
        for _ in range(n - 1):
            b = bits & 1
            bits >>= 1
            if b == prev:
                run += 1
            else:
                runs.append(run)
                run = 1
                prev = b
        runs.append(run)
        yield tuple(runs)


def bitstring_singles_oracle(
    n: int, k: int, bound: int = DEFAULT_COMPOSITION_BOUND
) -> int:
    """Count length-n bit strings starting with 0 that have exactly k singles.

    A single is a maximal run of identical bits with length exactly 1.
    """
    _check_nk(n, k)
    return sum(1 for runs in bitstring_runs(n, bound) if runs.count(1) == k)


def c_minor_route(n: int, k: int, bound: int = DEFAULT_MINOR_BOUND) -> int:
    """c(n, k) as the brute-force sum of order-(n-k) principal minors of build_G(n).

    The order-0 empty minor contributes 1, which covers both k = n and the
    n = 0 row.
    """
    _check_nk(n, k)
    if n == 0:
        return 1
    return minor_sums(build_G(n), bound)[n - k]


@dataclass(frozen=True)
class TriangleRow:
    """Row n of the triangle: values[k] = c(n, k), tagged with its route."""

    n: int
    values: tuple[int, ...]
    route: str


def _row_bruteforce(n: int, bound: int | None) -> list[int]:
    counts = [0] * (n + 1)
    limit = DEFAULT_COMPOSITION_BOUND if bound is None else bound
    for comp in enumerate_compositions(n, limit):
        counts[comp.count(1)] += 1
    return counts


def _row_bitstring(n: int, bound: int | None) -> list[int]:
    counts = [0] * (n + 1)
    limit = DEFAULT_COMPOSITION_BOUND if bound is None else bound
    for runs in bitstring_runs(n, limit):
        counts[runs.count(1)] += 1
    return counts


def _row_formula(n: int, bound: int | None) -> list[int]:
    return [c_formula(n, k) for k in range(n + 1)]


def _row_recurrence(n: int, bound: int | None) -> list[int]:
    return [c_recurrence(n, k) for k in range(n + 1)]


def _row_minors(n: int, bound: int | None) -> list[int]:
    if n == 0:
        return [1]
    limit = DEFAULT_MINOR_BOUND if bound is None else bound
    sums = minor_sums(build_G(n), limit)
    return [sums[n - k] for k in range(n + 1)]


_ROW_BUILDERS = {
    "bruteforce": _row_bruteforce,
    "formula": _row_formula,
    "recurrence": _row_recurrence,
    "bitstring": _row_bitstring,
    "minors": _row_minors,
}


def triangle(
    n_max: int, route: str = "formula", bound: int | None = None
) -> list[TriangleRow]:
    """Rows 0..n_max of the triangle, computed by the selected route.

    ``bound`` overrides the enumeration cap of the brute-force routes;
    resource errors from a route propagate unchanged.
    """
    if route not in _ROW_BUILDERS:
        raise ValueError(f"unknown route {route!r}; choose one of {ROUTES}")
    if n_max < 0:
        raise ValueError(f"row bound must be >= 0, got {n_max}")
    # refuse up front rather than after computing the rows below the cap
    if route in ("bruteforce", "bitstring"):
        _check_target(n_max, DEFAULT_COMPOSITION_BOUND if bound is None else bound)
    elif route == "minors":
        check_minor_bound(n_max, DEFAULT_MINOR_BOUND if bound is None else bound)
    builder = _ROW_BUILDERS[route]
    return [
        TriangleRow(n=n, values=tuple(builder(n, bound)), route=route)
        for n in range(n_max + 1)
    ]
