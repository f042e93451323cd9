"""Verification suites that cross-check every identity the library implements.

Each suite pits at least two independently coded routes against each other
and reports a concrete counterexample on the first disagreement.  Suites:

* ``thm11``        - determinants of the F/G families against Fibonacci
                     numbers, plus random matrices for the generic
                     recurrence-equals-scaled-determinant identity;
* ``minors``       - principal-minor sums of F against the convolution series;
* ``charpoly``     - characteristic polynomials against shifted Fibonacci
                     polynomials, their coefficients against convolved
                     numbers, and the binomial route against the series;
* ``identity24``   - the alternating double binomial sum against Fibonacci;
* ``adjugate``     - closed-form cofactors against oracle minors and the
                     cofactor-matrix determinant against fib(n+1)^(n-1);
* ``compositions`` - the five triangle routes against each other and the
                     structural row properties.

``run_compositions(variant="wrong-index")`` instead runs the deliberate
counterexample demonstrating that shifting the tuple-sum constraint from
n-2k-1 to n-2k+1 breaks the count at (n, k) = (3, 1) with 5 vs 2.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .compositions import (
    c_bruteforce,
    c_formula,
    c_formula_wrong_index,
    triangle,
)
from .convolved import (
    alternating_sum,
    convolved_fib,
    convolved_fib_binomial,
)
from .fib import fib, fib_poly, shift_poly
from .hessenberg import (
    HessenbergMatrix,
    adjugate_det_F,
    build_F,
    build_G,
    char_poly,
    cofactor_F,
    dense_cofactor,
    det,
    det_oracle,
    minor_sums,
    recurrence_term,
)

SUITE_NAMES = (
    "thm11",
    "minors",
    "charpoly",
    "identity24",
    "adjugate",
    "compositions",
)


@dataclass
class Counterexample:
    """Location and per-route values of a failed comparison."""

    n: int
    k: int | None
    values: dict[str, object]

    def __str__(self) -> str:
        where = f"n={self.n}" if self.k is None else f"n={self.n}, k={self.k}"
        detail = ", ".join(f"{label}={value}" for label, value in self.values.items())
        return f"({where}): {detail}"


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: Counterexample | None = None


@dataclass
class VerifyReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _check(name: str, counterexample: Counterexample | None) -> CheckResult:
    return CheckResult(name=name, passed=counterexample is None, counterexample=counterexample)


def _timed(suite: str, checks: list[CheckResult], started: float) -> VerifyReport:
    return VerifyReport(suite=suite, checks=checks, duration=time.perf_counter() - started)


def run_thm11(
    nmax: int | None = None,
    bound: int | None = None,
    seed: int = 0,
    trials: int = 50,
    max_order: int = 10,
) -> VerifyReport:
    """Determinant values of both families, plus random generic matrices."""
    started = time.perf_counter()
    limit = 25 if nmax is None else nmax
    checks = []

    ce = None
    for n in range(1, limit + 1):
        h = build_F(n)
        expansion, oracle, expected = det(h), det_oracle(h.materialize()), fib(n + 1)
        if not (expansion == oracle == expected):
            ce = Counterexample(n, None, {
                "expansion": expansion, "oracle": oracle, "fibonacci": expected,
            })
            break
    checks.append(_check("det-F-fibonacci", ce))

    ce = None
    for n in range(1, limit + 1):
        h = build_G(n)
        expansion, oracle, expected = det(h), det_oracle(h.materialize()), fib(n - 1)
        if not (expansion == oracle == expected):
            ce = Counterexample(n, None, {
                "expansion": expansion, "oracle": oracle, "fibonacci": expected,
            })
            break
    checks.append(_check("det-G-fibonacci", ce))

    rng = random.Random(seed)
    ce = None
    for trial in range(trials):
        n = rng.randint(1, max_order)
        h = HessenbergMatrix(
            [rng.randint(-3, 3) for _ in range(n - i)] for i in range(n)
        )
        a1 = rng.randint(-3, 3)
        iterated = recurrence_term(h, a1)
        scaled = a1 * det_oracle(h.materialize())
        if iterated != scaled:
            ce = Counterexample(n, None, {
                "trial": trial, "a1": a1,
                "iterated": iterated, "scaled-determinant": scaled,
            })
            break
    checks.append(_check("random-tables", ce))
    return _timed("thm11", checks, started)


def run_minors(nmax: int | None = None, bound: int | None = None) -> VerifyReport:
    """Brute-force principal-minor sums of F against the convolution series."""
    started = time.perf_counter()
    limit = 12 if nmax is None else nmax
    kwargs = {} if bound is None else {"bound": bound}
    ce = None
    for n in range(1, limit + 1):
        sums = minor_sums(build_F(n), **kwargs)
        for k in range(n):
            series = convolved_fib(k + 1, n - k + 1)
            if sums[n - k] != series:
                ce = Counterexample(n, k, {
                    "minor-sums": sums[n - k], "series": series,
                })
                break
        if ce:
            break
    return _timed("minors", [_check("minor-sums-are-convolved", ce)], started)


def run_charpoly(nmax: int | None = None, bound: int | None = None) -> VerifyReport:
    """Characteristic-polynomial identities and the binomial route."""
    started = time.perf_counter()
    limit = 15 if nmax is None else nmax
    binom_limit = 40 if nmax is None else nmax
    checks = []

    ce = None
    for n in range(1, limit + 1):
        computed = char_poly(build_F(n))
        shifted = shift_poly(fib_poly(n + 1))
        if computed != shifted:
            ce = Counterexample(n, None, {
                "char-poly": str(computed), "shifted-fib-poly": str(shifted),
            })
            break
    checks.append(_check("charpoly-equals-shifted-fib-poly", ce))

    ce = None
    for n in range(1, limit + 1):
        p = char_poly(build_F(n))
        for k in range(n + 1):
            expected = (-1) ** (n - k) * convolved_fib(k + 1, n - k + 1)
            if p.coefficient(k) != expected:
                ce = Counterexample(n, k, {
                    "coefficient": p.coefficient(k), "signed-convolved": expected,
                })
                break
        if ce:
            break
    checks.append(_check("charpoly-coefficients-are-convolved", ce))

    ce = None
    for n in range(binom_limit + 1):
        for k in range(n + 1):
            binom = convolved_fib_binomial(n, k)
            series = convolved_fib(k + 1, n - k + 1)
            if binom != series:
                ce = Counterexample(n, k, {"binomial": binom, "series": series})
                break
        if ce:
            break
    checks.append(_check("binomial-route-agrees", ce))
    return _timed("charpoly", checks, started)


def run_identity24(nmax: int | None = None, bound: int | None = None) -> VerifyReport:
    """The alternating double binomial sum against Fibonacci numbers."""
    started = time.perf_counter()
    limit = 40 if nmax is None else nmax
    ce = None
    for n in range(limit + 1):
        total = alternating_sum(n)
        expected = fib(n + 1)
        if total != expected:
            ce = Counterexample(n, None, {
                "alternating-sum": total, "fibonacci": expected,
            })
            break
    return _timed("identity24", [_check("alternating-sum-is-fibonacci", ce)], started)


def run_adjugate(nmax: int | None = None, bound: int | None = None) -> VerifyReport:
    """Closed-form cofactors and the cofactor-matrix determinant."""
    started = time.perf_counter()
    adj_limit = 10 if nmax is None else nmax
    cof_limit = 8 if nmax is None else nmax
    checks = []

    ce = None
    for n in range(2, adj_limit + 1):
        computed = adjugate_det_F(n)
        expected = fib(n + 1) ** (n - 1)
        if computed != expected:
            ce = Counterexample(n, None, {
                "cofactor-matrix-det": computed, "fibonacci-power": expected,
            })
            break
    checks.append(_check("cofactor-matrix-determinant", ce))

    ce = None
    for n in range(1, cof_limit + 1):
        full = build_F(n).materialize()
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                closed = cofactor_F(n, i, j)
                oracle = dense_cofactor(full, i, j)
                if closed != oracle:
                    ce = Counterexample(n, None, {
                        "i": i, "j": j, "closed-form": closed, "oracle": oracle,
                    })
                    break
            if ce:
                break
        if ce:
            break
    checks.append(_check("cofactor-closed-form", ce))
    return _timed("adjugate", checks, started)


def _compare_rows(
    name: str, reference: list, others: dict[str, list]
) -> CheckResult:
    ce = None
    for row in reference:
        for k in range(row.n + 1):
            values = {row.route: row.values[k]}
            for label, rows in others.items():
                if row.n < len(rows):
                    values[label] = rows[row.n].values[k]
            if len(set(values.values())) > 1:
                ce = Counterexample(row.n, k, values)
                break
        if ce:
            break
    return _check(name, ce)


def run_compositions(
    nmax: int | None = None,
    bound: int | None = None,
    variant: str | None = None,
) -> VerifyReport:
    """Five-route agreement on c(n, k) plus structural row checks.

    With ``variant="wrong-index"`` the suite instead demonstrates the
    documented counterexample of the shifted tuple-sum constraint at
    (n, k) = (3, 1); that check is expected to fail.
    """
    started = time.perf_counter()
    if variant is not None:
        if variant != "wrong-index":
            raise ValueError(f"unknown variant {variant!r}")
        if nmax is not None and nmax < 3:
            raise ValueError("the wrong-index demonstration needs nmax >= 3")
        wrong = c_formula_wrong_index(3, 1)
        actual = c_bruteforce(3, 1)
        ce = None
        if wrong != actual:
            ce = Counterexample(3, 1, {
                "formula[wrong-index]": wrong, "bruteforce": actual,
            })
        checks = [_check("wrong-index-counterexample", ce)]
        return _timed("compositions", checks, started)

    route_limit = 18 if nmax is None else nmax
    minor_limit = min(14, route_limit)
    struct_limit = 30 if nmax is None else nmax
    checks = []

    formula_rows = triangle(route_limit, "formula")
    checks.append(_compare_rows(
        "route-agreement",
        formula_rows,
        {
            "bruteforce": triangle(route_limit, "bruteforce", bound),
            "recurrence": triangle(route_limit, "recurrence"),
            "bitstring": triangle(route_limit, "bitstring", bound),
        },
    ))
    checks.append(_compare_rows(
        "minor-route-agreement",
        formula_rows[: minor_limit + 1],
        {"minors": triangle(minor_limit, "minors", bound)},
    ))

    ce = None
    for n in range(1, struct_limit + 1):
        total = sum(c_formula(n, k) for k in range(n + 1))
        if total != 2 ** (n - 1):
            ce = Counterexample(n, None, {"row-sum": total, "power": 2 ** (n - 1)})
            break
    checks.append(_check("row-sums", ce))

    ce = None
    for n in range(struct_limit + 1):
        left, right = c_formula(n, 0), c_formula(n, n)
        if left != fib(n - 1) or right != 1:
            ce = Counterexample(n, None, {
                "c(n,0)": left, "fib(n-1)": fib(n - 1), "c(n,n)": right,
            })
            break
    checks.append(_check("edge-columns", ce))

    ce = None
    for n in range(2, struct_limit + 1):
        value = c_formula(n, n - 1)
        if value != 0:
            ce = Counterexample(n, n - 1, {"c(n,n-1)": value, "expected": 0})
            break
    checks.append(_check("penultimate-zero", ce))
    return _timed("compositions", checks, started)


_SUITES = {
    "thm11": run_thm11,
    "minors": run_minors,
    "charpoly": run_charpoly,
    "identity24": run_identity24,
    "adjugate": run_adjugate,
    "compositions": run_compositions,
}


def run_suite(
    name: str,
    nmax: int | None = None,
    bound: int | None = None,
    seed: int = 0,
    variant: str | None = None,
) -> VerifyReport:
    """Run one suite by name; ``variant`` is only valid for compositions."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose one of {SUITE_NAMES}")
    if variant is not None and name != "compositions":
        raise ValueError("--variant applies to the compositions suite only")
    if name == "thm11":
        return run_thm11(nmax=nmax, bound=bound, seed=seed)
    if name == "compositions":
        return run_compositions(nmax=nmax, bound=bound, variant=variant)
    return _SUITES[name](nmax=nmax, bound=bound)


def run_all(
    nmax: int | None = None, bound: int | None = None, seed: int = 0
) -> list[VerifyReport]:
    """Run every suite with its default bounds (nmax overrides all of them)."""
    return [run_suite(name, nmax=nmax, bound=bound, seed=seed) for name in SUITE_NAMES]


def format_report(report: VerifyReport) -> str:
    """Stable one-line-per-check rendering of a suite report."""
    passed = sum(check.passed for check in report.checks)
    status = "PASS" if report.passed else "FAIL"
    lines = [
        f"suite {report.suite}: {status} "
        f"({passed}/{len(report.checks)} checks passed, {report.duration:.2f}s)"
    ]
    for check in report.checks:
        if check.passed:
            lines.append(f"  PASS {report.suite}/{check.name}")
        else:
            lines.append(
                f"  FAIL {report.suite}/{check.name}: "
                f"counterexample {check.counterexample}"
            )
    return "\n".join(lines)
