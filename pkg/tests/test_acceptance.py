"""Acceptance suite: one test per headline claim, each with a time budget.

Every check is an exact integer (or exact polynomial-coefficient) equality;
there are no tolerances to tune.  Each test prints one pass/fail line, so
``pytest tests/test_acceptance.py -v -s`` doubles as a readable report.
"""

import random
import time
from contextlib import contextmanager

from fibcomb.cli import main as cli_main
from fibcomb.compositions import triangle
from fibcomb.convolved import (
    convolved_fib,
    convolved_fib_binomial,
    verify_alternating_identity,
)
from fibcomb.fib import fib, fib_poly, shift_poly
from fibcomb.hessenberg import (
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
    verify_recurrence_determinant,
)
from fibcomb.verify import run_compositions


@contextmanager
def criterion(num, slug, budget):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num:2d} {slug}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    within = elapsed < budget
    status = "PASS" if within else "FAIL (time budget exceeded)"
    print(f"ACCEPTANCE {num:2d} {slug}: {status} ({elapsed:.2f}s, budget {budget:g}s)")
    assert within, f"criterion {num} took {elapsed:.2f}s, budget {budget:g}s"


def test_01_determinants_of_both_families():
    with criterion(1, "determinants-both-routes", 1.0):
        for n in range(1, 26):
            f, g = build_F(n), build_G(n)
            assert det(f) == det_oracle(f.materialize()) == fib(n + 1)
            assert det(g) == det_oracle(g.materialize()) == fib(n - 1)


def test_02_generic_recurrence_identity_on_random_tables():
    with criterion(2, "recurrence-equals-scaled-det", 1.0):
        rng = random.Random(20250809)
        for _ in range(50):
            n = rng.randint(1, 10)
            h = HessenbergMatrix(
                [rng.randint(-3, 3) for _ in range(n - i)] for i in range(n)
            )
            assert verify_recurrence_determinant(h, rng.randint(-3, 3))


def test_03_minor_sums_are_convolved_fibonacci():
    with criterion(3, "minor-sums-vs-series", 30.0):
        for n in range(1, 13):
            sums = minor_sums(build_F(n))
            for k in range(n):
                assert sums[n - k] == convolved_fib(k + 1, n - k + 1)


def test_04_charpoly_shift_and_coefficients():
    with criterion(4, "charpoly-identities", 5.0):
        for n in range(1, 16):
            p = char_poly(build_F(n))
            assert p == shift_poly(fib_poly(n + 1))
            for k in range(n + 1):
                assert p.coefficient(k) == (-1) ** (n - k) * convolved_fib(
                    k + 1, n - k + 1
                )


def test_05_binomial_route_matches_series():
    with criterion(5, "binomial-vs-series", 5.0):
        for n in range(41):
            for k in range(n + 1):
                assert convolved_fib_binomial(n, k) == convolved_fib(k + 1, n - k + 1)


def test_06_alternating_double_sum_is_fibonacci():
    with criterion(6, "alternating-sum", 1.0):
        for n in range(41):
            assert verify_alternating_identity(n)


def test_07_cofactors_and_adjugate_determinant():
    with criterion(7, "cofactor-identities", 10.0):
        for n in range(2, 11):
            assert adjugate_det_F(n) == fib(n + 1) ** (n - 1)
        for n in range(1, 9):
            full = build_F(n).materialize()
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    assert cofactor_F(n, i, j) == dense_cofactor(full, i, j)


def test_08_five_route_agreement_on_the_triangle():
    with criterion(8, "five-route-triangle", 60.0):
        reference = [row.values for row in triangle(18, "bruteforce")]
        for route in ("formula", "recurrence", "bitstring"):
            assert [row.values for row in triangle(18, route)] == reference
        assert [row.values for row in triangle(14, "minors")] == reference[:15]


def test_09_wrong_index_variant_reports_the_documented_counterexample(capsys):
    with criterion(9, "wrong-index-counterexample", 10.0):
        report = run_compositions(variant="wrong-index")
        assert not report.passed
        assert len(report.checks) == 1
        ce = report.checks[0].counterexample
        assert (ce.n, ce.k) == (3, 1)
        assert ce.values["formula[wrong-index]"] == 5
        assert ce.values["bruteforce"] == 2

        code = cli_main(
            ["verify", "--suite", "compositions", "--variant", "wrong-index",
             "--nmax", "3"]
        )
        out = capsys.readouterr().out
        assert code == 1
        assert "(n=3, k=1)" in out
        assert "formula[wrong-index]=5" in out
        assert "bruteforce=2" in out


def test_10_structural_row_properties():
    with criterion(10, "structural-rows", 1.0):
        rows = triangle(30, "formula")
        for row in rows[1:]:
            assert sum(row.values) == 2 ** (row.n - 1)
        for row in rows:
            assert row.values[0] == fib(row.n - 1)
            assert row.values[row.n] == 1
        for row in rows[2:]:
            assert row.values[row.n - 1] == 0
