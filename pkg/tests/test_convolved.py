import pytest

from fibcomb.convolved import (
    alternating_sum,
    convolved_fib,
    convolved_fib_binomial,
    convolved_fib_minor_route,
    convolved_series,
    convolved_table,
    verify_alternating_identity,
    verify_charpoly_coefficients,
)
from fibcomb.fib import fib
from fibcomb.hessenberg import EnumerationBoundError


def test_order_one_is_fibonacci():
    assert convolved_series(1, 8) == [1, 1, 2, 3, 5, 8, 13, 21]
    for m in range(1, 201):
        assert convolved_fib(1, m) == fib(m)


def test_hand_convolutions():
    assert convolved_fib(2, 2) == 2
    assert convolved_fib(3, 3) == 9
    assert convolved_fib(3, 2) == 3


def test_first_term_of_every_row_is_one():
    for r in range(1, 9):
        assert convolved_fib(r, 1) == 1


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        convolved_fib(0, 3)
    with pytest.raises(ValueError):
        convolved_fib(2, 0)
    with pytest.raises(ValueError):
        convolved_series(1, -1)


def test_table_matches_pointwise_values():
    table = convolved_table(4, 10)
    assert len(table) == 4
    assert all(len(row) == 10 for row in table)
    for r, row in enumerate(table, start=1):
        for m, value in enumerate(row, start=1):
            assert value == convolved_fib(r, m)


def test_table_rejects_empty_bounds():
    with pytest.raises(ValueError):
        convolved_table(0, 5)


def test_binomial_route_examples():
    assert convolved_fib_binomial(2, 0) == 2
    assert convolved_fib_binomial(4, 2) == 9
    for n in range(12):
        assert convolved_fib_binomial(n, n) == 1
    with pytest.raises(ValueError):
        convolved_fib_binomial(3, 4)
    with pytest.raises(ValueError):
        convolved_fib_binomial(3, -1)


def test_minor_route_examples():
    assert convolved_fib_minor_route(4, 0) == 5
    assert convolved_fib_minor_route(4, 2) == 9
    assert convolved_fib_minor_route(3, 2) == 3


def test_minor_route_validates():
    with pytest.raises(ValueError):
        convolved_fib_minor_route(0, 0)
    with pytest.raises(ValueError):
        convolved_fib_minor_route(4, 4)
    with pytest.raises(EnumerationBoundError):
        convolved_fib_minor_route(8, 1, bound=6)


def test_triple_route_agreement_small():
    for n in range(1, 13):
        for k in range(n):
            series = convolved_fib(k + 1, n - k + 1)
            assert series == convolved_fib_binomial(n, k)
            assert series == convolved_fib_minor_route(n, k)


def test_two_route_agreement_larger():
    for n in range(13, 41):
        for k in range(n + 1):
            assert convolved_fib_binomial(n, k) == convolved_fib(k + 1, n - k + 1)


def test_rows_are_nondecreasing():
    for r in range(1, 9):
        series = convolved_series(r, 61)
        for m in range(60):
            assert series[m + 1] >= series[m]


def test_charpoly_coefficient_expansion_small_cases():
    # n = 1: x - 1; n = 2: x^2 - 2x + 2
    assert verify_charpoly_coefficients(1)
    assert verify_charpoly_coefficients(2)


def test_charpoly_coefficient_expansion_range():
    for n in range(1, 26):
        assert verify_charpoly_coefficients(n)


def test_alternating_sum_examples():
    assert alternating_sum(0) == 1
    assert alternating_sum(2) == 2  # terms 2 - 4 + 4


def test_alternating_identity_range():
    for n in range(41):
        assert verify_alternating_identity(n)


def test_alternating_sum_rejects_negative():
    with pytest.raises(ValueError):
        alternating_sum(-1)
