import hypothesis.strategies as st
import pytest
from hypothesis import given

from fibcomb.fib import binomial, fib, fib_poly, fib_poly_explicit, shift_poly
from fibcomb.poly import IntPolynomial


def test_extended_anchors():
    assert fib(-1) == 1
    assert fib(0) == 0
    assert fib(1) == 1
    assert fib(2) == 1


def test_known_value():
    assert fib(10) == 55
    assert fib(20) == 6765


def test_rejects_indices_below_minus_one():
    with pytest.raises(ValueError):
        fib(-2)


@given(st.integers(1, 200))
def test_recurrence(n):
    assert fib(n + 1) == fib(n) + fib(n - 1)


def test_fib_poly_base_cases():
    assert fib_poly(1) == 1
    assert fib_poly(2) == IntPolynomial.x()
    assert fib_poly(3) == IntPolynomial((1, 0, 1))


def test_fib_poly_rejects_nonpositive_index():
    with pytest.raises(ValueError):
        fib_poly(0)


def test_fib_poly_degree():
    for n in range(1, 12):
        assert fib_poly(n).degree == n - 1


def test_fib_poly_at_one_is_fib():
    for n in range(1, 31):
        assert fib_poly(n)(1) == fib(n)


def test_explicit_base_cases():
    assert fib_poly_explicit(0) == 1
    assert fib_poly_explicit(2) == IntPolynomial((1, 0, 1))
    with pytest.raises(ValueError):
        fib_poly_explicit(-1)


def test_explicit_matches_recurrence_route():
    for n in range(1, 31):
        assert fib_poly(n) == fib_poly_explicit(n - 1)


def test_shift_examples():
    x = IntPolynomial.x()
    assert shift_poly(IntPolynomial.one()) == 1
    assert shift_poly(x) == x - 1
    assert shift_poly(x * x + 1) == IntPolynomial((2, -2, 1))


@given(st.lists(st.integers(-9, 9), max_size=7))
def test_shift_then_unshift_is_identity(coeffs):
    p = IntPolynomial(coeffs)
    assert shift_poly(p)(IntPolynomial.x() + 1) == p


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(0, 0) == 1
    for n in range(10):
        assert binomial(n, 0) == 1


def test_binomial_out_of_range_is_zero():
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_binomial_rejects_negative_a():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(1, 60), st.integers(-2, 62))
def test_binomial_pascal_rule(a, b):
    assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)
