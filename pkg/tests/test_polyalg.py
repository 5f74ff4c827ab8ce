import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsionpoly.errors import NonIntegerQuotient, NonZeroRemainder, OddCoefficientPresent
from torsionpoly.polyalg import (DEGREE_OF_ZERO, IntPoly, RatPoly, _schoolbook,
                                 chebyshev_product_identity_check, chebyshev_T,
                                 chebyshev_U, even_part, exact_div, int_convolve)


def closed_form_T(n):
    # T_n(x) = n/2 sum_k (-1)^k (n-k-1)! / (k! (n-2k)!) (2x)^(n-2k), n >= 1
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        c = Fraction(n, 2) * (-1) ** k * math.factorial(n - k - 1) / (
            math.factorial(k) * math.factorial(n - 2 * k))
        coeffs[n - 2 * k] += c * 2 ** (n - 2 * k)
    return [int(c) for c in coeffs]


def test_chebyshev_base_cases():
    assert chebyshev_T(0) == IntPoly([1])
    assert chebyshev_T(1) == IntPoly([0, 1])


def test_chebyshev_T5():
    assert list(chebyshev_T(5).coeffs) == closed_form_T(5)
    assert chebyshev_T(5) == IntPoly([0, 5, 0, -20, 0, 16])


@pytest.mark.parametrize('l', range(1, 41))
def test_chebyshev_matches_closed_form(l):
    T = chebyshev_T(l)
    assert list(T.coeffs) == closed_form_T(l)
    assert T.leading == 2 ** (l - 1)


def test_chebyshev_numeric():
    rng = random.Random(7)
    for l in range(1, 51):
        T = chebyshev_T(l)
        for _ in range(100):
            theta = rng.uniform(0, math.pi)
            val = float(T(Fraction(math.cos(theta))))
            assert abs(val - math.cos(l * theta)) < 1e-9


@pytest.mark.parametrize('l', range(0, 30))
def test_chebyshev_parity(l):
    T = chebyshev_T(l)
    assert all(c == 0 for k, c in enumerate(T.coeffs) if k % 2 != l % 2)


@pytest.mark.parametrize('N', range(2, 61))
def test_difference_quotient_is_second_kind(N):
    diff = chebyshev_T(N + 1) - chebyshev_T(N - 1)
    quotient = exact_div(diff, IntPoly([-2, 0, 2]))
    assert quotient == chebyshev_U(N - 1)


def test_second_kind_recurrence():
    x2 = IntPoly([0, 2])
    U = [IntPoly([1]), IntPoly([0, 2])]
    for k in range(1, 60):
        U.append(x2 * U[k] - U[k - 1])
    assert all(chebyshev_U(k) == U[k] for k in range(61))


def test_exact_div_examples():
    num = IntPoly([-1, 0, 13, 0, -28, 0, 16])
    assert exact_div(num, IntPoly([-1, 0, 1])) == IntPoly([1, 0, -12, 0, 16])
    assert exact_div(IntPoly([-1, 0, 1]), IntPoly([-1, 1])) == IntPoly([1, 1])
    with pytest.raises(NonZeroRemainder):
        exact_div(IntPoly([-1, 0, 1]), IntPoly([0, 1]))


def test_exact_div_non_integer_quotient():
    with pytest.raises(NonIntegerQuotient):
        exact_div(IntPoly([1, 1]), IntPoly([2, 2]))


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(IntPoly([1]), IntPoly([]))


small_polys = st.lists(st.integers(-1000, 1000), min_size=1, max_size=13).map(IntPoly)


@settings(max_examples=200)
@given(small_polys, small_polys.filter(lambda b: not b.is_zero()))
def test_exact_div_inverts_multiplication(a, b):
    assert exact_div(a * b, b) == a


@settings(max_examples=100)
@given(st.lists(st.integers(-10**30, 10**30), max_size=60),
       st.lists(st.integers(-10**30, 10**30), max_size=60))
def test_kronecker_matches_schoolbook(a, b):
    assert int_convolve(a, b) == _schoolbook(a, b)


def test_even_part():
    assert even_part(IntPoly([1, 0, -12, 0, 16])) == IntPoly([1, -12, 16])
    assert even_part(IntPoly([1])) == IntPoly([1])
    with pytest.raises(OddCoefficientPresent):
        even_part(IntPoly([0, 0, 0, 1]))


def test_zero_polynomial_convention():
    z = IntPoly([0, 0])
    assert z.coeffs == ()
    assert z.degree == DEGREE_OF_ZERO
    assert (z * IntPoly([1, 1])).degree == DEGREE_OF_ZERO
    assert IntPoly([3, 0, 0]).coeffs == (3,)


@settings(max_examples=100)
@given(small_polys, small_polys)
def test_degree_of_product(a, b):
    assert (a * b).degree == a.degree + b.degree


def test_ratpoly_lowest_terms():
    r = RatPoly([Fraction(2, 4), Fraction(-3, 6)])
    assert r.coeffs == (Fraction(1, 2), Fraction(-1, 2))
    assert all(c.denominator > 0 for c in r.coeffs)
    with pytest.raises(NonIntegerQuotient):
        r.to_intpoly()
    assert (r * 2).to_intpoly() == IntPoly([1, -1])


def test_intpoly_rejects_fractions():
    with pytest.raises(TypeError):
        IntPoly([Fraction(1, 2)])


@pytest.mark.parametrize('m,n', [(1, 1), (5, 3), (7, 0)])
def test_product_identity_examples(m, n):
    assert chebyshev_product_identity_check(m, n)


def test_format():
    assert IntPoly([1, -6, 4]).format('t') == '4t^2 - 6t + 1'
    assert IntPoly([1]).format('t') == '1'
    assert IntPoly([0, -1]).format('t') == '-t'
    assert IntPoly([]).format() == '0'
