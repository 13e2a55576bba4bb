import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_complex
from hfl.cyclotomic import CycNum, ParameterMismatch, cyc_from_root_power, cyclotomic_polynomial, half_root_exponent


def cyc(n):
    phi = len(cyclotomic_polynomial(2 * n)) - 1
    frac = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(frac, min_size=phi, max_size=phi).map(lambda cs: CycNum(n, cs))


@pytest.mark.parametrize("N", range(1, 40))
def test_cyclotomic_polynomial_matches_sympy(N):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(N, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(N)) == [int(c) for c in expected]


@pytest.mark.parametrize("n,k,value", [(2, 0, 1), (2, 2, -1), (3, 6, 1)])
def test_root_powers(n, k, value):
    assert cyc_from_root_power(n, k) == value


def test_zeta6_times_zeta6_fifth():
    assert CycNum.root(3, 1) * CycNum.root(3, 5) == 1


def test_geometric_sums(n):
    q = lambda k: CycNum.root(n, 2 * k)  # noqa: E731
    for j in range(n):
        total = sum((q(i * j) for i in range(n)), CycNum.zero(n))
        assert total == (n if j == 0 else 0)
    assert sum((q(0) * Fraction(1, n) for _ in range(n)), CycNum.zero(n)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_roots_agree_with_complex_exponentials(n):
    for k in range(-3 * n, 3 * n):
        assert abs(to_complex(CycNum.root(n, k)) - cmath.exp(1j * cmath.pi * k / n)) < 1e-9


@pytest.mark.parametrize("n", [2, 3, 5, 6, 8])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_field_axioms(n, data):
    a, b, c = (data.draw(cyc(n)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-6
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


def test_half_root_squares_to_q_power(n):
    h = half_root_exponent(n)
    for m in range(2 * n):
        s = CycNum.root(n, h * m * m)
        assert s * s == CycNum.root(n, 2 * m * m)
        assert s == CycNum.root(n, h * (m + n) ** 2)


def test_mixed_fields_rejected():
    with pytest.raises(ParameterMismatch):
        CycNum.one(3) + CycNum.one(4)


def test_rational_round_trip():
    c = CycNum.rational(5, Fraction(-7, 3))
    assert c.is_rational() and c.to_fraction() == Fraction(-7, 3)
    assert not CycNum.root(5, 1).is_rational()
