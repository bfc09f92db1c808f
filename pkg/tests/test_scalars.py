from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilsym.expressions import ExpressionError, evaluate, parse_scalar, parse_tscalar
from nilsym.scalars import (
    ONE,
    ZERO,
    GaussianRational as G,
    I,
    PoleAtZero,
    T,
    as_scalar,
    format_scalar,
    limit_at_zero,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
scalars = st.builds(G, fractions, fractions)
nonzero = scalars.filter(bool)
# small rational functions built from t and scalars
polys = st.lists(scalars, min_size=1, max_size=4).map(lambda cs: sum((c * T ** k for k, c in enumerate(cs)), ZERO * T))
tscalars = st.tuples(polys, polys.filter(bool)).map(lambda p: p[0] / p[1])


def test_lowest_terms_and_sign():
    x = G(Fraction(6, -4), Fraction(2, 4))
    assert (x._a, x._b, x._d) == (-3, 1, 2)
    assert x.re == Fraction(-3, 2) and x.im == Fraction(1, 2)


def test_i_squared():
    assert I * I == -1
    assert (1 + I) * (1 - I) == 2
    assert 1 / I == -I


def test_compares_with_ints_and_fractions():
    assert G(3) == 3
    assert G(Fraction(1, 2)) == Fraction(1, 2)
    assert I != 0
    assert hash(G(Fraction(1, 2))) == hash(Fraction(1, 2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@pytest.mark.parametrize("text, expected", [
    ("3", G(3)), ("-1/2", G(Fraction(-1, 2))), ("i", I), ("1+2*i", G(1, 2)), ("3/2*i", G(0, Fraction(3, 2))),
])
def test_format_parse_roundtrip(text, expected):
    assert parse_scalar(text) == expected
    assert format_scalar(expected) == text


@given(scalars)
def test_format_parse_property(x):
    assert parse_scalar(format_scalar(x)) == x


@given(scalars, scalars)
def test_add_sub_roundtrip(a, b):
    assert (a + b) - b == a


@given(scalars, nonzero)
def test_mul_div_roundtrip(a, b):
    assert (a * b) / b == a
    assert b / b == 1


@given(scalars, scalars, scalars)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


def test_rational_function_normal_form():
    f = (T * T - 1) / (2 * T - 2)
    assert f == (T + 1) / 2
    assert f.den.lead() == 1
    assert (T / T).is_constant() and (T / T).constant_value() == 1


@pytest.mark.parametrize("expr, expected", [("t^3", 0), ("(1+t)/(1-t)", 1), ("(2+i*t)/(3-t)", G(Fraction(2, 3)))])
def test_limit_examples(expr, expected):
    assert limit_at_zero(parse_tscalar(expr)) == expected


def test_limit_pole():
    with pytest.raises(PoleAtZero):
        limit_at_zero(1 / T)
    with pytest.raises(PoleAtZero):
        limit_at_zero(parse_tscalar("(1+t)/t^2"))


def test_limit_of_scalar_is_itself():
    assert limit_at_zero(G(5)) == 5


@given(tscalars, tscalars)
def test_tscalar_add_sub(a, b):
    assert (a + b) - b == a


@given(tscalars, tscalars.filter(bool))
def test_tscalar_mul_div(a, b):
    assert (a * b) / b == a


@given(tscalars, tscalars)
def test_limit_multiplicative(a, b):
    try:
        la, lb = limit_at_zero(a), limit_at_zero(b)
    except PoleAtZero:
        return
    assert limit_at_zero(a * b) == la * lb


@given(tscalars, scalars)
def test_evaluation_is_a_homomorphism(a, x):
    try:
        ax = a(x)
    except ZeroDivisionError:
        return
    assert (a * a)(x) == ax * ax


def test_as_scalar_coercions():
    assert as_scalar(2) == 2
    assert as_scalar(Fraction(1, 3)) == Fraction(1, 3)
    assert as_scalar(complex(1, -2)) == G(1, -2)
    assert as_scalar("1/2-i") == G(Fraction(1, 2), -1)
    with pytest.raises(TypeError):
        as_scalar(0.5)


@pytest.mark.parametrize("bad", ["1.5", "__import__('os')", "t**x", "2**t", "", "lam +", "f(2)", "[1]"])
def test_expression_rejects(bad):
    with pytest.raises(ExpressionError):
        evaluate(bad, {"x": G(2)})


def test_caret_is_power():
    assert evaluate("2^3") == 8
    assert evaluate("(1+i)^2") == 2 * I
    assert evaluate("2^-1") == Fraction(1, 2)
