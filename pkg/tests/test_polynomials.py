"""Tests for exact univariate/multivariate polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from difftan import (
    MultiPoly,
    PolyParseError,
    UniPoly,
    compose_with,
    parse_polynomial,
)


# ---------------------------------------------------------------- UniPoly


def test_unipoly_trims_trailing_zeros():
    p = UniPoly((Fraction(1), Fraction(0), Fraction(0)))
    assert p.coeffs == (Fraction(1),)
    assert p.degree == 0


def test_unipoly_zero():
    z = UniPoly()
    assert z.is_zero()
    assert z.degree == -1
    assert z.coeff(3) == 0
    assert str(z) == "0"


def test_unipoly_arithmetic():
    p = UniPoly((1, 2))  # 1 + 2t
    q = UniPoly((0, 0, 3))  # 3t^2
    assert (p + q).coeffs == (1, 2, 3)
    assert (p - p).is_zero()
    assert (p * q).coeffs == (0, 0, 3, 6)
    assert p.scale(Fraction(1, 2)).coeffs == (Fraction(1, 2), Fraction(1))


def test_unipoly_evaluation():
    p = UniPoly((1, 0, 2))  # 1 + 2t^2
    assert p(3) == 19
    assert p(Fraction(1, 2)) == Fraction(3, 2)


def test_unipoly_compose():
    outer = UniPoly((1, 0, 1))  # 1 + t^2
    inner = UniPoly((1, 1))  # 1 + t
    assert outer.compose(inner).coeffs == (2, 2, 1)
    assert UniPoly().compose(inner).is_zero()


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ((0, 5, 0, 7), "5*t+7*t^3"),
        ((Fraction(1, 2),), "1/2"),
        ((-1, 1), "-1+t"),
        ((0, Fraction(-3, 2)), "-3/2*t"),
        ((2, 0, 1), "2+t^2"),
    ],
)
def test_unipoly_str(coeffs, text):
    assert str(UniPoly(coeffs)) == text


_small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=4)
_unipolys = st.lists(_small_fracs, max_size=5).map(lambda cs: UniPoly(tuple(cs)))


@given(_unipolys, _unipolys, _small_fracs)
def test_unipoly_evaluation_is_ring_hom(f, g, x):
    assert (f + g)(x) == f(x) + g(x)
    assert (f * g)(x) == f(x) * g(x)


@given(_unipolys, _unipolys, _small_fracs)
def test_unipoly_compose_matches_evaluation(f, g, x):
    assert f.compose(g)(x) == f(g(x))


# --------------------------------------------------------------- MultiPoly


def _poly(text, nvars=2):
    return parse_polynomial(text, nvars)


def test_multipoly_constructors():
    z = MultiPoly.zero(3)
    assert z.is_zero()
    assert z.total_degree() == -1
    one = MultiPoly.constant(2, 1)
    assert one.constant_term == 1
    x2 = MultiPoly.variable(2, 1)
    assert x2.terms == {(0, 1): Fraction(1)}


def test_multipoly_rejects_bad_shapes():
    with pytest.raises(ValueError, match="nvars"):
        MultiPoly(0)
    with pytest.raises(ValueError, match="exponent"):
        MultiPoly(2, {(1,): Fraction(1)})
    with pytest.raises(ValueError, match="exponent"):
        MultiPoly(2, {(-1, 0): Fraction(1)})
    with pytest.raises(ValueError, match="index"):
        MultiPoly.variable(2, 2)


def test_multipoly_arithmetic():
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    s = x1 * x1 + x2 * x2
    assert s == _poly("x1^2+x2^2")
    assert s - s == MultiPoly.zero(2)
    assert 2 * s == s * 2 == _poly("2*x1^2+2*x2^2")
    assert (x1 + x2) ** 2 == _poly("x1^2+2*x1*x2+x2^2")
    assert x1**0 == MultiPoly.constant(2, 1)
    with pytest.raises(ValueError, match="negative"):
        x1 ** (-1)
    with pytest.raises(ValueError, match="variable counts"):
        x1 + MultiPoly.variable(3, 0)


def test_multipoly_equality_and_hash():
    a = _poly("x1*x2+1")
    b = _poly("1+x2*x1")
    assert a == b
    assert hash(a) == hash(b)
    assert a != _poly("x1*x2")
    assert a != "x1*x2+1"


def test_restrict_axis():
    p = _poly("x1^2+3*x1*x2+x2^2+2*x1")
    assert p.restrict_axis(0).coeffs == (0, 2, 1)
    assert p.restrict_axis(1).coeffs == (0, 0, 1)
    assert MultiPoly.zero(2).restrict_axis(0).is_zero()


def test_linear_coeffs():
    p = _poly("3*x1-1/2*x2+x1^2")
    assert p.linear_coeffs() == (Fraction(3), Fraction(-1, 2))
    assert MultiPoly.constant(2, 5).linear_coeffs() == (0, 0)


def test_evaluate():
    p = _poly("x1^2+x2^2")
    assert p.evaluate([3, 4]) == 25
    assert p.evaluate([Fraction(1, 2), 0]) == Fraction(1, 4)
    with pytest.raises(ValueError, match="dimension"):
        p.evaluate([1])


def test_substitute():
    p = _poly("x1^2+x2^2")
    # Substitute the plane curve (t, t^2) written in one variable.
    t = MultiPoly.variable(1, 0)
    curve = p.substitute([t, t * t])
    assert curve == parse_polynomial("x1^2+x1^4", 1)
    with pytest.raises(ValueError, match="one replacement"):
        p.substitute([t])
    with pytest.raises(ValueError, match="variable counts"):
        p.substitute([t, MultiPoly.variable(2, 0)])


def test_compose_with():
    psi = UniPoly((0, 1, 1))  # t + t^2
    s = _poly("x1^2+x2^2")
    assert compose_with(psi, s) == _poly("x1^4+2*x1^2*x2^2+x2^4+x1^2+x2^2")
    assert compose_with(UniPoly(), s).is_zero()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x1^2+x2^2", "x1^2+x2^2"),
        ("x2^2 + x1^2", "x1^2+x2^2"),
        ("3/2*x1*x2^3-x1", "3/2*x1*x2^3-x1"),
        ("0", "0"),
        ("-x1", "-x1"),
        ("x1-x1", "0"),
        ("2*x1^2", "2*x1^2"),
        ("1/2", "1/2"),
        ("x1*x1", "x1^2"),
        ("x1^0", "1"),
    ],
)
def test_parse_and_format(text, expected):
    assert str(parse_polynomial(text, 2)) == expected


@pytest.mark.parametrize(
    "text, message, position",
    [
        ("x", "variable needs an index", 0),
        ("x3", "out of range", 0),
        ("1/0", "division by zero", 2),
        ("x1^", "expected an exponent", 3),
        ("x1+*x2", "expected a variable", 3),
        ("x1 @ x2", "unexpected character", 3),
        ("3*", "expected a variable", 2),
        ("x1 5", "unexpected", 3),
    ],
)
def test_parse_errors_carry_positions(text, message, position):
    with pytest.raises(PolyParseError, match=message) as info:
        parse_polynomial(text, 2)
    assert info.value.position == position


_exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
_multipolys = st.dictionaries(_exponents, _small_fracs, max_size=5).map(
    lambda terms: MultiPoly(2, terms)
)


@given(_multipolys)
def test_multipoly_format_parse_round_trip(p):
    assert parse_polynomial(str(p), 2) == p


@given(_multipolys, _multipolys, _small_fracs, _small_fracs)
def test_multipoly_evaluation_is_ring_hom(p, q, a, b):
    point = (a, b)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


@given(_multipolys, _small_fracs)
def test_restrict_axis_matches_evaluation(p, a):
    assert p.restrict_axis(0)(a) == p.evaluate((a, 0))
    assert p.restrict_axis(1)(a) == p.evaluate((0, a))
