from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from holosim.algebra.scalars import (
    GaussianRational,
    format_scalar,
    parse_scalar,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=100)
scalars = st.builds(GaussianRational, rationals, rationals)


def test_basic_arithmetic():
    a = GaussianRational(Fraction(1, 2), Fraction(-3))
    b = GaussianRational(2, 1)
    assert a + b == GaussianRational(Fraction(5, 2), -2)
    assert a - a == GaussianRational(0)
    assert a * b == GaussianRational(Fraction(1, 2) * 2 + 3, Fraction(1, 2) - 6)
    assert -a == GaussianRational(Fraction(-1, 2), 3)


def test_lowest_terms_and_positive_denominator():
    a = GaussianRational(Fraction(2, -4), Fraction(6, 8))
    assert a.re.denominator == 2 and a.re.numerator == -1
    assert a.im == Fraction(3, 4)
    assert a.re.denominator > 0 and a.im.denominator > 0


def test_inverse_and_conjugate():
    a = GaussianRational(3, 4)
    assert a * a.inverse() == GaussianRational(1)
    assert a.conjugate() == GaussianRational(3, -4)
    assert a.norm_sq() == 25
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


@given(scalars, scalars)
def test_multiplicative_norm(a, b):
    assert (a * b).norm_sq() == a.norm_sq() * b.norm_sq()


@given(scalars)
def test_parse_format_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


@given(scalars, scalars)
def test_field_axioms_spot(a, b):
    assert a + b == b + a
    assert a * b == b * a
    if not b.is_zero():
        assert (a / b) * b == a


@pytest.mark.parametrize("text,expected", [
    ("0", GaussianRational(0)),
    ("-3/4", GaussianRational(Fraction(-3, 4))),
    ("i", GaussianRational(0, 1)),
    ("-i", GaussianRational(0, -1)),
    ("2i", GaussianRational(0, 2)),
    ("1/2-3i", GaussianRational(Fraction(1, 2), -3)),
    ("1+i", GaussianRational(1, 1)),
])
def test_parse_examples(text, expected):
    assert parse_scalar(text) == expected


def test_parse_rejects_garbage():
    for bad in ("", "1+2+3", "ii", "1//2"):
        with pytest.raises(ValueError):
            parse_scalar(bad)
