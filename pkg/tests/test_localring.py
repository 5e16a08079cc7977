import math

import pytest

from holosim import MultiPoly, PointedRational, context, vanishing_order
from holosim.algebra.scalars import GaussianRational
from holosim.errors import HolosimError

CTX = context("z")
Z = MultiPoly.variable(CTX, "z")
ONE = MultiPoly.constant(CTX, 1)


def pr(num, den=ONE, point=0):
    return PointedRational(CTX, num.univariate_coeffs(), den.univariate_coeffs(),
                           GaussianRational.from_value(point))


def test_monomial_order():
    assert vanishing_order(pr(Z ** 3)) == 3


def test_unit_denominator_cancels():
    f = pr(Z ** 2 + Z ** 3, ONE + Z)
    assert vanishing_order(f) == 2
    # reduced representation: the numerator factor (1+z) is cancelled
    assert f.is_polynomial()


def test_linear_factor_at_one():
    assert vanishing_order(pr(Z - 1, ONE, 1)) == 1


def test_infinite_order():
    assert vanishing_order(pr(MultiPoly.zero(CTX))) == math.inf


def test_denominator_must_be_regular():
    with pytest.raises(HolosimError):
        pr(ONE, Z)


def test_order_is_multiplicative(rng):
    for _ in range(25):
        f = _random_germ(rng)
        g = _random_germ(rng)
        of, og = vanishing_order(f), vanishing_order(g)
        assert vanishing_order(f * g) == of + og


def _random_germ(rng):
    degree = rng.randint(0, 3)
    num_terms = {(k,): GaussianRational(rng.randint(-3, 3))
                 for k in range(degree + 1)}
    num = MultiPoly(CTX, num_terms) * Z ** rng.randint(0, 2)
    den = ONE + Z * rng.randint(0, 2)
    if num.is_zero():
        num = Z
    return pr(num, den)


def test_division_by_unit_and_failure():
    f = pr(Z)
    unit = pr(ONE + Z)
    assert vanishing_order(f / unit) == 1
    with pytest.raises(HolosimError):
        f / f  # divisor vanishes at the base point


def test_equality_cross_multiplied():
    a = pr(Z * 2, ONE * 2)
    b = pr(Z)
    assert a == b
