import random
from fractions import Fraction

from holosim import MultiPoly, certify_nonvanishing_on_segment, context
from holosim.algebra.scalars import GaussianRational

TCTX = context("t")
T = MultiPoly.variable(TCTX, "t")


def test_constant_one():
    assert certify_nonvanishing_on_segment(MultiPoly.constant(TCTX, 1)) is True


def test_interior_root():
    assert certify_nonvanishing_on_segment(T - Fraction(1, 2)) is False


def test_no_real_roots():
    # Sturm count of (t^2+1)^2 on [0, 1] is 0
    assert certify_nonvanishing_on_segment(T * T + 1) is True


def test_endpoints_and_zero():
    assert certify_nonvanishing_on_segment(MultiPoly.zero(TCTX)) is False
    assert certify_nonvanishing_on_segment(T) is False
    assert certify_nonvanishing_on_segment(T - 1) is False
    assert certify_nonvanishing_on_segment(T - 2) is True


def test_multiple_root_inside():
    assert certify_nonvanishing_on_segment((T - Fraction(1, 2)) ** 2) is False


def test_complex_coefficients():
    i = GaussianRational(0, 1)
    assert certify_nonvanishing_on_segment(T + i) is True
    # root at t = 1/3 hidden in a complex factor
    assert certify_nonvanishing_on_segment((T - Fraction(1, 3)) * (T + i)) is False


def test_agreement_with_dense_sampling(rng):
    # random cubics versus 1000-point rational sampling
    for _ in range(20):
        coeffs = [GaussianRational(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                                   Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
                  for _ in range(4)]
        p = MultiPoly(TCTX, {(k,): c for k, c in enumerate(coeffs)})
        certified = certify_nonvanishing_on_segment(p)
        sampled_zero = False
        for k in range(1001):
            t = GaussianRational(Fraction(k, 1000))
            if p.evaluate([t]).is_zero():
                sampled_zero = True
                break
        if certified:
            assert not sampled_zero
        # dense sampling can miss irrational roots, so the converse is only
        # checked when sampling finds an exact zero
        if sampled_zero:
            assert not certified
