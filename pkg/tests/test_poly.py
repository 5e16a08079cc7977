import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from holosim import MultiPoly, context, evaluate
from holosim.algebra.scalars import GaussianRational
from holosim.errors import ArityMismatchError, ShapeError

CTX = context("z", "w")
CONJ = context("z", "w", "zb", "wb", conjugates={"zb": "z", "wb": "w"})


def poly_strategy(ctx):
    coeff = st.builds(GaussianRational,
                      st.fractions(min_value=-50, max_value=50, max_denominator=8),
                      st.fractions(min_value=-50, max_value=50, max_denominator=8))
    exps = st.tuples(*(st.integers(min_value=0, max_value=3) for _ in ctx.names))
    return st.dictionaries(exps, coeff, max_size=5).map(lambda d: MultiPoly(ctx, d))


point_strategy = st.tuples(
    st.builds(GaussianRational, st.fractions(min_value=-9, max_value=9, max_denominator=4),
              st.fractions(min_value=-9, max_value=9, max_denominator=4)),
    st.builds(GaussianRational, st.fractions(min_value=-9, max_value=9, max_denominator=4),
              st.fractions(min_value=-9, max_value=9, max_denominator=4)),
)


def test_zero_polynomial_evaluates_to_zero():
    assert evaluate(MultiPoly.zero(CTX), [GaussianRational(7), GaussianRational(-2)]) \
        == GaussianRational(0)


def test_monomial_at_ones():
    z = MultiPoly.variable(CTX, "z")
    w = MultiPoly.variable(CTX, "w")
    one = GaussianRational(1)
    assert evaluate(z ** 2 * w ** 2, [one, one]) == one


def test_h_times_h_star_on_the_circle():
    # v1 + i v2 times v1 - i v2 equals x1^2 + x2^2 = 1 at (1, 0, 0)
    ctx3 = context("v1", "v2", "v3")
    v1 = MultiPoly.variable(ctx3, "v1")
    v2 = MultiPoly.variable(ctx3, "v2")
    i = GaussianRational(0, 1)
    h = v1 + v2 * i
    h_star = v1 - v2 * i
    value = evaluate(h * h_star, [GaussianRational(1), GaussianRational(0),
                                  GaussianRational(0)])
    assert value == GaussianRational(1)


def test_conjugate_binding():
    z = MultiPoly.variable(CONJ, "z")
    zb = MultiPoly.variable(CONJ, "zb")
    val = evaluate(z * zb, [GaussianRational(1, 1), GaussianRational(0)])
    assert val == GaussianRational(2)  # |1+i|^2


def test_arity_mismatch():
    z = MultiPoly.variable(CTX, "z")
    with pytest.raises(ArityMismatchError):
        evaluate(z, [GaussianRational(1)])
    with pytest.raises(ArityMismatchError):
        evaluate(z, [GaussianRational(1)] * 3)


@settings(max_examples=60)
@given(poly_strategy(CTX), poly_strategy(CTX), point_strategy)
def test_evaluation_is_a_ring_homomorphism(p, q, point):
    assert evaluate(p * q, point) == evaluate(p, point) * evaluate(q, point)
    assert evaluate(p + q, point) == evaluate(p, point) + evaluate(q, point)


def test_pow_matches_repeated_multiplication(rng):
    for _ in range(10):
        terms = {(rng.randint(0, 2), rng.randint(0, 2)):
                 GaussianRational(rng.randint(-3, 3)) for _ in range(3)}
        p = MultiPoly(CTX, terms)
        expected = MultiPoly.constant(CTX, 1)
        for k in range(4):
            assert p ** k == expected
            expected = expected * p


def test_substitution():
    tctx = context("t")
    t = MultiPoly.variable(tctx, "t")
    z = MultiPoly.variable(CTX, "z")
    w = MultiPoly.variable(CTX, "w")
    p = z ** 2 * w
    image = p.substitute({"z": t ** 3, "w": t ** 4})
    assert image == t ** 10


def test_context_mixing_is_rejected():
    other = context("z", "w")
    assert other == CTX  # frozen dataclass equality is structural
    third = context("x")
    with pytest.raises(ShapeError):
        MultiPoly.variable(CTX, "z") + MultiPoly.variable(third, "x")


def test_no_zero_coefficients_stored():
    z = MultiPoly.variable(CTX, "z")
    p = z - z
    assert p.is_zero() and p.terms == {}
