from __future__ import annotations

import random
from fractions import Fraction

import pytest

from holosim import MatrixFamily, MultiPoly, context
from holosim.algebra.scalars import GaussianRational

UNIVARIATE = context("z")


def rational(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def gaussian(rng: random.Random, span: int = 4) -> GaussianRational:
    return GaussianRational(rational(rng, span), rational(rng, span))


def random_univariate(rng: random.Random, degree: int, span: int = 3) -> MultiPoly:
    terms = {}
    for k in range(degree + 1):
        coef = GaussianRational(Fraction(rng.randint(-span, span)))
        if not coef.is_zero():
            terms[(k,)] = coef
    return MultiPoly(UNIVARIATE, terms)


def random_matrix_family(rng: random.Random, rows: int, cols: int,
                         degree: int) -> MatrixFamily:
    return MatrixFamily([[random_univariate(rng, rng.randint(0, degree))
                          for _ in range(cols)] for _ in range(rows)])


def unimodular_conjugator(rng: random.Random, degree: int = 2) -> MatrixFamily:
    """A 2x2 polynomial matrix with constant nonzero determinant."""
    ctx = UNIVARIATE
    one = MultiPoly.constant(ctx, 1)
    zero = MultiPoly.zero(ctx)
    upper = MatrixFamily([[one, random_univariate(rng, degree)], [zero, one]])
    lower = MatrixFamily([[one, zero], [random_univariate(rng, degree), one]])
    diag = MatrixFamily.from_scalars(ctx, [[rng.choice([1, 2, -1]), 0],
                                           [0, rng.choice([1, -2, 3])]])
    return upper @ lower @ diag


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
