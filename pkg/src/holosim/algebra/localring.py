"""Germs of holomorphic functions at a base point, as reduced rational functions.

A :class:`PointedRational` is a univariate rational function whose
denominator does not vanish at the base point, i.e. a concrete
representative of a function germ regular there.  Fractions are kept
reduced with a monic denominator.
"""

from __future__ import annotations

import math
from typing import Sequence

from ..errors import HolosimError, ShapeError
from . import unipoly
from .poly import MultiPoly, VariableContext
from .scalars import GaussianRational, ONE, ZERO

INFINITE_ORDER = math.inf


class PointedRational:
    """num/den with den(point) != 0, reduced, den monic."""

    __slots__ = ("ctx", "num", "den", "point")

    def __init__(self, ctx: VariableContext, num, den, point: GaussianRational,
                 _reduced: bool = False):
        if len(ctx.names) != 1 or ctx.conjugates:
            raise ShapeError("PointedRational requires a univariate context")
        num = list(num)
        den = list(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if unipoly.eval_at(den, point).is_zero():
            raise HolosimError(
                f"denominator vanishes at the base point {point}")
        if not _reduced:
            if num:
                g = unipoly.gcd(num, den)
                if unipoly.degree(g) > 0:
                    num = unipoly.exact_div(num, g)
                    den = unipoly.exact_div(den, g)
            lead = den[-1]
            if lead != ONE:
                inv = lead.inverse()
                num = unipoly.scale(num, inv)
                den = unipoly.scale(den, inv)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "point", point)

    def __setattr__(self, name, value):
        raise AttributeError("PointedRational is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_poly(p: MultiPoly, point) -> "PointedRational":
        point = GaussianRational.from_value(point)
        return PointedRational(p.ctx, p.univariate_coeffs(), [ONE], point,
                               _reduced=True)

    @staticmethod
    def constant(ctx: VariableContext, value, point) -> "PointedRational":
        value = GaussianRational.from_value(value)
        point = GaussianRational.from_value(point)
        return PointedRational(ctx, unipoly.constant(value), [ONE], point,
                               _reduced=True)

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def numerator_poly(self) -> MultiPoly:
        return MultiPoly.from_univariate(self.ctx, self.num)

    def denominator_poly(self) -> MultiPoly:
        return MultiPoly.from_univariate(self.ctx, self.den)

    def is_polynomial(self) -> bool:
        return self.den == [ONE]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "PointedRational"):
        if self.ctx != other.ctx or self.point != other.point:
            raise ShapeError("operands have different contexts or base points")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        num = unipoly.add(unipoly.mul(self.num, other.den),
                          unipoly.mul(other.num, self.den))
        return PointedRational(self.ctx, num, unipoly.mul(self.den, other.den),
                               self.point)

    __radd__ = __add__

    def __neg__(self):
        return PointedRational(self.ctx, unipoly.neg(self.num), self.den,
                               self.point, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        return PointedRational(self.ctx, unipoly.mul(self.num, other.num),
                               unipoly.mul(self.den, other.den), self.point)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        self._check(other)
        if unipoly.eval_at(other.num, self.point).is_zero():
            raise HolosimError("division by a germ vanishing at the base point")
        return PointedRational(self.ctx, unipoly.mul(self.num, other.den),
                               unipoly.mul(self.den, other.num), self.point)

    def inverse(self) -> "PointedRational":
        return self._coerce(1) / self

    def _coerce(self, other) -> "PointedRational":
        if isinstance(other, PointedRational):
            return other
        if isinstance(other, MultiPoly):
            return PointedRational.from_poly(other, self.point)
        return PointedRational.constant(self.ctx, other, self.point)

    def __eq__(self, other):
        if not isinstance(other, PointedRational):
            return NotImplemented
        if self.ctx != other.ctx or self.point != other.point:
            return False
        lhs = unipoly.mul(self.num, other.den)
        rhs = unipoly.mul(other.num, self.den)
        return lhs == rhs

    def __hash__(self):
        return hash((self.ctx, self.point, tuple(self.num), tuple(self.den)))

    # -- evaluation --------------------------------------------------------

    def evaluate(self, at=None) -> GaussianRational:
        point = self.point if at is None else GaussianRational.from_value(at)
        den = unipoly.eval_at(self.den, point)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return unipoly.eval_at(self.num, point) / den

    def __str__(self):
        var = self.ctx.names[0]
        num = unipoly.to_string(self.num, var)
        if self.is_polynomial():
            return num
        return f"({num})/({unipoly.to_string(self.den, var)})"

    def __repr__(self):
        return f"PointedRational({self} at {self.point})"


def vanishing_order(f: PointedRational):
    """Order of vanishing at the base point; ``math.inf`` for the zero germ.

    The denominator is a unit of the local ring, so only the numerator
    contributes.
    """
    if f.is_zero():
        return INFINITE_ORDER
    shifted = unipoly.taylor_shift(f.num, f.point)
    order = unipoly.vanishing_order_at_zero(shifted)
    assert order is not None
    return order


def local_matrix_inverse(entries: Sequence[Sequence[PointedRational]]):
    """Inverse of a square PointedRational matrix invertible at the base point.

    Pivots are restricted to entries that are units of the local ring, so
    every intermediate value stays regular at the point; this succeeds
    exactly when the evaluated matrix is invertible there.
    """
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise ShapeError("inverse of a non-square matrix")
    if n == 0:
        return []
    sample = entries[0][0]
    ctx, point = sample.ctx, sample.point
    one = PointedRational.constant(ctx, 1, point)
    zero = PointedRational.constant(ctx, 0, point)
    a = [list(row) + [one if i == j else zero for j in range(n)]
         for i, row in enumerate(entries)]
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if not a[i][c].is_zero() and not a[i][c].evaluate().is_zero():
                pivot = i
                break
        if pivot is None:
            raise HolosimError("matrix is not invertible at the base point")
        a[c], a[pivot] = a[pivot], a[c]
        inv = a[c][c].inverse()
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]
