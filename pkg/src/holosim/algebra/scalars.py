"""Gaussian rational scalars: exact complex numbers a + b*i with a, b rational.

This is the coefficient field for everything in the library.  Denominators
are kept positive and in lowest terms by ``fractions.Fraction``.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class GaussianRational:
    """An exact complex scalar with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        if type(re) is not Fraction:
            re = Fraction(re)
        if type(im) is not Fraction:
            im = Fraction(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_value(value: "GaussianRational | RationalLike") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if type(other) is GaussianRational:
            return _make(self.re + other.re, self.im + other.im)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is GaussianRational:
            return _make(self.re - other.re, self.im - other.im)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if type(other) is GaussianRational:
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return _make(a * c, b)
            return _make(a * c - b * d, a * d + b * c)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return _make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return _make(-self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- comparisons / hashing -----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    # -- conversions -----------------------------------------------------

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


def _make(re: Fraction, im: Fraction) -> "GaussianRational":
    """Trusted constructor: both arguments must already be Fractions."""
    obj = object.__new__(GaussianRational)
    object.__setattr__(obj, "re", re)
    object.__setattr__(obj, "im", im)
    return obj


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _coerce(value) -> "GaussianRational":
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return NotImplemented


def format_rational(q: Fraction) -> str:
    """Decimal-free ``p/q`` string, ``p`` alone if the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(z: GaussianRational) -> str:
    """Human string like ``3/2``, ``i``, ``-2i`` or ``1-1/2i``."""
    if z.is_zero():
        return "0"
    parts = []
    if z.re:
        parts.append(format_rational(z.re))
    if z.im:
        if z.im == 1:
            im = "i"
        elif z.im == -1:
            im = "-i"
        else:
            im = format_rational(z.im) + "i"
        if parts and not im.startswith("-"):
            parts.append("+" + im)
        else:
            parts.append(im)
    return "".join(parts)


_TERM_RE = _re.compile(r"^[+-]?[^+-]*(?:[+-][^+-]*)?$")


def parse_scalar(text: str) -> GaussianRational:
    """Parse strings like ``"-3/4"``, ``"i"``, ``"2i"`` or ``"1/2-3i"``."""
    s = text.strip().replace(" ", "")
    if not s or not _TERM_RE.match(s):
        raise ValueError(f"cannot parse scalar {text!r}")
    # split into at most two signed terms
    terms = []
    start = 0
    for k in range(1, len(s)):
        if s[k] in "+-" and s[k - 1] not in "+-/":
            terms.append(s[start:k])
            start = k
    terms.append(s[start:])
    re_part = Fraction(0)
    im_part = Fraction(0)
    seen_re = seen_im = False
    for term in terms:
        if term.endswith("i"):
            if seen_im:
                raise ValueError(f"cannot parse scalar {text!r}")
            body = term[:-1]
            if body in ("", "+"):
                im_part = Fraction(1)
            elif body == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(body)
            seen_im = True
        else:
            if seen_re:
                raise ValueError(f"cannot parse scalar {text!r}")
            re_part = Fraction(term)
            seen_re = True
    return GaussianRational(re_part, im_part)
