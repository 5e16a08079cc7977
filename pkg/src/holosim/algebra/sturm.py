"""Exact nonvanishing certificates on [0, 1] via Sturm root counting."""

from __future__ import annotations

from fractions import Fraction

from ..errors import ShapeError
from . import unipoly
from .poly import MultiPoly

RealCoeffs = list  # list[Fraction]


def _real_trim(c: RealCoeffs) -> RealCoeffs:
    while c and c[-1] == 0:
        c.pop()
    return c


def _real_divmod(a: RealCoeffs, b: RealCoeffs) -> tuple[RealCoeffs, RealCoeffs]:
    r = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(r) >= len(b):
        c = r[-1] * inv
        k = len(r) - len(b)
        q[k] = c
        for j in range(len(b)):
            r[k + j] -= c * b[j]
        _real_trim(r)
        if not r:
            break
    return _real_trim(q), r


def _real_eval(a: RealCoeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _real_gcd(a: RealCoeffs, b: RealCoeffs) -> RealCoeffs:
    x, y = list(a), list(b)
    while y:
        _, r = _real_divmod(x, y)
        x, y = y, r
    if x:
        lead = x[-1]
        x = [c / lead for c in x]
    return x


def sturm_chain(p: RealCoeffs) -> list[RealCoeffs]:
    chain = [list(p)]
    d = [k * c for k, c in enumerate(p)][1:]
    chain.append(_real_trim(d))
    while chain[-1] and len(chain[-1]) > 1:
        _, r = _real_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in_open_unit_interval(p: RealCoeffs) -> int:
    """Number of distinct real roots of p in (0, 1); requires p(0), p(1) != 0."""
    p = _real_trim(list(p))
    if not p:
        raise ValueError("zero polynomial")
    if _real_eval(p, Fraction(0)) == 0 or _real_eval(p, Fraction(1)) == 0:
        raise ValueError("endpoint is a root")
    # squarefree part so the classical count applies verbatim
    d = _real_trim([k * c for k, c in enumerate(p)][1:])
    if d:
        g = _real_gcd(p, d)
        if len(g) > 1:
            p, _ = _real_divmod(p, g)
    chain = sturm_chain(p)
    v0 = _sign_changes([_real_eval(c, Fraction(0)) for c in chain])
    v1 = _sign_changes([_real_eval(c, Fraction(1)) for c in chain])
    return v0 - v1


def certify_nonvanishing_on_segment(p) -> bool:
    """True iff the univariate polynomial p(t) has no zero for t in [0, 1].

    Decided exactly: the squared modulus p * conj(p) is a real polynomial
    whose roots on the real axis are exactly the real zeros of p, and a
    Sturm sequence counts its roots in [0, 1].
    """
    if isinstance(p, MultiPoly):
        if len(p.ctx.names) != 1 or p.ctx.conjugates:
            raise ShapeError("certificate requires one real parameter")
        coeffs = p.univariate_coeffs()
    else:
        coeffs = unipoly.trim(list(p))
    if not coeffs:
        return False
    modulus_sq = unipoly.mul(coeffs, unipoly.conjugate(coeffs))
    real = unipoly.real_coeffs(modulus_sq)
    if _real_eval(real, Fraction(0)) == 0 or _real_eval(real, Fraction(1)) == 0:
        return False
    if len(real) == 1:
        return True
    return count_roots_in_open_unit_interval(real) == 0
