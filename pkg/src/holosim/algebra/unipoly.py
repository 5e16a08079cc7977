"""Dense univariate polynomial arithmetic over the Gaussian rationals.

Polynomials are lists of :class:`GaussianRational` coefficients ordered by
ascending degree, normalized so the last entry is nonzero.  The zero
polynomial is the empty list.  These routines back the local-ring and
Sturm-certificate code, where coefficient lists beat sparse dictionaries.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational, ONE, ZERO

Coeffs = list  # list[GaussianRational]


def trim(c: Coeffs) -> Coeffs:
    while c and c[-1].is_zero():
        c.pop()
    return c


def degree(c: Coeffs) -> int:
    """Degree, with deg 0 = -1 by convention."""
    return len(c) - 1


def is_zero(c: Coeffs) -> bool:
    return not c


def constant(value: GaussianRational) -> Coeffs:
    return [] if value.is_zero() else [value]


def add(a: Coeffs, b: Coeffs) -> Coeffs:
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else ZERO
        y = b[k] if k < len(b) else ZERO
        out.append(x + y)
    return trim(out)


def neg(a: Coeffs) -> Coeffs:
    return [-x for x in a]


def sub(a: Coeffs, b: Coeffs) -> Coeffs:
    return add(a, neg(b))


def mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.re and not x.im:
            continue
        for j, y in enumerate(b):
            if y.re or y.im:
                out[i + j] = out[i + j] + x * y
    return trim(out)


def scale(a: Coeffs, s: GaussianRational) -> Coeffs:
    if s.is_zero():
        return []
    return [x * s for x in a]


def shift_up(a: Coeffs, k: int) -> Coeffs:
    """Multiply by t^k."""
    if not a:
        return []
    return [ZERO] * k + list(a)


def eval_at(a: Coeffs, point: GaussianRational) -> GaussianRational:
    acc = ZERO
    for c in reversed(a):
        acc = acc * point + c
    return acc


def divmod_poly(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    """Quotient and remainder over the field Q(i)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = b[-1].inverse()
    while len(r) >= len(b):
        c = r[-1] * inv_lead
        k = len(r) - len(b)
        q[k] = c
        for j in range(len(b)):
            r[k + j] = r[k + j] - c * b[j]
        trim(r)
        if not r:
            break
    return trim(q), r


def exact_div(a: Coeffs, b: Coeffs) -> Coeffs:
    q, r = divmod_poly(a, b)
    if r:
        raise ArithmeticError("division is not exact")
    return q


def monic(a: Coeffs) -> Coeffs:
    if not a:
        return []
    return scale(a, a[-1].inverse())


def gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Monic gcd via the Euclidean algorithm."""
    x, y = list(a), list(b)
    while y:
        _, r = divmod_poly(x, y)
        x, y = y, r
    return monic(x)


def derivative(a: Coeffs) -> Coeffs:
    return trim([a[k] * k for k in range(1, len(a))])


def squarefree_part(a: Coeffs) -> Coeffs:
    if degree(a) < 1:
        return monic(a)
    return monic(exact_div(a, gcd(a, derivative(a))))


def vanishing_order_at_zero(a: Coeffs) -> int | None:
    """Index of the first nonzero coefficient; None for the zero polynomial."""
    for k, c in enumerate(a):
        if not c.is_zero():
            return k
    return None


def shift_right(a: Coeffs, k: int) -> Coeffs:
    """Divide by t^k; the dropped coefficients must be zero."""
    if any(not c.is_zero() for c in a[:k]):
        raise ArithmeticError("not divisible by t^k")
    return trim(list(a[k:]))


def taylor_shift(a: Coeffs, c: GaussianRational) -> Coeffs:
    """Coefficients of p(t + c) by a Horner pass."""
    if not c.re and not c.im:
        return list(a)
    out: Coeffs = []
    for coef in reversed(a):
        # out <- out*(t + c) + coef
        new = [ZERO] * (len(out) + 1)
        for i, x in enumerate(out):
            new[i + 1] = new[i + 1] + x
            new[i] = new[i] + x * c
        new[0] = new[0] + coef
        out = new
    return trim(out)


def conjugate(a: Coeffs) -> Coeffs:
    return [c.conjugate() for c in a]


def real_coeffs(a: Coeffs) -> list[Fraction]:
    """Real parts, provided every imaginary part vanishes."""
    for c in a:
        if c.im:
            raise ArithmeticError("polynomial has nonreal coefficients")
    return [c.re for c in a]


def from_real(coeffs: list[Fraction]) -> Coeffs:
    out = [GaussianRational(c) for c in coeffs]
    return trim(out)


def to_string(a: Coeffs, var: str = "t") -> str:
    if not a:
        return "0"
    parts = []
    for k, c in enumerate(a):
        if c.is_zero():
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if c == ONE:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
    return " + ".join(parts)
