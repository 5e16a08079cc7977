"""Exact linear algebra over the Gaussian rationals and over polynomial rings.

Scalar matrices are plain lists of lists of :class:`GaussianRational`.
Kernels come from reduced row echelon form; polynomial ranks come from
fraction-free (Bareiss) elimination, so every intermediate value stays in
the ring and the result is the rank over the fraction field.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import ShapeError
from .poly import MultiPoly
from .scalars import GaussianRational, ONE, ZERO

ScalarGrid = list  # list[list[GaussianRational]]


def _entry_size(z: GaussianRational) -> int:
    return (z.re.numerator.bit_length() + z.re.denominator.bit_length()
            + z.im.numerator.bit_length() + z.im.denominator.bit_length())


def copy_grid(m: Sequence[Sequence[GaussianRational]]) -> ScalarGrid:
    return [list(row) for row in m]


def identity_grid(n: int) -> ScalarGrid:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def rref(m: Sequence[Sequence[GaussianRational]]) -> tuple[ScalarGrid, list[int]]:
    """Reduced row echelon form and the list of pivot columns.

    Pivots are chosen, within each column, by smallest cleared-denominator
    size with ties broken in row order.
    """
    a = copy_grid(m)
    if not a:
        return a, []
    rows, cols = len(a), len(a[0])
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        best = None
        for i in range(r, rows):
            if not a[i][c].is_zero():
                size = _entry_size(a[i][c])
                if best is None or size < best[0]:
                    best = (size, i)
        if best is None:
            continue
        i = best[1]
        a[r], a[i] = a[i], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
    return a, pivot_cols


def rank(m: Sequence[Sequence[GaussianRational]]) -> int:
    return len(rref(m)[1])


def exact_kernel(m: Sequence[Sequence[GaussianRational]]) -> list[list[GaussianRational]]:
    """Basis of the right kernel; dimension equals cols - rank."""
    if not m:
        return []
    cols = len(m[0])
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def mat_mul(a: ScalarGrid, b: ScalarGrid) -> ScalarGrid:
    if not a or not b or len(a[0]) != len(b):
        raise ShapeError("incompatible shapes in matrix product")
    n, k, m = len(a), len(b), len(b[0])
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if x.is_zero():
                continue
            row_b = b[t]
            row_o = out[i]
            for j in range(m):
                row_o[j] = row_o[j] + x * row_b[j]
    return out


def mat_vec(a: ScalarGrid, v: Sequence[GaussianRational]) -> list[GaussianRational]:
    return [sum((x * y for x, y in zip(row, v)), ZERO) for row in a]


def mat_sub(a: ScalarGrid, b: ScalarGrid) -> ScalarGrid:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero_grid(a: ScalarGrid) -> bool:
    return all(x.is_zero() for row in a for x in row)


def det(m: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    a = copy_grid(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ShapeError("determinant of a non-square matrix")
    sign = ONE
    result = ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if not a[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
            sign = -sign
        p = a[c][c]
        result = result * p
        inv = p.inverse()
        for i in range(c + 1, n):
            if a[i][c].is_zero():
                continue
            f = a[i][c] * inv
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * result


def inverse(m: Sequence[Sequence[GaussianRational]]) -> ScalarGrid:
    n = len(m)
    a = [list(row) + list(identity_row) for row, identity_row in zip(copy_grid(m), identity_grid(n))]
    red, pivots = rref(a)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def select_invertible_submatrix(m: Sequence[Sequence[GaussianRational]]) -> tuple[list[int], list[int]]:
    """Row and column indices of a maximal invertible square submatrix."""
    a = copy_grid(m)
    if not a:
        return [], []
    rows, cols = len(a), len(a[0])
    row_idx = list(range(rows))
    sel_rows: list[int] = []
    sel_cols: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not a[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        row_idx[r], row_idx[pivot] = row_idx[pivot], row_idx[r]
        inv = a[r][c].inverse()
        for i in range(r + 1, rows):
            if a[i][c].is_zero():
                continue
            f = a[i][c] * inv
            a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        sel_rows.append(row_idx[r])
        sel_cols.append(c)
        r += 1
        if r >= rows:
            break
    return sel_rows, sel_cols


# -- polynomial matrices -----------------------------------------------------


def poly_exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Exact quotient p/q in the polynomial ring (raises if not divisible)."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ctx = p.ctx
    remainder = {e: c for e, c in p.terms.items()}
    quotient: dict = {}
    q_lead = max(q.terms, key=lambda e: (sum(e), e))
    q_lead_coef = q.terms[q_lead]
    while remainder:
        lead = max(remainder, key=lambda e: (sum(e), e))
        exps = tuple(a - b for a, b in zip(lead, q_lead))
        if any(e < 0 for e in exps):
            raise ArithmeticError("polynomial division is not exact")
        coef = remainder[lead] / q_lead_coef
        quotient[exps] = quotient.get(exps, ZERO) + coef
        for qe, qc in q.terms.items():
            target = tuple(a + b for a, b in zip(exps, qe))
            s = remainder.get(target, ZERO) - coef * qc
            if s.is_zero():
                remainder.pop(target, None)
            else:
                remainder[target] = s
    return MultiPoly(ctx, quotient)


def poly_matrix_rank(entries: Sequence[Sequence[MultiPoly]]) -> int:
    """Rank over the fraction field via fraction-free Bareiss elimination.

    Pivots are nonzero entries with the fewest terms, ties in row-major
    order, with full row/column pivoting.
    """
    a = [list(row) for row in entries]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    if rows == 0 or cols == 0:
        return 0
    ctx = a[0][0].ctx
    prev_pivot = MultiPoly.constant(ctx, 1)
    r = 0
    while r < min(rows, cols):
        best = None
        for i in range(r, rows):
            for j in range(r, cols):
                if not a[i][j].is_zero():
                    size = len(a[i][j].terms)
                    if best is None or size < best[0]:
                        best = (size, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != r:
            a[r], a[bi] = a[bi], a[r]
        if bj != r:
            for row in a:
                row[r], row[bj] = row[bj], row[r]
        pivot = a[r][r]
        for i in range(r + 1, rows):
            for j in range(r + 1, cols):
                num = a[i][j] * pivot - a[i][r] * a[r][j]
                a[i][j] = poly_exact_div(num, prev_pivot) if not num.is_zero() else num
            a[i][r] = MultiPoly.zero(ctx)
        prev_pivot = pivot
        r += 1
    return r


def poly_det(entries: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant of a square polynomial matrix by cofactor expansion."""
    n = len(entries)
    if n == 0:
        raise ShapeError("determinant of an empty matrix")
    ctx = entries[0][0].ctx
    cols = tuple(range(n))

    cache: dict = {}

    def minor(row: int, col_mask: tuple) -> MultiPoly:
        if row == n:
            return MultiPoly.constant(ctx, 1)
        key = (row, col_mask)
        hit = cache.get(key)
        if hit is not None:
            return hit
        acc = MultiPoly.zero(ctx)
        sign = 1
        for k, c in enumerate(col_mask):
            e = entries[row][c]
            if not e.is_zero():
                rest = col_mask[:k] + col_mask[k + 1:]
                term = e * minor(row + 1, rest)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        cache[key] = acc
        return acc

    return minor(0, cols)
