"""Local Smith normal form in one variable and the similarity constructors.

``local_smith_form`` factors a univariate polynomial matrix as M = E * D * F
over the ring of rational functions regular at a base point: E, F invertible
there and D diagonal with entries (z - xi)^k.  The factorization decides
whether a prescribed kernel value extends to a kernel section
(``kernel_extension_through``) and drives two constructors for local
similarities: one from the extension test, one from a locally constant
kernel dimension (a frame of kernel sections).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .algebra import unipoly
from .algebra.linalg import (
    exact_kernel,
    poly_det,
    rank,
    select_invertible_submatrix,
)
from .algebra.localring import PointedRational
from .algebra.matrices import MatrixFamily
from .algebra.poly import MultiPoly, VariableContext
from .algebra.scalars import GaussianRational, ONE, ZERO
from .errors import CriterionError, PreconditionError, ShapeError
from .sylvester import IntertwinerMatrix, build_intertwiner, vec_grid, unvec

UCoeffs = list  # list[GaussianRational], ascending degree


def _require_univariate(ctx: VariableContext):
    if len(ctx.names) != 1 or ctx.conjugates:
        raise ShapeError("operation requires a univariate matrix family")


def _order(coeffs: UCoeffs) -> Optional[int]:
    return unipoly.vanishing_order_at_zero(coeffs)


# -- small helpers on matrices of coefficient lists ---------------------------


def _umat_identity(n: int) -> list:
    return [[[ONE] if i == j else [] for j in range(n)] for i in range(n)]


def _umat_mul(a: list, b: list) -> list:
    n, k, m = len(a), len(b), len(b[0])
    out = [[[] for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if not x:
                continue
            for j in range(m):
                y = b[t][j]
                if y:
                    out[i][j] = unipoly.add(out[i][j], unipoly.mul(x, y))
    return out


def _umat_det(a: list) -> UCoeffs:
    n = len(a)
    if n == 1:
        return list(a[0][0])
    acc: UCoeffs = []
    for k in range(n):
        entry = a[0][k]
        if not entry:
            continue
        sub = [[row[c] for c in range(n) if c != k] for row in a[1:]]
        term = unipoly.mul(entry, _umat_det(sub))
        acc = unipoly.add(acc, term) if k % 2 == 0 else unipoly.sub(acc, term)
    return acc


def _umat_adjugate(a: list) -> list:
    n = len(a)
    if n == 1:
        return [[[ONE]]]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[a[r][c] for c in range(n) if c != j]
                   for r in range(n) if r != i]
            cof = _umat_det(sub)
            if (i + j) % 2:
                cof = unipoly.neg(cof)
            out[j][i] = cof
    return out


class LocalSmithForm:
    """M = E * Delta * F with E, F invertible at the base point.

    ``exponents`` are nondecreasing; ``rank`` is the generic rank.  Partial
    sums of the exponents match the vanishing orders of the determinantal
    divisors (gcds of k x k minors), which is the independent
    characterization used in tests.

    The factor grids ``e`` and ``f`` are built on first access; the row and
    column operations are kept internally in coordinates shifted so the base
    point sits at 0, which is also where the exact reconstruction check runs.
    """

    __slots__ = ("ctx", "point", "shape", "rank", "exponents",
                 "_pl", "_qr", "_adj_pl", "_det_pl", "_adj_qr", "_det_qr",
                 "_units", "_e_cache", "_f_cache")

    def __init__(self, ctx: VariableContext, point: GaussianRational, shape: tuple,
                 rank_: int, exponents: tuple, pl: list, qr: list, units: list):
        self.ctx = ctx
        self.point = point
        self.shape = shape
        self.rank = rank_
        self.exponents = exponents
        self._pl = pl
        self._qr = qr
        self._units = units
        self._adj_pl = _umat_adjugate(pl)
        self._det_pl = _umat_det(pl)
        self._adj_qr = _umat_adjugate(qr)
        self._det_qr = _umat_det(qr)
        assert not unipoly.eval_at(self._det_pl, ZERO).is_zero()
        assert not unipoly.eval_at(self._det_qr, ZERO).is_zero()
        self._e_cache = None
        self._f_cache = None

    def _unshift(self, coeffs: UCoeffs) -> UCoeffs:
        return unipoly.taylor_shift(coeffs, -self.point)

    @property
    def e(self) -> tuple:
        """Left factor as an n x n grid of PointedRational: E = adj(P)/det(P)."""
        if self._e_cache is None:
            n = self.shape[0]
            den = self._unshift(self._det_pl)
            self._e_cache = tuple(
                tuple(PointedRational(self.ctx, self._unshift(self._adj_pl[i][j]),
                                      den, self.point) for j in range(n))
                for i in range(n))
        return self._e_cache

    @property
    def f(self) -> tuple:
        """Right factor as an m x m grid of PointedRational: F = U adj(Q)/det(Q)."""
        if self._f_cache is None:
            m = self.shape[1]
            den = self._unshift(self._det_qr)
            rows = []
            for i in range(m):
                unit = self._units[i] if i < self.rank else [ONE]
                rows.append(tuple(
                    PointedRational(self.ctx,
                                    self._unshift(unipoly.mul(unit, self._adj_qr[i][j])),
                                    den, self.point)
                    for j in range(m)))
            self._f_cache = tuple(rows)
        return self._f_cache

    def f_at_point(self) -> list:
        """F evaluated at the base point, straight from the shifted internals."""
        m = self.shape[1]

        def at0(coeffs: UCoeffs) -> GaussianRational:
            return coeffs[0] if coeffs else ZERO

        det0 = at0(self._det_qr)
        inv = det0.inverse()
        out = []
        for i in range(m):
            u0 = at0(self._units[i]) if i < self.rank else ONE
            out.append([u0 * at0(self._adj_qr[i][j]) * inv for j in range(m)])
        return out

    def kernel_section_from_tail(self, tail: Sequence) -> list:
        """Q @ tail in original coordinates, as coefficient lists."""
        m = self.shape[1]
        out = []
        for i in range(m):
            acc: UCoeffs = []
            for j in range(m):
                if not tail[j].is_zero():
                    acc = unipoly.add(acc, unipoly.scale(self._qr[i][j], tail[j]))
            out.append(self._unshift(acc))
        return out

    def delta(self) -> MatrixFamily:
        n, m = self.shape
        z = MultiPoly.variable(self.ctx, self.ctx.names[0])
        shift = z - MultiPoly.constant(self.ctx, self.point)
        zero = MultiPoly.zero(self.ctx)
        grid = [[zero] * m for _ in range(n)]
        for k, kappa in enumerate(self.exponents):
            grid[k][k] = shift ** kappa
        return MatrixFamily(grid)

    def reconstruct(self) -> list:
        """E * Delta * F as a grid of PointedRational (small-instance checks)."""
        n, m = self.shape
        delta = self.delta()
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = PointedRational.constant(self.ctx, 0, self.point)
                for k in range(len(self.exponents)):
                    d = delta.entries[k][k]
                    term = self.e[i][k] * PointedRational.from_poly(d, self.point) * self.f[k][j]
                    acc = acc + term
                row.append(acc)
            out.append(row)
        return out

    def verify_reconstruction(self, m: MatrixFamily) -> bool:
        """Exact check of E * Delta * F == M with denominators cleared.

        E = adj(P)/det(P) and F = U adj(Q)/det(Q), so the identity is
        equivalent to adj(P) * Delta * U * adj(Q) == det(P) det(Q) * M as a
        polynomial identity, checked in the shifted coordinates.
        """
        if m.shape != self.shape:
            return False
        n, cols = self.shape
        du = [[[] for _ in range(cols)] for _ in range(n)]
        for k, kappa in enumerate(self.exponents):
            du[k][k] = unipoly.shift_up(self._units[k], kappa)
        lhs = _umat_mul(_umat_mul(self._adj_pl, du), self._adj_qr)
        factor = unipoly.mul(self._det_pl, self._det_qr)
        for i in range(n):
            for j in range(cols):
                shifted = unipoly.taylor_shift(
                    m.entries[i][j].univariate_coeffs(), self.point)
                if lhs[i][j] != unipoly.mul(factor, shifted):
                    return False
        return True


def vanishing_order_at(p: MultiPoly, point) -> Optional[int]:
    """Order of a univariate polynomial at a point; None for the zero polynomial."""
    _require_univariate(p.ctx)
    point = GaussianRational.from_value(point)
    return _order(unipoly.taylor_shift(p.univariate_coeffs(), point))


def local_smith_form(m: MatrixFamily, point) -> LocalSmithForm:
    """Diagonalize over the local ring at the point.

    Pivoting is on an entry of minimal vanishing order (a unit times a power
    of the local coordinate), ties broken at the lexicographically smallest
    (row, column); its row and column are cleared over the local ring using
    only polynomial row/column operations whose determinants are units, and
    the elimination recurses on the complement.
    """
    _require_univariate(m.ctx)
    ctx = m.ctx
    point = GaussianRational.from_value(point)
    n, cols = m.rows, m.cols

    # shift the base point to 0: work with p(t + point)
    w = [[unipoly.taylor_shift(m.entries[i][j].univariate_coeffs(), point)
          for j in range(cols)] for i in range(n)]
    pl = _umat_identity(n)
    qr = _umat_identity(cols)

    step = 0
    while step < min(n, cols):
        best = None
        for i in range(step, n):
            for j in range(step, cols):
                o = _order(w[i][j])
                if o is None:
                    continue
                if best is None or o < best[0] or (o == best[0] and (i, j) < best[1:]):
                    best = (o, i, j)
        if best is None:
            break
        kappa, bi, bj = best
        if bi != step:
            w[step], w[bi] = w[bi], w[step]
            pl[step], pl[bi] = pl[bi], pl[step]
        if bj != step:
            for row in w:
                row[step], row[bj] = row[bj], row[step]
            for row in qr:
                row[step], row[bj] = row[bj], row[step]
        unit = unipoly.shift_right(w[step][step], kappa)
        for i in range(n):
            if i == step or not w[i][step]:
                continue
            o_i = _order(w[i][step])
            factor = unipoly.shift_up(unipoly.shift_right(w[i][step], o_i), o_i - kappa)
            w[i] = [unipoly.sub(unipoly.mul(unit, a), unipoly.mul(factor, b))
                    for a, b in zip(w[i], w[step])]
            pl[i] = [unipoly.sub(unipoly.mul(unit, a), unipoly.mul(factor, b))
                     for a, b in zip(pl[i], pl[step])]
        for j in range(cols):
            if j == step or not w[step][j]:
                continue
            o_j = _order(w[step][j])
            factor = unipoly.shift_up(unipoly.shift_right(w[step][j], o_j), o_j - kappa)
            for i in range(n):
                w[i][j] = unipoly.sub(unipoly.mul(unit, w[i][j]),
                                      unipoly.mul(factor, w[i][step]))
            for i in range(cols):
                qr[i][j] = unipoly.sub(unipoly.mul(unit, qr[i][j]),
                                       unipoly.mul(factor, qr[i][step]))
        step += 1

    r = step
    exponents = []
    units = []
    for k in range(r):
        o = _order(w[k][k])
        exponents.append(o)
        units.append(unipoly.shift_right(w[k][k], o))
    assert exponents == sorted(exponents), "pivot orders must be nondecreasing"

    return LocalSmithForm(ctx, point, (n, cols), r, tuple(exponents), pl, qr, units)


def determinantal_orders(m: MatrixFamily, point) -> list:
    """Vanishing orders of the gcds of k x k minors, computed from the minors.

    Stops at the first size whose minors all vanish identically; the list
    length is therefore the generic rank.  Successive differences of the
    returned orders are the Smith exponents, which makes this the
    independent oracle for ``local_smith_form``.
    """
    _require_univariate(m.ctx)
    point = GaussianRational.from_value(point)
    n, cols = m.rows, m.cols
    shifted = [[unipoly.taylor_shift(m.entries[i][j].univariate_coeffs(), point)
                for j in range(cols)] for i in range(n)]
    orders = []
    for k in range(1, min(n, cols) + 1):
        best = None
        for rows_sel in combinations(range(n), k):
            for cols_sel in combinations(range(cols), k):
                sub = [[shifted[i][j] for j in cols_sel] for i in rows_sel]
                o = _order(_umat_det(sub))
                if o is not None and (best is None or o < best):
                    best = o
                    if best == 0:
                        break
            if best == 0:
                break
        if best is None:
            break
        orders.append(best)
    return orders


def kernel_extension_through(m: MatrixFamily, point, value: Sequence):
    """Kernel section through a prescribed value at the base point, if any.

    With M = E * Delta * F and f = F(point) @ value, a holomorphic kernel
    section h with h(point) = value exists iff the first r entries of f
    vanish; in that case h is recovered from the tail of f through the
    inverse column operations and is polynomial.  Returns the section as a
    list of PointedRational, or None -- and None certifies that no
    continuous kernel section through the value exists either.
    """
    point = GaussianRational.from_value(point)
    value = [GaussianRational.from_value(v) if not isinstance(v, GaussianRational) else v
             for v in value]
    if len(value) != m.cols:
        raise ShapeError(f"value has length {len(value)}, expected {m.cols}")
    smith = local_smith_form(m, point)
    r = smith.rank
    f_at = smith.f_at_point()
    f_vec = [sum((f_at[i][j] * value[j] for j in range(m.cols)), ZERO)
             for i in range(m.cols)]
    if any(not f_vec[k].is_zero() for k in range(r)):
        return None
    tail = [ZERO] * r + f_vec[r:]
    h_coeffs = smith.kernel_section_from_tail(tail)
    section = [PointedRational(m.ctx, c, [ONE], point, _reduced=True)
               for c in h_coeffs]
    _assert_kernel_section(m, point, value, h_coeffs)
    return section


def _assert_kernel_section(m: MatrixFamily, point, value, h_coeffs):
    # exact identity M @ h == 0 and h(point) == value
    for i in range(m.rows):
        acc: UCoeffs = []
        for j in range(m.cols):
            acc = unipoly.add(acc, unipoly.mul(m.entries[i][j].univariate_coeffs(),
                                               h_coeffs[j]))
        assert not acc, "extension does not solve M h = 0"
    for j in range(m.cols):
        assert unipoly.eval_at(h_coeffs[j], point) == value[j], \
            "extension misses the prescribed value"


@dataclass(frozen=True)
class LocalMatrix:
    """A matrix germ at a point: grid of rational functions regular there."""

    point: GaussianRational
    entries: tuple  # tuple of tuples of PointedRational

    @property
    def shape(self) -> tuple:
        return (len(self.entries), len(self.entries[0]))

    def evaluate(self, at=None) -> list:
        return [[e.evaluate(at) for e in row] for row in self.entries]

    def cleared(self) -> tuple:
        """(numerator MatrixFamily, common denominator polynomial)."""
        ctx = self.entries[0][0].ctx
        den: UCoeffs = [ONE]
        for row in self.entries:
            for e in row:
                if e.den != [ONE]:
                    g = unipoly.gcd(den, e.den)
                    den = unipoly.mul(den, unipoly.exact_div(e.den, g))
        nums = []
        for row in self.entries:
            out_row = []
            for e in row:
                co = unipoly.mul(e.num, unipoly.exact_div(den, e.den))
                out_row.append(MultiPoly.from_univariate(ctx, co))
            nums.append(out_row)
        return MatrixFamily(nums), MultiPoly.from_univariate(ctx, den)

    def intertwines(self, a: MatrixFamily, b: MatrixFamily) -> bool:
        """Exact check of a @ H == H @ b."""
        num, _ = self.cleared()
        return (a @ num) == (num @ b)

    def det_at_point(self) -> GaussianRational:
        from .algebra.linalg import det
        return det(self.evaluate())


def _check_pointwise_intertwiner(a: MatrixFamily, b: MatrixFamily, point,
                                 phi: Sequence) -> list:
    if a.ctx != b.ctx:
        raise ShapeError("A and B live in different variable contexts")
    if not a.is_square() or a.shape != b.shape:
        raise ShapeError("A and B must be square of equal size")
    n = a.rows
    grid = [[GaussianRational.from_value(x) if not isinstance(x, GaussianRational) else x
             for x in row] for row in phi]
    if len(grid) != n or any(len(row) != n for row in grid):
        raise ShapeError(f"Phi must be {n}x{n}")
    a_at = a.evaluate([point])
    b_at = b.evaluate([point])
    lhs = [[sum((grid[i][k] * b_at[k][j] for k in range(n)), ZERO) for j in range(n)]
           for i in range(n)]
    rhs = [[sum((a_at[i][k] * grid[k][j] for k in range(n)), ZERO) for j in range(n)]
           for i in range(n)]
    if lhs != rhs:
        raise PreconditionError(
            "Phi B(point) != A(point) Phi: Phi is not a pointwise intertwiner")
    return grid


def smith_similarity(a: MatrixFamily, b: MatrixFamily, point,
                     phi: Sequence) -> Optional[LocalMatrix]:
    """Local intertwiner germ through Phi from the kernel-extension test.

    Requires Phi B(point) = A(point) Phi (PreconditionError otherwise).
    Returns H with A H = H B identically near the point and H(point) = Phi,
    or None when the extension test fails -- which certifies that no
    continuous intertwiner through Phi exists on any neighborhood.
    """
    point = GaussianRational.from_value(point)
    _require_univariate(a.ctx)
    grid = _check_pointwise_intertwiner(a, b, point, phi)
    op = build_intertwiner(a, b)
    section = kernel_extension_through(op.matrix, point, vec_grid(grid))
    if section is None:
        return None
    n = a.rows
    h = LocalMatrix(point, tuple(tuple(section[i * n + j] for j in range(n))
                                 for i in range(n)))
    assert h.intertwines(a, b)
    return h


def wasow_similarity(a: MatrixFamily, b: MatrixFamily, point,
                     phi: Sequence) -> LocalMatrix:
    """Local intertwiner germ through Phi from a locally constant kernel dimension.

    Requires Phi B(point) = A(point) Phi and the local-constancy criterion
    (CriterionError when the kernel dimension of the intertwiner matrix
    jumps at the point).  A maximal invertible submatrix of M(point) yields,
    by solving the bordered systems over the local ring, a frame of kernel
    sections regular at the point; H is the constant-coefficient combination
    matching vec(Phi) in the fiber.
    """
    point = GaussianRational.from_value(point)
    _require_univariate(a.ctx)
    grid = _check_pointwise_intertwiner(a, b, point, phi)
    op = build_intertwiner(a, b)
    m = op.matrix
    size = m.rows
    generic = m.generic_rank()
    at_point = m.evaluate([point])
    if rank(at_point) != generic:
        raise CriterionError(
            "kernel dimension of the intertwiner matrix jumps at the point")
    rows_sel, cols_sel = select_invertible_submatrix(at_point)
    free_cols = [j for j in range(size) if j not in set(cols_sel)]
    sub = [[m.entries[i][j] for j in cols_sel] for i in rows_sel]
    g = poly_det(sub) if sub else MultiPoly.constant(m.ctx, 1)
    adj = MatrixFamily(sub).adjugate() if sub else None

    phi_vec = vec_grid(grid)
    zero = MultiPoly.zero(m.ctx)
    num_vec = [zero] * size
    for j in free_cols:
        c = phi_vec[j]
        if c.is_zero():
            continue
        section = [zero] * size
        section[j] = g
        if adj is not None:
            col = [m.entries[i][j] for i in rows_sel]
            for t in range(len(cols_sel)):
                acc = zero
                for s in range(len(rows_sel)):
                    acc = acc + adj.entries[t][s] * col[s]
                section[cols_sel[t]] = -acc
        num_vec = [nv + MultiPoly.constant(m.ctx, c) * sv
                   for nv, sv in zip(num_vec, section)]

    g_at = g.evaluate([point])
    fiber = [x.evaluate([point]) / g_at for x in num_vec]
    if fiber != phi_vec:
        raise CriterionError(
            "prescribed value is not in the span of the kernel frame")

    n = a.rows
    entries = tuple(tuple(
        PointedRational(m.ctx, num_vec[i * n + j].univariate_coeffs(),
                        g.univariate_coeffs(), point)
        for j in range(n)) for i in range(n))
    h = LocalMatrix(point, entries)
    assert h.intertwines(a, b)
    assert h.evaluate() == grid
    return h
