"""The intertwiner operator Phi -> A*Phi - Phi*B and its representation matrix.

With row-major vectorization the representation matrix is
``M = kron(A, I) - kron(I, B^T)``, so ``M @ vec(Phi) = vec(A Phi - Phi B)``
and the kernel of ``M(point)`` is the space of pointwise intertwiners.
The mirror space {Theta : Theta B = A Theta} is the kernel of the operator
built with the arguments swapped, i.e. ``build_intertwiner(B, A)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra.linalg import exact_kernel, poly_det, rank
from .algebra.matrices import MatrixFamily
from .algebra.poly import MultiPoly
from .algebra import unipoly
from .algebra.scalars import GaussianRational
from .errors import ShapeError

BASIS_CONVENTION = "row-major-vec"


def vec_index(n: int, i: int, j: int) -> int:
    return i * n + j


def vec_grid(grid: Sequence[Sequence]) -> list:
    """Row-major vectorization of a square grid."""
    return [x for row in grid for x in row]


def unvec(values: Sequence, n: int) -> list:
    if len(values) != n * n:
        raise ShapeError(f"cannot reshape {len(values)} values to {n}x{n}")
    return [list(values[i * n:(i + 1) * n]) for i in range(n)]


def vec_family(m: MatrixFamily) -> list:
    return [e for row in m.entries for e in row]


def unvec_family(entries: Sequence[MultiPoly], n: int) -> MatrixFamily:
    return MatrixFamily(unvec(list(entries), n))


@dataclass(frozen=True)
class IntertwinerMatrix:
    """Representation matrix of Phi -> A*Phi - Phi*B in the fixed basis."""

    a: MatrixFamily
    b: MatrixFamily
    matrix: MatrixFamily
    basis: str = BASIS_CONVENTION

    @property
    def n(self) -> int:
        return self.a.rows

    def swap(self) -> "IntertwinerMatrix":
        """Operator for the mirror equation Theta*B = A*Theta."""
        return build_intertwiner(self.b, self.a)


@dataclass(frozen=True)
class JumpLocus:
    """Where the kernel dimension of the intertwiner matrix jumps.

    For univariate families the locus is the zero set of a squarefree
    polynomial (None when empty).  For multivariate families it is captured
    by the list of all nonzero r x r minors, r the generic rank: the rank
    drops at a point exactly when all of them vanish there.
    """

    generic_kernel_dim: int
    generic_rank: int
    locus_polynomial: MultiPoly | None = None
    minors: tuple = ()

    def is_empty(self) -> bool:
        if self.locus_polynomial is not None:
            return self.locus_polynomial.is_constant()
        return not self.minors

    def drops_at(self, point: Sequence) -> bool:
        if self.generic_rank == 0:
            return False
        if self.locus_polynomial is not None:
            return self.locus_polynomial.evaluate(point).is_zero()
        return all(m.evaluate(point).is_zero() for m in self.minors)


def build_intertwiner(a: MatrixFamily, b: MatrixFamily) -> IntertwinerMatrix:
    """Representation matrix of Phi -> A*Phi - Phi*B, identity-checked on a basis."""
    if a.ctx != b.ctx:
        raise ShapeError("A and B live in different variable contexts")
    if not a.is_square() or a.shape != b.shape:
        raise ShapeError("A and B must be square of equal size")
    n = a.rows
    ident = MatrixFamily.identity(a.ctx, n)
    m = a.kron(ident) - ident.kron(b.transpose())
    op = IntertwinerMatrix(a, b, m)
    _check_construction(op)
    return op


def _check_construction(op: IntertwinerMatrix):
    # M @ vec(E_ij) must reproduce A E_ij - E_ij B for every basis matrix
    n = op.n
    ctx = op.a.ctx
    zero = MultiPoly.zero(ctx)
    one = MultiPoly.constant(ctx, 1)
    for i in range(n):
        for j in range(n):
            basis = MatrixFamily([[one if (r, c) == (i, j) else zero
                                   for c in range(n)] for r in range(n)])
            column = [zero] * (n * n)
            column[vec_index(n, i, j)] = one
            image = [sum((op.matrix.entries[r][k] * column[k]
                          for k in range(n * n)), zero) for r in range(n * n)]
            direct = op.a @ basis - basis @ op.b
            if unvec_family(image, n) != direct:
                raise AssertionError("intertwiner construction identity failed")


def intertwiner_dimension_at(op: IntertwinerMatrix, point: Sequence) -> int:
    """dim ker M(point), exact."""
    return len(exact_kernel(op.matrix.evaluate(point)))


def kernel_basis_at(op: IntertwinerMatrix, point: Sequence) -> list:
    """Kernel vectors of M(point), reshaped to n x n scalar grids."""
    return [unvec(v, op.n) for v in exact_kernel(op.matrix.evaluate(point))]


def jump_locus(op: IntertwinerMatrix) -> JumpLocus:
    m = op.matrix
    r = m.generic_rank()
    kernel_dim = m.cols - r
    if r == 0:
        return JumpLocus(kernel_dim, 0)
    minors = _nonzero_minors(m, r)
    ctx = m.ctx
    if len(ctx.names) == 1 and not ctx.conjugates:
        g: list = []
        for minor in minors:
            g = unipoly.gcd(g, minor.univariate_coeffs()) if g else unipoly.monic(minor.univariate_coeffs())
            if unipoly.degree(g) == 0:
                break
        locus = MultiPoly.from_univariate(ctx, unipoly.squarefree_part(g))
        return JumpLocus(kernel_dim, r, locus_polynomial=locus)
    return JumpLocus(kernel_dim, r, minors=tuple(minors))


def _nonzero_minors(m: MatrixFamily, size: int) -> list:
    from itertools import combinations
    minors = []
    for rows in combinations(range(m.rows), size):
        for cols in combinations(range(m.cols), size):
            sub = [[m.entries[i][j] for j in cols] for i in rows]
            d = poly_det(sub)
            if not d.is_zero():
                minors.append(d)
    return minors


def wasow_criterion(op: IntertwinerMatrix, point: Sequence) -> bool:
    """True iff dim ker M is locally constant at the point.

    For polynomial families over affine space this is equivalent to the rank
    of M at the point matching the generic rank (the point misses the locus
    where the kernel dimension jumps).
    """
    return rank(op.matrix.evaluate(point)) == op.matrix.generic_rank()
