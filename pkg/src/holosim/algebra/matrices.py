"""Matrix families: rectangular grids of polynomials over one variable context."""

from __future__ import annotations

from typing import Callable, Sequence

from ..errors import ShapeError
from .linalg import poly_matrix_rank
from .poly import MultiPoly, VariableContext
from .scalars import GaussianRational


class MatrixFamily:
    """An n x m matrix of polynomials sharing one variable context."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[MultiPoly]]):
        rows = len(entries)
        if rows == 0 or len(entries[0]) == 0:
            raise ShapeError("matrix family must be nonempty")
        cols = len(entries[0])
        ctx = entries[0][0].ctx
        grid = []
        for row in entries:
            if len(row) != cols:
                raise ShapeError("ragged matrix family")
            for e in row:
                if e.ctx != ctx:
                    raise ShapeError("entries live in different variable contexts")
            grid.append(tuple(row))
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(grid))

    def __setattr__(self, name, value):
        raise AttributeError("MatrixFamily is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(ctx: VariableContext, n: int) -> "MatrixFamily":
        one = MultiPoly.constant(ctx, 1)
        zero = MultiPoly.zero(ctx)
        return MatrixFamily([[one if i == j else zero for j in range(n)]
                             for i in range(n)])

    @staticmethod
    def zero(ctx: VariableContext, rows: int, cols: int) -> "MatrixFamily":
        z = MultiPoly.zero(ctx)
        return MatrixFamily([[z] * cols for _ in range(rows)])

    @staticmethod
    def from_scalars(ctx: VariableContext, grid: Sequence[Sequence]) -> "MatrixFamily":
        return MatrixFamily([[MultiPoly.constant(ctx, v) for v in row] for row in grid])

    # -- access ------------------------------------------------------------

    def __getitem__(self, idx: tuple) -> MultiPoly:
        i, j = idx
        return self.entries[i][j]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def map_entries(self, fn: Callable[[MultiPoly], MultiPoly]) -> "MatrixFamily":
        return MatrixFamily([[fn(e) for e in row] for row in self.entries])

    # -- algebra ------------------------------------------------------------

    def _check_ctx(self, other: "MatrixFamily"):
        if self.ctx != other.ctx:
            raise ShapeError("matrix families live in different variable contexts")

    def __add__(self, other: "MatrixFamily") -> "MatrixFamily":
        self._check_ctx(other)
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in matrix sum")
        return MatrixFamily([[a + b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "MatrixFamily") -> "MatrixFamily":
        self._check_ctx(other)
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in matrix difference")
        return MatrixFamily([[a - b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self) -> "MatrixFamily":
        return self.map_entries(lambda e: -e)

    def __matmul__(self, other: "MatrixFamily") -> "MatrixFamily":
        self._check_ctx(other)
        if self.cols != other.rows:
            raise ShapeError("shape mismatch in matrix product")
        zero = MultiPoly.zero(self.ctx)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixFamily(out)

    def scalar_mul(self, p: MultiPoly) -> "MatrixFamily":
        return self.map_entries(lambda e: e * p)

    def transpose(self) -> "MatrixFamily":
        return MatrixFamily([[self.entries[i][j] for i in range(self.rows)]
                             for j in range(self.cols)])

    def __eq__(self, other):
        if not isinstance(other, MatrixFamily):
            return NotImplemented
        return (self.ctx == other.ctx and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ctx, self.entries))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, point: Sequence) -> list:
        """Exact scalar grid at a point (base-variable coordinates)."""
        bound = self.ctx.bind_point(point)
        return [[_eval_bound(e, bound) for e in row] for row in self.entries]

    def evaluate_complex(self, point: Sequence) -> list:
        bound = self.ctx.bind_complex_point(point)
        out = []
        for row in self.entries:
            out.append([_eval_bound_complex(e, bound) for e in row])
        return out

    # -- derived operations ---------------------------------------------------

    def kron(self, other: "MatrixFamily") -> "MatrixFamily":
        """Kronecker product, blocks ordered row-major."""
        self._check_ctx(other)
        out = []
        for i in range(self.rows):
            for p in range(other.rows):
                row = []
                for j in range(self.cols):
                    a = self.entries[i][j]
                    for q in range(other.cols):
                        row.append(a * other.entries[p][q])
                out.append(row)
        return MatrixFamily(out)

    def determinant(self) -> MultiPoly:
        from .linalg import poly_det
        if not self.is_square():
            raise ShapeError("determinant of a non-square family")
        return poly_det(self.entries)

    def adjugate(self) -> "MatrixFamily":
        """Classical adjugate: self @ adjugate() == det * I."""
        from .linalg import poly_det
        n = self.rows
        if not self.is_square():
            raise ShapeError("adjugate of a non-square family")
        if n == 1:
            return MatrixFamily([[MultiPoly.constant(self.ctx, 1)]])
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                sub = [[self.entries[r][c] for c in range(n) if c != j]
                       for r in range(n) if r != i]
                cof = poly_det(sub)
                if (i + j) % 2:
                    cof = -cof
                out[j][i] = cof
        return MatrixFamily(out)

    def generic_rank(self) -> int:
        """Rank over the fraction field of the polynomial ring."""
        return poly_matrix_rank(self.entries)

    def __str__(self):
        body = "; ".join("[" + ", ".join(str(e) for e in row) + "]"
                         for row in self.entries)
        return f"[{body}]"

    def __repr__(self):
        return f"MatrixFamily({self.rows}x{self.cols} over {self.ctx.names})"


def _eval_bound(p: MultiPoly, bound: tuple) -> GaussianRational:
    from .scalars import ZERO
    acc = ZERO
    for exps, coef in p.terms.items():
        term = coef
        for value, e in zip(bound, exps):
            for _ in range(e):
                term = term * value
        acc = acc + term
    return acc


def _eval_bound_complex(p: MultiPoly, bound: tuple) -> complex:
    acc = 0j
    for exps, coef in p.terms.items():
        term = complex(coef)
        for value, e in zip(bound, exps):
            if e:
                term *= value ** e
        acc += term
    return acc


def generic_rank(m: MatrixFamily) -> int:
    return m.generic_rank()
