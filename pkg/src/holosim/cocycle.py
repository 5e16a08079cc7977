"""Finite-covering cocycle verification and assembly of global similarities.

Open sets are modeled by finite sample witnesses; chart and overlap data are
matrices of polynomials over one variable context.  Every identity is
checked symbolically when it holds at the polynomial level, and otherwise
exactly at the declared sample points (transition matrices are frequently
inverses only on their overlap, where the symbolic product is not the
identity but the sampled one is).  Nothing here solves for a splitting:
given local similarities and a splitting of their transition cocycle, the
assembly glues one global similarity and verifies it chart by chart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .algebra.linalg import det, inverse, mat_mul
from .algebra.matrices import MatrixFamily
from .algebra.poly import MultiPoly
from .algebra.scalars import GaussianRational
from .errors import CocycleAssemblyError, CoveringError, ShapeError

Point = tuple  # tuple of GaussianRational, base-variable coordinates


def _normalize_point(point: Sequence) -> Point:
    return tuple(GaussianRational.from_value(x) if not isinstance(x, GaussianRational) else x
                 for x in point)


@dataclass(frozen=True)
class Covering:
    """Finite chart names with sample-point witnesses per chart and per overlap."""

    charts: tuple  # ordered (name, (point, ...)) pairs
    overlaps: tuple  # ordered ((i, j), (point, ...)) pairs, both orders present

    @staticmethod
    def build(charts: Mapping[str, Sequence], overlaps: Mapping[tuple, Sequence]) -> "Covering":
        chart_items = []
        for name in sorted(charts):
            chart_items.append((name, tuple(_normalize_point(p) for p in charts[name])))
        names = {name for name, _ in chart_items}
        sym: dict = {}
        for (i, j), samples in overlaps.items():
            if i not in names or j not in names:
                raise CoveringError(f"overlap ({i}, {j}) references unknown charts")
            if i == j:
                raise CoveringError("overlaps are declared for distinct charts only")
            pts = tuple(_normalize_point(p) for p in samples)
            for key in ((i, j), (j, i)):
                if key in sym and sym[key] != pts:
                    raise CoveringError(
                        f"overlap witnesses for {key} differ between the two orders")
                sym[key] = pts
        return Covering(tuple(chart_items), tuple(sorted(sym.items())))

    @property
    def names(self) -> list:
        return [name for name, _ in self.charts]

    def chart_samples(self, name: str) -> tuple:
        for n, pts in self.charts:
            if n == name:
                return pts
        raise CoveringError(f"unknown chart {name!r}")

    def overlap_samples(self, i: str, j: str) -> tuple:
        if i == j:
            return self.chart_samples(i)
        for key, pts in self.overlaps:
            if key == (i, j):
                return pts
        return ()


@dataclass(frozen=True)
class MatrixCocycle:
    """Transition data f_ij on nonempty overlaps; f_ii is the identity."""

    covering: Covering
    entries: tuple  # ordered ((i, j), MatrixFamily) pairs

    @staticmethod
    def build(covering: Covering, entries: Mapping[tuple, MatrixFamily]) -> "MatrixCocycle":
        sizes = set()
        for pair, mat in entries.items():
            if not mat.is_square():
                raise ShapeError(f"cocycle entry {pair} is not square")
            sizes.add(mat.shape)
        if len(sizes) > 1:
            raise ShapeError("cocycle entries have inconsistent sizes")
        for (i, j) in entries:
            if i != j and not covering.overlap_samples(i, j) and (j, i) not in entries:
                pass  # entries on declared-empty overlaps are permitted and ignored
        for key, pts in covering.overlaps:
            if pts and key not in entries:
                raise CoveringError(f"missing cocycle entry for overlap {key}")
        return MatrixCocycle(covering, tuple(sorted(entries.items())))

    def entry(self, i: str, j: str) -> Optional[MatrixFamily]:
        for key, mat in self.entries:
            if key == (i, j):
                return mat
        return None

    @property
    def size(self) -> int:
        return self.entries[0][1].rows if self.entries else 0


def _holds(lhs: MatrixFamily, rhs: MatrixFamily, samples: Sequence) -> bool:
    """Symbolic identity, with exact sample evaluation as the fallback."""
    if lhs == rhs:
        return True
    if not samples:
        return False
    for point in samples:
        if lhs.evaluate(point) != rhs.evaluate(point):
            return False
    return True


def verify_cocycle(cocycle: MatrixCocycle) -> bool:
    """Check f_ii = I, f_ij f_ji = I, and f_ij f_jk = f_ik.

    The pair and triple laws are checked symbolically or at the overlap
    witnesses (common witnesses for triples); a triple with no common
    witness and no symbolic identity fails the verification.
    """
    cov = cocycle.covering
    names = cov.names
    if not cocycle.entries:
        return True
    n = cocycle.size
    for name in names:
        diag = cocycle.entry(name, name)
        if diag is not None:
            ident = MatrixFamily.identity(diag.ctx, n)
            if not _holds(diag, ident, cov.chart_samples(name)):
                return False
    for i_pos, i in enumerate(names):
        for j in names[i_pos + 1:]:
            samples = cov.overlap_samples(i, j)
            fij = cocycle.entry(i, j)
            fji = cocycle.entry(j, i)
            if fij is None or fji is None:
                if samples:
                    return False
                continue
            ident = MatrixFamily.identity(fij.ctx, n)
            if not _holds(fij @ fji, ident, samples):
                return False
    for i in names:
        for j in names:
            for k in names:
                if len({i, j, k}) < 3:
                    continue
                fij = cocycle.entry(i, j)
                fjk = cocycle.entry(j, k)
                fik = cocycle.entry(i, k)
                if fij is None or fjk is None or fik is None:
                    continue
                common = [p for p in cov.overlap_samples(i, j)
                          if p in set(cov.overlap_samples(j, k))
                          and p in set(cov.overlap_samples(i, k))]
                if (fij @ fjk) == fik:
                    continue
                if not common:
                    return False
                if not _holds(fij @ fjk, fik, common):
                    return False
    return True


def verify_commutant_valued(cocycle: MatrixCocycle, a: MatrixFamily) -> bool:
    """True iff A f_ij = f_ij A for every pair, symbolically or at witnesses."""
    for (i, j), mat in cocycle.entries:
        if mat.shape != a.shape:
            raise ShapeError("cocycle entries and A have different shapes")
        samples = cocycle.covering.overlap_samples(i, j)
        if not _holds(a @ mat, mat @ a, samples):
            return False
    return True


@dataclass(frozen=True)
class Splitting:
    """Per-chart invertible matrices h_i, witnessed at the chart samples."""

    covering: Covering
    maps: tuple  # ordered (chart, MatrixFamily) pairs

    @staticmethod
    def build(covering: Covering, maps: Mapping[str, MatrixFamily]) -> "Splitting":
        items = []
        for name in covering.names:
            if name not in maps:
                raise CoveringError(f"splitting misses chart {name!r}")
            h = maps[name]
            for point in covering.chart_samples(name):
                if det(h.evaluate(point)).is_zero():
                    raise CoveringError(
                        f"splitting entry for chart {name!r} is singular at a sample")
            items.append((name, h))
        return Splitting(covering, tuple(items))

    def entry(self, name: str) -> MatrixFamily:
        for n, h in self.maps:
            if n == name:
                return h
        raise CoveringError(f"unknown chart {name!r}")


def verify_equivalence(f: MatrixCocycle, g: MatrixCocycle, s: Splitting) -> bool:
    """Check f_ij = h_i g_ij h_j^{-1} on every overlap.

    Symbolically the identity is checked in the cleared form
    f_ij h_j == h_i g_ij; at sample points the inverse is taken exactly.
    """
    if f.covering != g.covering or f.covering != s.covering:
        raise CoveringError("cocycles and splitting must share one covering")
    cov = f.covering
    names = cov.names
    for i in names:
        for j in names:
            if i == j:
                continue
            samples = cov.overlap_samples(i, j)
            fij = f.entry(i, j)
            gij = g.entry(i, j)
            if fij is None and gij is None:
                continue
            if fij is None or gij is None:
                if samples:
                    return False
                continue
            hi = s.entry(i)
            hj = s.entry(j)
            if (fij @ hj) == (hi @ gij):
                continue
            if not samples:
                return False
            for point in samples:
                hj_at = hj.evaluate(point)
                if det(hj_at).is_zero():
                    return False
                lhs = fij.evaluate(point)
                rhs = mat_mul(mat_mul(hi.evaluate(point), gij.evaluate(point)),
                              inverse(hj_at))
                if lhs != rhs:
                    return False
    return True


def identity_cocycle(covering: Covering, ctx, n: int) -> MatrixCocycle:
    ident = MatrixFamily.identity(ctx, n)
    entries = {}
    for (i, j), pts in covering.overlaps:
        if pts:
            entries[(i, j)] = ident
    return MatrixCocycle.build(covering, entries)


def transition_cocycle(covering: Covering, locals_: Mapping[str, MatrixFamily]) -> MatrixCocycle:
    """The cocycle H_i adj(H_j)/det(H_j) stored in cleared polynomial form.

    Entries are exact wherever det H_j = 1; for general denominators use
    sample-based verification (the entries are H_i H_j^{-1} scaled by
    det H_j, so the cocycle laws hold at samples only up to that scale).
    This helper is intended for unimodular local similarities, where the
    stored entry equals H_i H_j^{-1} on the nose.
    """
    entries = {}
    for (i, j), pts in covering.overlaps:
        if not pts:
            continue
        hi = locals_[i]
        hj = locals_[j]
        d = hj.determinant()
        if not d.is_constant():
            raise ShapeError("transition cocycle needs constant-determinant locals")
        scale = MultiPoly.constant(hj.ctx, d.constant_value().inverse())
        entries[(i, j)] = (hi @ hj.adjugate()).scalar_mul(scale)
    return MatrixCocycle.build(covering, entries)


@dataclass(frozen=True)
class ChartMap:
    """A matrix of rational maps on one chart: numerator grid over one denominator."""

    num: MatrixFamily
    den: MultiPoly

    def evaluate(self, point: Sequence) -> list:
        d = self.den.evaluate(point)
        if d.is_zero():
            raise ZeroDivisionError("chart map denominator vanishes at the sample")
        inv = d.inverse()
        return [[e * inv for e in row] for row in self.num.evaluate(point)]


@dataclass(frozen=True)
class GlobalSimilarity:
    """One global intertwiner, represented chart by chart as h_i^{-1} H_i."""

    covering: Covering
    charts: tuple  # ordered (chart, ChartMap) pairs

    def chart_map(self, name: str) -> ChartMap:
        for n, m in self.charts:
            if n == name:
                return m
        raise CoveringError(f"unknown chart {name!r}")

    def evaluate(self, chart: str, point: Sequence) -> list:
        return self.chart_map(chart).evaluate(point)


def assemble_global_similarity(a: MatrixFamily, b: MatrixFamily,
                               locals_: Mapping[str, MatrixFamily],
                               splitting: Splitting) -> GlobalSimilarity:
    """Glue chartwise similarities into one global H := h_i^{-1} H_i.

    Preconditions, each reported with the offending chart or pair:
    per chart, H_i intertwines (A, B) and is invertible at the chart
    samples, and h_i commutes with A; per overlapping pair,
    H_i H_j^{-1} = h_i h_j^{-1}.  The result is verified to satisfy
    A H = H B on every chart and to agree across overlaps at the witnesses.
    """
    cov = splitting.covering
    names = cov.names
    for name in names:
        if name not in locals_:
            raise CocycleAssemblyError(f"missing local similarity for chart {name!r}",
                                       chart=name)
    if a.ctx != b.ctx or a.shape != b.shape or not a.is_square():
        raise ShapeError("A and B must be square, equal-sized, in one context")

    for name in names:
        h_local = locals_[name]
        samples = cov.chart_samples(name)
        if not _holds(a @ h_local, h_local @ b, samples):
            raise CocycleAssemblyError(
                f"local similarity on chart {name!r} does not intertwine A and B",
                chart=name)
        for point in samples:
            if det(h_local.evaluate(point)).is_zero():
                raise CocycleAssemblyError(
                    f"local similarity on chart {name!r} is singular at a sample",
                    chart=name)
        split = splitting.entry(name)
        if not _holds(a @ split, split @ a, samples):
            raise CocycleAssemblyError(
                f"splitting entry on chart {name!r} does not commute with A",
                chart=name)

    for i_pos, i in enumerate(names):
        for j in names[i_pos + 1:]:
            samples = cov.overlap_samples(i, j)
            if not samples:
                continue
            hi, hj = locals_[i], locals_[j]
            si, sj = splitting.entry(i), splitting.entry(j)
            lhs = si.adjugate() @ hi
            rhs = sj.adjugate() @ hj
            if (lhs.scalar_mul(sj.determinant())) == (rhs.scalar_mul(si.determinant())):
                continue
            ok = True
            for point in samples:
                hj_at = hj.evaluate(point)
                sj_at = sj.evaluate(point)
                if det(hj_at).is_zero() or det(sj_at).is_zero():
                    ok = False
                    break
                left = mat_mul(hi.evaluate(point), inverse(hj_at))
                right = mat_mul(si.evaluate(point), inverse(sj_at))
                if left != right:
                    ok = False
                    break
            if not ok:
                raise CocycleAssemblyError(
                    f"transition mismatch: H_i H_j^-1 != h_i h_j^-1 on pair ({i}, {j})",
                    pair=(i, j))

    charts = []
    for name in names:
        split = splitting.entry(name)
        num = split.adjugate() @ locals_[name]
        den = split.determinant()
        if not ((a @ num) == (num @ b)):
            raise CocycleAssemblyError(
                f"assembled map on chart {name!r} fails A H = H B", chart=name)
        charts.append((name, ChartMap(num, den)))

    result = GlobalSimilarity(cov, tuple(charts))
    for i_pos, i in enumerate(names):
        for j in names[i_pos + 1:]:
            for point in cov.overlap_samples(i, j):
                if result.evaluate(i, point) != result.evaluate(j, point):
                    raise CocycleAssemblyError(
                        f"assembled maps disagree on overlap ({i}, {j})", pair=(i, j))
    return result


def induced_cocycle(cocycle: MatrixCocycle, refinement: Covering,
                    tau: Mapping[str, str]) -> MatrixCocycle:
    """Restrict a cocycle to a refinement via the index map tau.

    Every refined chart's witnesses must lie in the witnesses of its
    tau-image, and refined overlap witnesses in those of the image pair;
    entries are inherited as f*_{ab} = f_{tau(a) tau(b)}.
    """
    original = cocycle.covering
    for name in refinement.names:
        target = tau.get(name)
        if target is None:
            raise CoveringError(f"refinement chart {name!r} has no tau-image")
        big = set(original.chart_samples(target))
        if not set(refinement.chart_samples(name)) <= big:
            raise CoveringError(
                f"chart {name!r} is not contained in its image {target!r}")
    entries = {}
    size = cocycle.size
    for (x, y), pts in refinement.overlaps:
        if not pts:
            continue
        tx, ty = tau[x], tau[y]
        if tx == ty:
            allowed = set(original.chart_samples(tx))
        else:
            allowed = set(original.overlap_samples(tx, ty))
        if not set(pts) <= allowed:
            raise CoveringError(
                f"overlap ({x}, {y}) is not contained in the image overlap")
        if tx == ty:
            ctx = cocycle.entries[0][1].ctx
            entries[(x, y)] = MatrixFamily.identity(ctx, size)
        else:
            mat = cocycle.entry(tx, ty)
            if mat is None:
                raise CoveringError(f"no entry for image pair ({tx}, {ty})")
            entries[(x, y)] = mat
    return MatrixCocycle.build(refinement, entries)


def induced_splitting(splitting: Splitting, refinement: Covering,
                      tau: Mapping[str, str]) -> Splitting:
    maps = {name: splitting.entry(tau[name]) for name in refinement.names}
    return Splitting.build(refinement, maps)
