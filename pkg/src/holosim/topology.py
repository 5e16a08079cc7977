"""Winding numbers, certified paths in commutant groups, cutoff gluing, and
the two-chart sphere example with its obstruction integer.

Float arithmetic appears only where the data is genuinely numeric (sampled
loops); every algebraic certificate (segment determinants, factor bounds,
sphere bounds) is exact, with operator norms replaced by rational
Frobenius-norm upper bounds.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra.linalg import det, inverse, is_zero_grid, mat_mul, mat_sub
from .algebra.matrices import MatrixFamily
from .algebra.poly import MultiPoly, VariableContext, context
from .algebra.scalars import GaussianRational, ONE, ZERO
from .algebra.sturm import certify_nonvanishing_on_segment
from .errors import (
    CertificationError,
    HypothesisError,
    LoopError,
    PreconditionError,
    ShapeError,
    SphereBoundError,
)

WINDING_RESIDUAL_TOLERANCE = 1e-6
MAX_DELTA_HALVINGS = 32
MAX_CUTOFF_FACTORS = 64

_T_CONTEXT = context("t")


# -- sampled loops -------------------------------------------------------------


@dataclass(frozen=True)
class SampledLoop:
    """A closed curve in C* given by samples; the last connects to the first."""

    samples: tuple  # complex numbers

    @staticmethod
    def from_values(values: Sequence) -> "SampledLoop":
        return SampledLoop(tuple(complex(v) for v in values))


def winding_number(loop: SampledLoop) -> int:
    """Total argument increment / 2 pi, rounded with a checked residual.

    Requires nonzero samples and sampling density below a quarter turn per
    step; the pre-rounding residual must stay under 1e-6.
    """
    samples = loop.samples
    if len(samples) < 2:
        raise LoopError("a loop needs at least two samples")
    total = 0.0
    for k, z in enumerate(samples):
        if z == 0:
            raise LoopError(f"zero sample at index {k}")
    for k in range(len(samples)):
        z = samples[k]
        w = samples[(k + 1) % len(samples)]
        step = cmath.phase(w / z)
        if abs(step) >= math.pi / 2:
            raise LoopError(
                f"sampling density violated between indices {k} and "
                f"{(k + 1) % len(samples)}: |step| = {abs(step):.3f} >= pi/2")
        total += step
    turns = total / (2 * math.pi)
    nearest = round(turns)
    if abs(turns - nearest) >= WINDING_RESIDUAL_TOLERANCE:
        raise LoopError(f"winding residual {abs(turns - nearest):.3e} too large")
    return int(nearest)


# -- piecewise matrix paths ---------------------------------------------------


@dataclass(frozen=True)
class PiecewisePath:
    """Matrix path on [0,1]-parametrized segments with exact endpoint matching."""

    segments: tuple  # MatrixFamily over the single parameter t
    alpha: Optional[Fraction] = None
    delta: Optional[Fraction] = None

    def __post_init__(self):
        if not self.segments:
            raise ShapeError("a path needs at least one segment")
        for seg in self.segments:
            if len(seg.ctx.names) != 1 or seg.ctx.conjugates:
                raise ShapeError("path segments must be univariate in the parameter")
        one = GaussianRational(1)
        zero = GaussianRational(0)
        for a, b in zip(self.segments, self.segments[1:]):
            if a.evaluate([one]) != b.evaluate([zero]):
                raise ShapeError("consecutive segment endpoints disagree")

    def start(self) -> list:
        return self.segments[0].evaluate([GaussianRational(0)])

    def end(self) -> list:
        return self.segments[-1].evaluate([GaussianRational(1)])


def frobenius_norm_sq(grid: Sequence[Sequence[GaussianRational]]) -> Fraction:
    total = Fraction(0)
    for row in grid:
        for x in row:
            total += x.norm_sq()
    return total


def rational_sqrt_upper_bound(value: Fraction) -> Fraction:
    """A rational upper bound for sqrt(value), value >= 0."""
    if value < 0:
        raise ValueError("negative argument")
    a, b = value.numerator, value.denominator
    return Fraction(math.isqrt(a * b) + 1, b)


def _scalar_grid(m: Sequence[Sequence]) -> list:
    return [[x if isinstance(x, GaussianRational) else GaussianRational.from_value(x)
             for x in row] for row in m]


def _constant_family(ctx: VariableContext, grid: Sequence[Sequence[GaussianRational]]) -> MatrixFamily:
    return MatrixFamily([[MultiPoly.constant(ctx, x) for x in row] for row in grid])


def gcom_path(theta: Sequence[Sequence], phi: Sequence[Sequence]) -> PiecewisePath:
    """A certified path from Theta to I inside the invertible commutant of Phi.

    Three segments: Theta + lambda(t) I with lambda(t) = alpha t + i delta
    t(1-t), then (1-t) Theta + alpha I, then the scalar segment down to I.
    alpha = 1 + (rational Frobenius upper bound for |Theta|); delta is the
    first of alpha/2, alpha/4, ... whose segment determinant passes the
    exact Sturm nonvanishing certificate.  Segments are polynomials in
    Theta and I, hence commute with Phi.
    """
    theta = _scalar_grid(theta)
    phi = _scalar_grid(phi)
    n = len(theta)
    if any(len(row) != n for row in theta) or len(phi) != n or any(len(r) != n for r in phi):
        raise ShapeError("Theta and Phi must be square of equal size")
    if mat_mul(theta, phi) != mat_mul(phi, theta):
        raise PreconditionError("Theta does not commute with Phi")
    if det(theta).is_zero():
        raise PreconditionError("Theta is not invertible")

    alpha = 1 + rational_sqrt_upper_bound(frobenius_norm_sq(theta))
    ctx = _T_CONTEXT
    t = MultiPoly.variable(ctx, "t")
    theta_fam = _constant_family(ctx, theta)
    ident = MatrixFamily.identity(ctx, n)

    delta = alpha / 2
    first = None
    for _ in range(MAX_DELTA_HALVINGS):
        lam = (t * GaussianRational(alpha)
               + (t - t * t) * GaussianRational(0, delta))
        candidate = theta_fam + ident.scalar_mul(lam)
        if certify_nonvanishing_on_segment(candidate.determinant()):
            first = candidate
            break
        delta = delta / 2
    if first is None:
        raise CertificationError(
            f"no admissible delta after {MAX_DELTA_HALVINGS} halvings")

    one_minus_t = MultiPoly.constant(ctx, 1) - t
    second = theta_fam.scalar_mul(one_minus_t) + ident.scalar_mul(
        MultiPoly.constant(ctx, GaussianRational(alpha)))
    third = ident.scalar_mul(
        one_minus_t * GaussianRational(alpha) + t)
    for segment in (second, third):
        if not certify_nonvanishing_on_segment(segment.determinant()):
            raise CertificationError("segment determinant certificate failed")

    phi_fam = _constant_family(ctx, phi)
    path = PiecewisePath((first, second, third), alpha=alpha, delta=delta)
    for segment in path.segments:
        if (segment @ phi_fam) != (phi_fam @ segment):
            raise AssertionError("path segment does not commute with Phi")
    if path.start() != theta or path.end() != [[ONE if i == j else ZERO for j in range(n)]
                                               for i in range(n)]:
        raise AssertionError("path endpoints are not Theta and I")
    return path


# -- multiplicative cutoff gluing ----------------------------------------------


@dataclass(frozen=True)
class CutoffFunction:
    """Piecewise-linear cutoff of a real level: 1 below lo, 0 above hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise HypothesisError("cutoff needs lo < hi")

    def value(self, level) -> Fraction:
        level = Fraction(level)
        if level <= self.lo:
            return Fraction(1)
        if level >= self.hi:
            return Fraction(0)
        return (self.hi - level) / (self.hi - self.lo)


@dataclass(frozen=True)
class GluedCutoffMap:
    """The product map prod_j (I + chi * (g_j - I)) built from a homotopy of f.

    Evaluable at (point, level) pairs: equals f where chi = 1, the identity
    where chi = 0, commutes with the ambient family wherever f does, and is
    invertible because every factor stays within distance < 1 of I.
    """

    f: MatrixFamily
    ambient: MatrixFamily
    chi: CutoffFunction
    alpha: Fraction
    delta: Fraction
    knots: tuple  # increasing Fractions from -1 to 1

    def _homotopy_at(self, t: Fraction, f_at: list) -> list:
        n = len(f_at)
        if t <= 0:
            s = t + 1
            lam = GaussianRational(self.alpha * s, self.delta * s * (1 - s))
            return [[f_at[i][j] + (lam if i == j else ZERO) for j in range(n)]
                    for i in range(n)]
        c = GaussianRational(1 - t + t / self.alpha)
        return [[(f_at[i][j] + (GaussianRational(self.alpha) if i == j else ZERO)) * c
                 for j in range(n)] for i in range(n)]

    def factors_at(self, point: Sequence) -> list:
        f_at = self.f.evaluate(point)
        values = [self._homotopy_at(t, f_at) for t in self.knots]
        factors = []
        for g_now, g_next in zip(values, values[1:]):
            inv = inverse(g_next)
            factors.append(mat_mul(g_now, inv))
        factors.append(values[-1])
        return factors

    def evaluate(self, point: Sequence, level) -> list:
        n = self.f.rows
        chi = self.chi.value(level)
        ident = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        if chi == 0:
            return ident
        chi_g = GaussianRational(chi)
        result = ident
        for factor in self.factors_at(point):
            scaled = [[(factor[i][j] - (ONE if i == j else ZERO)) * chi_g
                       + (ONE if i == j else ZERO)
                       for j in range(n)] for i in range(n)]
            result = mat_mul(result, scaled)
        return result


def multiplicative_cutoff(f: MatrixFamily, ambient: MatrixFamily,
                          samples: Sequence, chi: CutoffFunction) -> GluedCutoffMap:
    """Glue f to the identity through a certified multiplicative factorization.

    ``samples`` is a sequence of (point, level) pairs; chi(level) = 1 marks
    the region where the glued map must equal f, chi(level) = 0 the region
    where it must be the identity, and every sample with chi(level) > 0
    witnesses the neighborhood where the homotopy of f lives.  The homotopy
    reuses the eigenvalue-avoiding detour of the commutant paths (alpha from
    a sampled Frobenius bound, delta halved until the exact determinant
    certificate passes at every witness), and [-1, 1] is subdivided until
    consecutive factors stay within Frobenius distance < 1 of the identity
    at every witness.  The returned map is verified at every sample.
    """
    if f.ctx != ambient.ctx or f.shape != ambient.shape or not f.is_square():
        raise ShapeError("f and the ambient family must be square, same context")
    n = f.rows
    normalized = [(tuple(GaussianRational.from_value(x) if not isinstance(x, GaussianRational) else x
                         for x in point), Fraction(level)) for point, level in samples]
    inner = [p for p, lv in normalized if chi.value(lv) == 1]
    active = [p for p, lv in normalized if chi.value(lv) > 0]

    for point, _ in normalized:
        f_at = f.evaluate(point)
        a_at = ambient.evaluate(point)
        if mat_mul(f_at, a_at) != mat_mul(a_at, f_at):
            raise PreconditionError("f does not commute with the ambient family "
                                    f"at sample {point}")
    for point in active:
        if det(f.evaluate(point)).is_zero():
            raise PreconditionError(f"f is singular at active sample {point}")

    if active:
        alpha = 1 + max(rational_sqrt_upper_bound(frobenius_norm_sq(f.evaluate(p)))
                        for p in active)
    else:
        alpha = Fraction(2)

    ctx = _T_CONTEXT
    t = MultiPoly.variable(ctx, "t")
    delta = alpha / 2
    chosen = None
    for _ in range(MAX_DELTA_HALVINGS):
        ok = True
        for point in active:
            lam = (t * GaussianRational(alpha)
                   + (t - t * t) * GaussianRational(0, delta))
            fam = _constant_family(ctx, f.evaluate(point)) \
                + MatrixFamily.identity(ctx, n).scalar_mul(lam)
            if not certify_nonvanishing_on_segment(fam.determinant()):
                ok = False
                break
        if ok:
            chosen = delta
            break
        delta = delta / 2
    if chosen is None:
        raise CertificationError(
            f"no admissible delta after {MAX_DELTA_HALVINGS} halvings")

    glued = GluedCutoffMap(f, ambient, chi, alpha, chosen,
                           (Fraction(-1), Fraction(0), Fraction(1)))
    knots = [Fraction(-1), Fraction(0), Fraction(1)]
    while True:
        bad = None
        for k in range(len(knots) - 1):
            for point in active:
                f_at = f.evaluate(point)
                g_now = glued._homotopy_at(knots[k], f_at)
                g_next = glued._homotopy_at(knots[k + 1], f_at)
                if det(g_next).is_zero():
                    raise CertificationError(
                        f"homotopy is singular at knot {knots[k + 1]} and sample {point}")
                diff = mat_sub(mat_mul(g_now, inverse(g_next)),
                               [[ONE if i == j else ZERO for j in range(n)]
                                for i in range(n)])
                if frobenius_norm_sq(diff) >= 1:
                    bad = k
                    break
            if bad is not None:
                break
        if bad is None:
            for point in active:
                f_at = f.evaluate(point)
                last = glued._homotopy_at(Fraction(1), f_at)
                diff = mat_sub(last, [[ONE if i == j else ZERO for j in range(n)]
                                      for i in range(n)])
                if frobenius_norm_sq(diff) >= 1:
                    raise CertificationError(
                        "final factor is not within distance 1 of the identity")
            break
        if len(knots) >= MAX_CUTOFF_FACTORS:
            raise CertificationError(
                f"subdivision exceeded {MAX_CUTOFF_FACTORS} factors")
        knots.insert(bad + 1, (knots[bad] + knots[bad + 1]) / 2)
        glued = GluedCutoffMap(f, ambient, chi, alpha, chosen, tuple(knots))

    glued = GluedCutoffMap(f, ambient, chi, alpha, chosen, tuple(knots))
    ident = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for point, level in normalized:
        chi_value = chi.value(level)
        value = glued.evaluate(point, level)
        if chi_value == 1 and value != f.evaluate(point):
            raise AssertionError("glued map does not restrict to f on the core")
        if chi_value == 0 and value != ident:
            raise AssertionError("glued map is not the identity outside the support")
        a_at = ambient.evaluate(point)
        if mat_mul(value, a_at) != mat_mul(a_at, value):
            raise AssertionError("glued map does not commute with the ambient family")
        if det(value).is_zero():
            raise AssertionError("glued map is singular at a sample")
    return glued


# -- the sphere example ---------------------------------------------------------

SPHERE_CONTEXT = context("v1", "v2", "v3")
RHO_CONTEXT = context("x1", "x2", "x3", "y1", "y2", "y3")


def sphere_h() -> MultiPoly:
    v1 = MultiPoly.variable(SPHERE_CONTEXT, "v1")
    v2 = MultiPoly.variable(SPHERE_CONTEXT, "v2")
    return v1 + v2 * GaussianRational(0, 1)


def sphere_h_star() -> MultiPoly:
    v1 = MultiPoly.variable(SPHERE_CONTEXT, "v1")
    v2 = MultiPoly.variable(SPHERE_CONTEXT, "v2")
    return v1 - v2 * GaussianRational(0, 1)


def _rho_polynomial() -> MultiPoly:
    xs = [MultiPoly.variable(RHO_CONTEXT, n) for n in ("x1", "x2", "x3")]
    ys = [MultiPoly.variable(RHO_CONTEXT, n) for n in ("y1", "y2", "y3")]
    radial = xs[0] ** 2 + xs[1] ** 2 + xs[2] ** 2 - MultiPoly.constant(RHO_CONTEXT, 1)
    return radial ** 3 + ys[0] ** 2 + ys[1] ** 2 + ys[2] ** 2


@dataclass(frozen=True)
class SphereBoundReport:
    """Outcome of the exact bound validation on the generated sample grids."""

    band_identity_ok: bool            # |h h* - 1| < 1/2 on every band sample
    cap_det_one_ok: bool              # det C+ = 1 where x3 >= hi cutoff
    re_det_stated_ok: bool            # Re det C+ >= 1/2 where x3 < hi cutoff
    re_det_provable_ok: bool          # Re det C+ >= 1/3 there (the provable bound)
    min_re_det: Optional[Fraction]
    stated_violations: tuple          # ((point, value), ...) for the 1/2 bound

    def summary(self) -> str:
        parts = [
            f"band |hh*-1|<1/2: {'ok' if self.band_identity_ok else 'VIOLATED'}",
            f"cap det=1: {'ok' if self.cap_det_one_ok else 'VIOLATED'}",
            f"Re det >= 1/2: {'ok' if self.re_det_stated_ok else f'VIOLATED at {len(self.stated_violations)} samples'}",
            f"Re det >= 1/3: {'ok' if self.re_det_provable_ok else 'VIOLATED'}",
        ]
        if self.min_re_det is not None:
            parts.append(f"min Re det = {self.min_re_det}")
        return "; ".join(parts)


@dataclass(frozen=True)
class SphereExample:
    """Sample grids on the unit sphere, the cutoff, and the glued frame C+."""

    eps: Fraction
    ell: int
    chi: CutoffFunction
    band_samples: tuple   # rational points on the sphere with -2 eps < x3 < 2 eps
    cap_samples: tuple    # rational points with x3 >= 2 eps
    h: MultiPoly
    h_star: MultiPoly
    rho: MultiPoly
    bounds: SphereBoundReport

    def hh_star_at(self, point: Sequence) -> GaussianRational:
        return (self.h * self.h_star).evaluate(point)

    def cplus_at(self, point: Sequence) -> list:
        """The continuous frame [[chi h, 1 - chi], [chi - 1, chi h*]] at a point."""
        chi = GaussianRational(self.chi.value(point[2].re))
        one_minus = ONE - chi
        return [
            [chi * self.h.evaluate(point), one_minus],
            [-one_minus, chi * self.h_star.evaluate(point)],
        ]

    def u_plus_samples(self) -> list:
        return [p for p in self.band_samples if p[2].re > -self.eps] + list(self.cap_samples)

    def equator_loop(self, g: MultiPoly, samples: int = 256) -> SampledLoop:
        values = []
        for k in range(samples):
            angle = 2 * math.pi * k / samples
            values.append(g.evaluate_complex((math.cos(angle), math.sin(angle), 0.0)))
        return SampledLoop(tuple(values))


def _half_circle_parameters(count: int) -> list:
    # count parameters in (-1, 1), offset to avoid the endpoints
    return [Fraction(-1) + Fraction(2 * j + 1, count) for j in range(count)]


def _circle_points(count: int) -> list:
    """count rational points on the unit circle, spread over all quadrants."""
    if count % 2:
        raise ValueError("count must be even")
    points = []
    for s in _half_circle_parameters(count // 2):
        den = 1 + s * s
        c = GaussianRational(Fraction(1 - s * s, den))
        n = GaussianRational(Fraction(2 * s, den))
        points.append((c, n))
        points.append((-c, -n))
    return points


def _stereographic_point(radius: Fraction, circle: tuple) -> tuple:
    r_sq = radius * radius
    den = Fraction(1) / (1 + r_sq)
    c, s = circle
    x1 = c * GaussianRational(2 * radius * den)
    x2 = s * GaussianRational(2 * radius * den)
    x3 = GaussianRational((r_sq - 1) * den)
    return (x1, x2, x3)


def _rational_sqrt_between(lower: Fraction, upper: Fraction) -> Fraction:
    """A rational r > 0 with lower < r^2 < upper, by exact bisection."""
    if not 0 <= lower < upper:
        raise ValueError("need 0 <= lower < upper")
    a = Fraction(0)
    b = rational_sqrt_upper_bound(upper)
    for _ in range(256):
        mid = (a + b) / 2
        sq = mid * mid
        if sq <= lower:
            a = mid
        elif sq >= upper:
            b = mid
        else:
            return mid
    raise ArithmeticError("could not locate a rational square root in the interval")


def sphere_example(eps=Fraction(1, 10), ell: int = 0,
                   band_grid: tuple = (64, 64), cap_grid: tuple = (16, 64),
                   strict: bool = False) -> SphereExample:
    """Build the sphere example: sample grids, cutoff, frame, exact bounds.

    Real rational points of the unit sphere are generated from stereographic
    parameters, so every stored sample satisfies x1^2+x2^2+x3^2 = 1 exactly.
    The band identity |h h* - 1| < 1/2 is enforced (violations raise); the
    frame bounds are validated exactly and collected in the report.  The
    stated Re det >= 1/2 bound fails in the cutoff transition zone (see the
    report); with strict=True that failure raises as well.
    """
    eps = Fraction(eps)
    if not 0 < eps <= Fraction(1, 10):
        raise HypothesisError("eps must satisfy 0 < eps <= 1/10")
    if ell < 0:
        raise HypothesisError("ell must be a natural number")
    chi = CutoffFunction(eps, 2 * eps)
    h = sphere_h()
    h_star = sphere_h_star()
    hh = h * h_star

    # radii with x3 = (r^2-1)/(r^2+1) strictly inside the band: r^2 must fall in
    # ((1-2eps)/(1+2eps), (1+2eps)/(1-2eps)); endpoints are picked just inside
    band_lo_sq = (1 - 2 * eps) / (1 + 2 * eps)
    band_hi_sq = (1 + 2 * eps) / (1 - 2 * eps)
    gap = (band_hi_sq - band_lo_sq) / 64
    lo = _rational_sqrt_between(band_lo_sq, band_lo_sq + gap)
    hi = _rational_sqrt_between(band_hi_sq - gap, band_hi_sq)

    n_radii, n_angles = band_grid
    circle = _circle_points(n_angles)
    band = []
    for i in range(n_radii):
        radius = lo + (hi - lo) * Fraction(2 * i + 1, 2 * n_radii)
        for c in circle:
            p = _stereographic_point(radius, c)
            band.append(p)
    band_ok = True
    for p in band:
        x1, x2, x3 = p
        assert (x1 * x1 + x2 * x2 + x3 * x3) == ONE
        if not (-2 * eps < x3.re < 2 * eps):
            raise SphereBoundError(f"band sample has x3 = {x3.re} outside the band")
        value = hh.evaluate(p)
        assert value.is_real()
        if not abs(value.re - 1) < Fraction(1, 2):
            band_ok = False
            raise SphereBoundError(
                f"band identity |hh*-1| < 1/2 fails at {p}: value {value.re}")

    cap_lo_sq = band_hi_sq  # x3 >= 2 eps
    cap_lo = _rational_sqrt_between(cap_lo_sq, cap_lo_sq * 4)
    n_cap_radii, n_cap_angles = cap_grid
    cap_circle = _circle_points(n_cap_angles)
    cap = [(ZERO, ZERO, ONE)]
    for i in range(n_cap_radii):
        radius = cap_lo + Fraction(2 * i + 1, n_cap_radii)  # reaches far up the cap
        for c in cap_circle:
            p = _stereographic_point(radius, c)
            if p[2].re >= 2 * eps:
                cap.append(p)

    stated_violations = []
    provable_ok = True
    cap_ok = True
    min_re = None
    for p in band + cap:
        x3 = p[2].re
        if x3 <= -eps:
            continue  # outside the upper chart
        chi_v = chi.value(x3)
        hh_v = hh.evaluate(p)
        det_c = GaussianRational(chi_v * chi_v) * hh_v \
            + GaussianRational((1 - chi_v) * (1 - chi_v))
        if x3 >= 2 * eps:
            if det_c != ONE:
                cap_ok = False
                raise SphereBoundError(f"det C+ != 1 at cap sample {p}")
            continue
        re = det_c.re
        min_re = re if min_re is None else min(min_re, re)
        if re < Fraction(1, 2):
            stated_violations.append((p, re))
        if re < Fraction(1, 3):
            provable_ok = False

    report = SphereBoundReport(
        band_identity_ok=band_ok,
        cap_det_one_ok=cap_ok,
        re_det_stated_ok=not stated_violations,
        re_det_provable_ok=provable_ok,
        min_re_det=min_re,
        stated_violations=tuple(stated_violations),
    )
    if strict and not report.re_det_stated_ok:
        raise SphereBoundError(
            "stated bound Re det C+ >= 1/2 fails: " + report.summary())
    return SphereExample(eps=eps, ell=ell, chi=chi, band_samples=tuple(band),
                         cap_samples=tuple(cap), h=h, h_star=h_star,
                         rho=_rho_polynomial(), bounds=report)


def splitting_obstruction(example: SphereExample, g: MultiPoly,
                          samples: int = 256) -> int:
    """Winding number of g along the equator; nonzero certifies that no
    continuous splitting g = f_+ / f_- over the two caps exists."""
    if g.ctx != SPHERE_CONTEXT:
        raise ShapeError("the obstruction scalar must live on the sphere context")
    return winding_number(example.equator_loop(g, samples))
