"""Curve germs, the rigid 2x2 pair, and the truncated-jet obstruction engine.

The engine decides, by exact linear algebra on Taylor coefficients, which
constant terms of unknown holomorphic functions are forced to vanish by an
identity imposed on a curve germ through the origin: the full germ of C^2,
a cusp {z^p = w^q}, or a union of lines {w = t_j z}.  Forcing all entries
of H(0) to zero for the intertwiner system certifies that the two members
of the rigid pair are not locally holomorphically similar at 0 on the curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from .algebra.linalg import rref
from .algebra.matrices import MatrixFamily
from .algebra.poly import MultiPoly, VariableContext, context
from .algebra.scalars import GaussianRational, ONE, ZERO
from .algebra.series import TruncatedSeries
from .errors import HypothesisError, ShapeError, TruncationError

# -- curve specifications ------------------------------------------------------


@dataclass(frozen=True)
class FullGerm:
    """The full germ of C^2 at the origin (no restriction)."""

    def describe(self) -> str:
        return "full germ"


@dataclass(frozen=True)
class MonomialCusp:
    """The curve {z^p = w^q}, parametrized by z = t^q, w = t^p.

    Standing hypotheses: q < p and gcd(p, q) = 1.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise HypothesisError("cusp exponents must be positive")
        if self.q >= self.p:
            raise HypothesisError(f"cusp requires q < p, got q={self.q}, p={self.p}")
        if math.gcd(self.p, self.q) != 1:
            raise HypothesisError(
                f"cusp exponents must be coprime, got p={self.p}, q={self.q}")

    def describe(self) -> str:
        return f"cusp z^{self.p} = w^{self.q}"


@dataclass(frozen=True)
class LineUnion:
    """A union of lines {w = t_j z} with pairwise distinct slopes."""

    slopes: tuple

    def __post_init__(self):
        slopes = tuple(GaussianRational.from_value(s) for s in self.slopes)
        object.__setattr__(self, "slopes", slopes)
        if len(set(slopes)) != len(slopes):
            raise HypothesisError("line slopes must be pairwise distinct")
        if not slopes:
            raise HypothesisError("a line union needs at least one slope")

    def describe(self) -> str:
        return f"union of {len(self.slopes)} lines"


CurveSpec = Union[FullGerm, MonomialCusp, LineUnion]


# -- the rigid local pair ------------------------------------------------------

PAIR_CONTEXT = context("z", "w", "zb", "wb", conjugates={"zb": "z", "wb": "w"})


@dataclass(frozen=True)
class LocalPair:
    """The rigid 2x2 pair of holomorphic families on C^2, with its continuous
    conjugator S = [[1, c_w], [-c_z, 1]].

    c_z and c_w are stored as polynomial numerators over the common
    denominator |z|^2 + |w|^2, written in the doubled variable set
    (z, w, zb, wb).  All defining identities are verified coefficientwise at
    construction after clearing that denominator.
    """

    ell: int
    a: MatrixFamily
    b: MatrixFamily
    cz_numerator: MultiPoly
    cw_numerator: MultiPoly
    denominator: MultiPoly
    s_cleared: MatrixFamily  # (|z|^2 + |w|^2) * S, polynomial entries

    def det_s_minus_one_complex(self, point: Sequence) -> complex:
        """det S - 1 = c_z * c_w at a numeric point (z, w)."""
        den = self.denominator.evaluate_complex(point)
        cz = self.cz_numerator.evaluate_complex(point) / den
        cw = self.cw_numerator.evaluate_complex(point) / den
        return cz * cw


def local_pair(ell: int) -> LocalPair:
    """Construct the pair for smoothness degree ell, verifying its identities."""
    if ell < 0:
        raise HypothesisError("ell must be a natural number")
    ctx = PAIR_CONTEXT
    z = MultiPoly.variable(ctx, "z")
    w = MultiPoly.variable(ctx, "w")
    zb = MultiPoly.variable(ctx, "zb")
    wb = MultiPoly.variable(ctx, "wb")
    zero = MultiPoly.zero(ctx)

    zw_mixed = z ** (2 + ell) * w ** (2 + ell)
    z_pow = z ** (3 + ell)
    w_pow = w ** (3 + ell)
    a = MatrixFamily([[zw_mixed, z_pow], [w_pow, zero]])
    b = MatrixFamily([[zero, z_pow], [w_pow, zw_mixed]])

    cz_num = zb * w ** (2 + ell)
    cw_num = wb * z ** (2 + ell)
    den = z * zb + w * wb

    # cleared form of c_z z^{3+ell} + c_w w^{3+ell} = z^{2+ell} w^{2+ell}
    if cz_num * z_pow + cw_num * w_pow != zw_mixed * den:
        raise AssertionError("cleared-denominator identity failed")

    s_cleared = MatrixFamily([[den, cw_num], [-cz_num, den]])
    if a @ s_cleared != s_cleared @ b:
        raise AssertionError("A S = S B failed after clearing the denominator")

    return LocalPair(ell=ell, a=a, b=b, cz_numerator=cz_num, cw_numerator=cw_num,
                     denominator=den, s_cleared=s_cleared)


# -- restriction to curves ----------------------------------------------------

_BRANCH_CONTEXT = context("t")


def restrict_to_curve(p: MultiPoly, curve: CurveSpec) -> list:
    """Pull a holomorphic polynomial back along each branch of the curve.

    Cusp: z = t^q, w = t^p (one branch).  Line union: z = t, w = t_j * t
    (one branch per slope).  Full germ: the polynomial itself, unchanged.
    Conjugate variables must not occur.
    """
    if p.uses_conjugates():
        raise ShapeError("restriction is defined for holomorphic data only")
    if isinstance(curve, FullGerm):
        return [p]
    names = [n for n in p.ctx.names if n not in p.ctx.conjugate_map]
    if names != ["z", "w"]:
        raise ShapeError(f"curve restriction expects variables (z, w), got {names}")
    zi = p.ctx.index("z")
    wi = p.ctx.index("w")
    branches = []
    if isinstance(curve, MonomialCusp):
        terms: dict = {}
        for exps, coef in p.terms.items():
            d = exps[zi] * curve.q + exps[wi] * curve.p
            key = (d,)
            acc = terms.get(key, ZERO) + coef
            terms[key] = acc
        branches.append(MultiPoly(_BRANCH_CONTEXT, terms))
        return branches
    for slope in curve.slopes:
        terms = {}
        for exps, coef in p.terms.items():
            d = exps[zi] + exps[wi]
            c = coef
            for _ in range(exps[wi]):
                c = c * slope
            key = (d,)
            terms[key] = terms.get(key, ZERO) + c
        branches.append(MultiPoly(_BRANCH_CONTEXT, terms))
    return branches


# -- jet obstruction systems --------------------------------------------------


class JetSystem(Enum):
    """Which identity the unknown series must satisfy on the curve."""

    WEIGHTED_SUM = "weighted-sum"        # alpha z^{l+3} + beta w^{l+3} + gamma z^{l+2} w^{l+2} = 0
    INTERTWINER_AH_HB = "ah-hb"          # A H - H B = 0, H = [[a, b], [c, d]]
    COMMUTANT_AH_HA = "ah-ha"            # A H - H A = 0

    @staticmethod
    def parse(name: str) -> "JetSystem":
        for system in JetSystem:
            if name in (system.value, system.name, system.name.lower()):
                return system
        raise ValueError(f"unknown jet system {name!r}")


@dataclass(frozen=True)
class Functional:
    """A linear functional on the unknown jet coefficients."""

    name: str
    terms: tuple  # ((function name, exponent pair, coefficient), ...)


@dataclass(frozen=True)
class FunctionalVerdict:
    name: str
    forced_zero: bool
    witness: Optional[dict] = None  # function name -> TruncatedSeries


@dataclass(frozen=True)
class ObstructionReport:
    curve: CurveSpec
    ell: int
    truncation: int
    system: JetSystem
    unknown_functions: tuple
    kernel_dimension: int
    verdicts: tuple  # of FunctionalVerdict
    constant_term_span: tuple = ()  # spans the achievable constant-term tuples

    def verdict(self, name: str) -> FunctionalVerdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def all_forced(self) -> bool:
        return all(v.forced_zero for v in self.verdicts)


def default_truncation(ell: int, curve: CurveSpec) -> int:
    if isinstance(curve, MonomialCusp):
        return (ell + 2) * (curve.p + curve.q) + 2
    return 2 * ell + 8


def minimal_truncation(ell: int, curve: CurveSpec) -> int:
    if isinstance(curve, MonomialCusp):
        return (ell + 2) * (curve.p + curve.q)
    return 2 * ell + 6


def _system_multipliers(ell: int, system: JetSystem) -> tuple:
    """Unknown function names and, per scalar identity, the multiplier of each.

    For the matrix systems the multiplier of unknown u in identity entry
    (i, j) is the (i, j) entry of A E_u - E_u B (resp. A E_u - E_u A), E_u
    the matrix unit carrying u.
    """
    if ell < 0:
        raise HypothesisError("ell must be a natural number")
    hol_ctx = context("z", "w")
    z = MultiPoly.variable(hol_ctx, "z")
    w = MultiPoly.variable(hol_ctx, "w")
    zero = MultiPoly.zero(hol_ctx)
    one = MultiPoly.constant(hol_ctx, 1)
    if system is JetSystem.WEIGHTED_SUM:
        identity = {
            "alpha": z ** (ell + 3),
            "beta": w ** (ell + 3),
            "gamma": z ** (ell + 2) * w ** (ell + 2),
        }
        return ("alpha", "beta", "gamma"), [identity]

    # rebuild A (and B) over the conjugate-free context
    zw_mixed = z ** (2 + ell) * w ** (2 + ell)
    z_pow = z ** (3 + ell)
    w_pow = w ** (3 + ell)
    a = MatrixFamily([[zw_mixed, z_pow], [w_pow, zero]])
    if system is JetSystem.INTERTWINER_AH_HB:
        rhs = MatrixFamily([[zero, z_pow], [w_pow, zw_mixed]])
    else:
        rhs = a
    names = ("a", "b", "c", "d")
    units = {
        "a": MatrixFamily([[one, zero], [zero, zero]]),
        "b": MatrixFamily([[zero, one], [zero, zero]]),
        "c": MatrixFamily([[zero, zero], [one, zero]]),
        "d": MatrixFamily([[zero, zero], [zero, one]]),
    }
    identities = []
    for i in range(2):
        for j in range(2):
            identities.append({
                name: (a @ units[name] - units[name] @ rhs).entries[i][j]
                for name in names
            })
    return names, identities


def _default_functionals(system: JetSystem) -> list:
    origin = (0, 0)
    if system is JetSystem.WEIGHTED_SUM:
        return [Functional(f"{name}(0)", ((name, origin, ONE),))
                for name in ("alpha", "beta", "gamma")]
    if system is JetSystem.INTERTWINER_AH_HB:
        return [Functional(f"{name}(0)", ((name, origin, ONE),))
                for name in ("a", "b", "c", "d")]
    return [
        Functional("b(0)", (("b", origin, ONE),)),
        Functional("c(0)", (("c", origin, ONE),)),
        Functional("a(0)-d(0)", (("a", origin, ONE), ("d", origin, -ONE))),
    ]


def obstruction_kernel(ell: int, curve: CurveSpec, truncation: Optional[int] = None,
                       system: JetSystem = JetSystem.WEIGHTED_SUM) -> ObstructionReport:
    """Impose the system identity on the curve through the given jet order.

    Unknown functions are truncated series of total degree <= truncation;
    the identity is expanded on every branch and all coefficients of degree
    <= truncation are set to zero.  The report states, for each tested
    constant-term functional, whether it vanishes on the whole solution
    space, with an exact witness vector when it does not.
    """
    if ell < 0:
        raise HypothesisError("ell must be a natural number")
    n = default_truncation(ell, curve) if truncation is None else truncation
    n_min = minimal_truncation(ell, curve)
    if n < n_min:
        raise TruncationError(
            f"truncation {n} is below the minimum {n_min} for this curve: "
            "the compared coefficients would be missed")

    names, identities = _system_multipliers(ell, system)

    unknowns: list = []
    index: dict = {}
    for name in names:
        for total in range(n + 1):
            for j in range(total + 1):
                key = (name, (j, total - j))
                index[key] = len(unknowns)
                unknowns.append(key)

    # rows: keyed by (identity number, branch number, degree signature)
    rows: dict = {}

    def add_entry(row_key, column: int, coef: GaussianRational):
        row = rows.setdefault(row_key, {})
        row[column] = row.get(column, ZERO) + coef

    for ident_no, identity in enumerate(identities):
        for name in names:
            multiplier = identity[name]
            if multiplier.is_zero():
                continue
            if isinstance(curve, FullGerm):
                for exps, coef in multiplier.terms.items():
                    for (uname, (j, k)), col in index.items():
                        if uname != name:
                            continue
                        s1, s2 = exps[0] + j, exps[1] + k
                        if s1 + s2 <= n:
                            add_entry((ident_no, 0, (s1, s2)), col, coef)
            elif isinstance(curve, MonomialCusp):
                for exps, coef in multiplier.terms.items():
                    base = exps[0] * curve.q + exps[1] * curve.p
                    if base > n:
                        continue
                    for (uname, (j, k)), col in index.items():
                        if uname != name:
                            continue
                        d = base + j * curve.q + k * curve.p
                        if d <= n:
                            add_entry((ident_no, 0, d), col, coef)
            else:
                for branch_no, slope in enumerate(curve.slopes):
                    for exps, coef in multiplier.terms.items():
                        base = exps[0] + exps[1]
                        if base > n:
                            continue
                        c0 = coef
                        for _ in range(exps[1]):
                            c0 = c0 * slope
                        for (uname, (j, k)), col in index.items():
                            if uname != name:
                                continue
                            d = base + j + k
                            if d > n:
                                continue
                            c = c0
                            for _ in range(k):
                                c = c * slope
                            add_entry((ident_no, branch_no, d), col, c)

    active_cols = sorted({c for row in rows.values() for c in row})
    col_pos = {c: i for i, c in enumerate(active_cols)}
    matrix = []
    for key in sorted(rows):
        row = rows[key]
        dense = [ZERO] * len(active_cols)
        for c, v in row.items():
            dense[col_pos[c]] = v
        if any(not x.is_zero() for x in dense):
            matrix.append(dense)

    if matrix:
        reduced, pivots = rref(matrix)
    else:
        reduced, pivots = [], []
    rank = len(pivots)
    kernel_dim = len(unknowns) - rank
    pivot_of_col = {active_cols[c]: r for r, c in enumerate(pivots)}
    free_active = [active_cols[c] for c in range(len(active_cols))
                   if c not in set(pivots)]

    verdicts = []
    for functional in _default_functionals(system):
        lam = {}
        for fname, exps, coef in functional.terms:
            lam[index[(fname, exps)]] = lam.get(index[(fname, exps)], ZERO) + coef
        residual = dict(lam)
        # eliminate pivot coordinates: lam - sum lam[pivot] * row(pivot)
        for col, coef in list(lam.items()):
            r = pivot_of_col.get(col)
            if r is None or coef.is_zero():
                continue
            for c_active, v in enumerate(reduced[r]):
                if v.is_zero():
                    continue
                target = active_cols[c_active]
                s = residual.get(target, ZERO) - coef * v
                if s.is_zero():
                    residual.pop(target, None)
                else:
                    residual[target] = s
        residual = {c: v for c, v in residual.items() if not v.is_zero()}
        if not residual:
            verdicts.append(FunctionalVerdict(functional.name, True))
            continue
        # witness: kernel vector on which the functional evaluates to 1
        wit_col, wit_val = next(iter(residual.items()))
        vector = {wit_col: ONE}
        if wit_col in col_pos:
            c_active = col_pos[wit_col]
            for r, pc in enumerate(pivots):
                v = reduced[r][c_active]
                if not v.is_zero():
                    vector[active_cols[pc]] = -v
        scale = wit_val.inverse()
        vector = {c: v * scale for c, v in vector.items()}
        witness = _witness_series(names, unknowns, vector, n)
        verdicts.append(FunctionalVerdict(functional.name, False, witness))

    # span of the projection of the solution space onto the constant terms
    targets = [index[(name, (0, 0))] for name in names]
    candidates = set(t for t in targets if t not in pivot_of_col)
    for t in targets:
        r = pivot_of_col.get(t)
        if r is None:
            continue
        for c_active, v in enumerate(reduced[r]):
            col = active_cols[c_active]
            if col != t and not v.is_zero():
                candidates.add(col)
    span = []
    for j in sorted(candidates):
        proj = []
        for t in targets:
            if t == j:
                proj.append(ONE)
            elif t in pivot_of_col and j in col_pos:
                proj.append(-reduced[pivot_of_col[t]][col_pos[j]])
            else:
                proj.append(ZERO)
        if any(not x.is_zero() for x in proj):
            span.append(tuple(proj))

    return ObstructionReport(curve=curve, ell=ell, truncation=n, system=system,
                             unknown_functions=names, kernel_dimension=kernel_dim,
                             verdicts=tuple(verdicts), constant_term_span=tuple(span))


def _witness_series(names, unknowns, vector: dict, bound: int) -> dict:
    per_function: dict = {name: {} for name in names}
    for col, value in vector.items():
        name, exps = unknowns[col]
        per_function[name][exps] = value
    return {name: TruncatedSeries.from_dict(("z", "w"), bound, coeffs)
            for name, coeffs in per_function.items()}


def verify_witness(ell: int, curve: CurveSpec, truncation: int, system: JetSystem,
                   witness: dict) -> bool:
    """Check a witness solves the system identity through the truncation order."""
    names, identities = _system_multipliers(ell, system)
    hol_ctx = context("z", "w")
    polys = {}
    for name in names:
        series = witness.get(name)
        terms = dict(series.coefficients) if series is not None else {}
        polys[name] = MultiPoly(hol_ctx, terms)
    for identity in identities:
        total = MultiPoly.zero(hol_ctx)
        for name in names:
            total = total + identity[name] * polys[name]
        for branch in restrict_to_curve(total, curve):
            for exps, coef in branch.terms.items():
                if sum(exps) <= truncation and not coef.is_zero():
                    return False
    return True


@dataclass(frozen=True)
class CurveObstructionVerdict:
    obstructed: bool
    report: ObstructionReport

    @property
    def label(self) -> str:
        return "obstructed" if self.obstructed else "inconclusive at this truncation"


def constant_term_span_all_singular(report: ObstructionReport) -> bool:
    """True iff every 2x2 value compatible with the jet constraints is singular.

    The report's constant-term span over-approximates the set of values H(0)
    of actual solutions, so singularity of the whole span soundly rules out
    an invertible intertwiner at the origin.  Checked symbolically: the
    determinant of a generic combination of the spanning values must vanish
    identically.
    """
    if len(report.unknown_functions) != 4:
        raise ShapeError("singularity check applies to 2x2 matrix systems")
    span = report.constant_term_span
    if not span:
        return True
    ctx = context(*(f"x{i}" for i in range(len(span))))
    a = MultiPoly.zero(ctx)
    b = MultiPoly.zero(ctx)
    c = MultiPoly.zero(ctx)
    d = MultiPoly.zero(ctx)
    for i, proj in enumerate(span):
        x = MultiPoly.variable(ctx, f"x{i}")
        a = a + x * MultiPoly.constant(ctx, proj[0])
        b = b + x * MultiPoly.constant(ctx, proj[1])
        c = c + x * MultiPoly.constant(ctx, proj[2])
        d = d + x * MultiPoly.constant(ctx, proj[3])
    return (a * d - b * c).is_zero()


def curve_similarity_obstruction(ell: int, curve: CurveSpec,
                                 truncation: Optional[int] = None) -> CurveObstructionVerdict:
    """Decide local holomorphic similarity of the rigid pair on the curve.

    Hypotheses: a cusp needs ell + 2 < q < p with p, q coprime; a line union
    needs at least 2*ell + 5 distinct slopes.  The verdict is "obstructed"
    when the jet constraints force every compatible value of H(0) to be
    singular (in particular when all four entries are forced to zero), which
    rules out an invertible intertwiner at the origin.  Partial forcing that
    leaves an invertible value available is reported as inconclusive, never
    as a similarity claim.
    """
    if isinstance(curve, MonomialCusp):
        if curve.q <= ell + 2:
            raise HypothesisError(
                f"cusp hypothesis ell + 2 < q violated: q={curve.q}, ell={ell}")
    elif isinstance(curve, LineUnion):
        needed = 2 * ell + 5
        if len(curve.slopes) < needed:
            raise HypothesisError(
                f"line union needs at least {needed} slopes, got {len(curve.slopes)}")
    else:
        raise HypothesisError("similarity obstruction is stated for cusps and line unions")
    report = obstruction_kernel(ell, curve, truncation,
                                system=JetSystem.INTERTWINER_AH_HB)
    return CurveObstructionVerdict(constant_term_span_all_singular(report), report)
