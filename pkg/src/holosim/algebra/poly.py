"""Sparse multivariate polynomials over the Gaussian rationals.

A :class:`VariableContext` fixes an ordered tuple of variable names and may
declare some of them to be formal conjugates of others (``zb`` standing for
the complex conjugate of ``z``).  Identities between real-analytic
expressions are then checked as polynomial identities in the doubled
variable set, and evaluation binds each conjugate variable to the exact
conjugate of its partner's value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..errors import ArityMismatchError, ShapeError
from . import unipoly
from .scalars import GaussianRational, ONE, ZERO

Exponents = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names plus the conjugate-pair declarations."""

    names: tuple
    conjugates: tuple = ()  # ordered pairs (conjugate_name, base_name)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ShapeError(f"duplicate variable names in {self.names}")
        conj = dict(self.conjugates)
        for cvar, base in conj.items():
            if cvar not in self.names or base not in self.names:
                raise ShapeError(f"conjugate pair ({cvar}, {base}) not in variables")
            if cvar == base or base in conj:
                raise ShapeError(f"invalid conjugate pair ({cvar}, {base})")
        if len(set(conj.values())) != len(conj):
            raise ShapeError("a base variable has two declared conjugates")

    @property
    def arity(self) -> int:
        return len(self.names)

    @property
    def conjugate_map(self) -> dict:
        return dict(self.conjugates)

    @property
    def base_names(self) -> tuple:
        conj = self.conjugate_map
        return tuple(n for n in self.names if n not in conj)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def bind_point(self, point: Sequence) -> tuple:
        """Expand base-variable values to a full coordinate vector.

        ``point`` lists one value per base variable, in declaration order;
        conjugate variables receive the exact conjugates of their partners.
        """
        base = self.base_names
        values = [GaussianRational.from_value(v) if not isinstance(v, GaussianRational) else v
                  for v in point]
        if len(values) != len(base):
            raise ArityMismatchError(
                f"expected {len(base)} coordinates for variables {base}, got {len(values)}")
        lookup = dict(zip(base, values))
        conj = self.conjugate_map
        full = []
        for name in self.names:
            if name in conj:
                full.append(lookup[conj[name]].conjugate())
            else:
                full.append(lookup[name])
        return tuple(full)

    def bind_complex_point(self, point: Sequence) -> tuple:
        """Float analogue of :meth:`bind_point` for numeric scans."""
        base = self.base_names
        if len(point) != len(base):
            raise ArityMismatchError(
                f"expected {len(base)} coordinates for variables {base}, got {len(point)}")
        lookup = {n: complex(v) for n, v in zip(base, point)}
        conj = self.conjugate_map
        return tuple(lookup[conj[n]].conjugate() if n in conj else lookup[n]
                     for n in self.names)


def context(*names: str, conjugates: Mapping[str, str] | None = None) -> VariableContext:
    return VariableContext(tuple(names), tuple((conjugates or {}).items()))


class MultiPoly:
    """Finite map from exponent vectors to nonzero Gaussian-rational coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VariableContext, terms: Mapping[Exponents, GaussianRational]):
        clean = {}
        arity = ctx.arity
        for exps, coef in terms.items():
            if len(exps) != arity:
                raise ArityMismatchError(f"exponent vector {exps} has wrong arity")
            if not coef.is_zero():
                clean[tuple(exps)] = coef
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(ctx: VariableContext) -> "MultiPoly":
        return MultiPoly(ctx, {})

    @staticmethod
    def constant(ctx: VariableContext, value) -> "MultiPoly":
        value = GaussianRational.from_value(value)
        return MultiPoly(ctx, {(0,) * ctx.arity: value})

    @staticmethod
    def variable(ctx: VariableContext, name: str) -> "MultiPoly":
        exps = [0] * ctx.arity
        exps[ctx.index(name)] = 1
        return MultiPoly(ctx, {tuple(exps): ONE})

    @staticmethod
    def monomial(ctx: VariableContext, exps: Sequence[int], coef=1) -> "MultiPoly":
        return MultiPoly(ctx, {tuple(exps): GaussianRational.from_value(coef)})

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> GaussianRational:
        return self.terms.get((0,) * self.ctx.arity, ZERO)

    def total_degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def uses_conjugates(self) -> bool:
        conj = self.ctx.conjugate_map
        if not conj:
            return False
        idx = [self.ctx.index(n) for n in conj]
        return any(any(exps[i] for i in idx) for exps in self.terms)

    # -- ring operations ---------------------------------------------------

    def _check_ctx(self, other: "MultiPoly"):
        if self.ctx != other.ctx:
            raise ShapeError("polynomials live in different variable contexts")

    def __add__(self, other):
        other = self._coerce(other)
        self._check_ctx(other)
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            s = out.get(exps, ZERO) + coef
            if s.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = s
        return MultiPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        self._check_ctx(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(self.ctx, other)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, point: Sequence) -> GaussianRational:
        """Exact value at a point given by base-variable coordinates."""
        full = self.ctx.bind_point(point)
        acc = ZERO
        for exps, coef in self.terms.items():
            term = coef
            for value, e in zip(full, exps):
                for _ in range(e):
                    term = term * value
            acc = acc + term
        return acc

    def evaluate_complex(self, point: Sequence) -> complex:
        full = self.ctx.bind_complex_point(point)
        acc = 0j
        for exps, coef in self.terms.items():
            term = complex(coef)
            for value, e in zip(full, exps):
                if e:
                    term *= value ** e
            acc += term
        return acc

    def substitute(self, assignment: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials (all sharing one target context) for variables."""
        targets = list(assignment.values())
        if not targets:
            raise ShapeError("empty substitution")
        target_ctx = targets[0].ctx
        for p in targets:
            if p.ctx != target_ctx:
                raise ShapeError("substitution images live in different contexts")
        missing = [n for n in self.ctx.names if n not in assignment]
        if missing:
            raise ShapeError(f"substitution misses variables {missing}")
        images = [assignment[n] for n in self.ctx.names]
        acc = MultiPoly.zero(target_ctx)
        for exps, coef in self.terms.items():
            term = MultiPoly.constant(target_ctx, coef)
            for img, e in zip(images, exps):
                if e:
                    term = term * img ** e
            acc = acc + term
        return acc

    # -- univariate bridge ----------------------------------------------

    def univariate_coeffs(self) -> list:
        """Coefficient list in the single base variable of the context."""
        if len(self.ctx.names) != 1:
            raise ShapeError("polynomial is not univariate")
        coeffs = [ZERO] * (max((e[0] for e in self.terms), default=-1) + 1)
        for exps, coef in self.terms.items():
            coeffs[exps[0]] = coef
        return unipoly.trim(coeffs)

    @staticmethod
    def from_univariate(ctx: VariableContext, coeffs: Iterable) -> "MultiPoly":
        if len(ctx.names) != 1:
            raise ShapeError("context is not univariate")
        return MultiPoly(ctx, {(k,): c for k, c in enumerate(coeffs)})

    # -- display -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            coef = self.terms[exps]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in zip(self.ctx.names, exps) if e)
            if not mono:
                parts.append(str(coef))
            elif coef == ONE:
                parts.append(mono)
            else:
                parts.append(f"({coef})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


def evaluate(p: MultiPoly, point: Sequence) -> GaussianRational:
    """Exact evaluation with conjugate variables bound by conjugation."""
    return p.evaluate(point)


def poly_from_string_terms(ctx: VariableContext, terms: Iterable[tuple]) -> MultiPoly:
    """Build from (coef, exps) pairs; mainly a test/CLI convenience."""
    acc: dict = {}
    for coef, exps in terms:
        coef = GaussianRational.from_value(coef) if not isinstance(coef, GaussianRational) else coef
        exps = tuple(exps)
        acc[exps] = acc.get(exps, ZERO) + coef
    return MultiPoly(ctx, acc)
