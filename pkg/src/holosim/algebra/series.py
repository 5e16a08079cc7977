"""Total-degree truncated power series with exact coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..errors import ArityMismatchError
from .scalars import GaussianRational, ZERO


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of total degree <= bound; a jet of a power series."""

    variables: tuple
    bound: int
    coefficients: tuple  # sorted tuple of (exponent tuple, GaussianRational)

    @staticmethod
    def from_dict(variables: tuple, bound: int,
                  coefficients: Mapping[tuple, GaussianRational]) -> "TruncatedSeries":
        arity = len(variables)
        items = []
        for exps, coef in coefficients.items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise ArityMismatchError(f"exponent vector {exps} has wrong arity")
            if sum(exps) > bound:
                raise ArityMismatchError(
                    f"exponent vector {exps} exceeds the truncation bound {bound}")
            if not coef.is_zero():
                items.append((exps, coef))
        items.sort(key=lambda item: (sum(item[0]), item[0]))
        return TruncatedSeries(tuple(variables), bound, tuple(items))

    def coefficient(self, exps: tuple) -> GaussianRational:
        for e, c in self.coefficients:
            if e == tuple(exps):
                return c
        return ZERO

    def constant_term(self) -> GaussianRational:
        return self.coefficient((0,) * len(self.variables))

    def is_zero(self) -> bool:
        return not self.coefficients

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for exps, coef in self.coefficients:
            mono = "*".join(n if e == 1 else f"{n}^{e}"
                            for n, e in zip(self.variables, exps) if e)
            parts.append(f"({coef})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
