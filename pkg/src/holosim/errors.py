"""Exception types shared across the library.

Negative *verdicts* (no kernel extension, obstructed similarity, nonzero
splitting obstruction) are regular return values, never exceptions.  The
classes below signal violated preconditions, unusable inputs, or failed
certifications.
"""

from __future__ import annotations


class HolosimError(ValueError):
    """Base class for all library errors."""


class ArityMismatchError(HolosimError):
    """A point or exponent vector does not match the variable context."""


class ShapeError(HolosimError):
    """Matrix shapes or variable contexts are incompatible."""


class PreconditionError(HolosimError):
    """A stated hypothesis of an operation fails (e.g. Phi*B(xi) != A(xi)*Phi)."""


class CriterionError(HolosimError):
    """The local-constancy criterion does not hold at the base point.

    Distinct from :class:`PreconditionError`: the input is well formed but
    the dimension of the intertwiner space jumps at the point.
    """


class TruncationError(HolosimError):
    """The requested jet truncation is below the order the argument compares."""


class HypothesisError(HolosimError):
    """A curve/obstruction hypothesis fails (exponent range, slope count, ...)."""


class CertificationError(HolosimError):
    """An exact nonvanishing/contraction certificate could not be produced."""


class LoopError(HolosimError):
    """A sampled loop violates the nonzero-sample or density requirements."""


class CoveringError(HolosimError):
    """Inconsistent covering data (asymmetric overlaps, unknown charts, ...)."""


class CocycleAssemblyError(HolosimError):
    """A gluing precondition fails; carries the offending chart or pair."""

    def __init__(self, message: str, chart: str | None = None,
                 pair: tuple[str, str] | None = None):
        super().__init__(message)
        self.chart = chart
        self.pair = pair


class SphereBoundError(HolosimError):
    """A sample violates one of the sphere-example bounds."""


class ParseError(HolosimError):
    """Malformed JSON document or CLI argument."""
