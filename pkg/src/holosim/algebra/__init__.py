"""Exact scalar, polynomial, local-ring, series and linear-algebra substrate."""

from .linalg import exact_kernel
from .localring import PointedRational, vanishing_order, INFINITE_ORDER
from .matrices import MatrixFamily, generic_rank
from .poly import MultiPoly, VariableContext, context, evaluate
from .scalars import GaussianRational, format_rational, format_scalar, parse_scalar
from .series import TruncatedSeries
from .sturm import certify_nonvanishing_on_segment

__all__ = [
    "GaussianRational",
    "INFINITE_ORDER",
    "MatrixFamily",
    "MultiPoly",
    "PointedRational",
    "TruncatedSeries",
    "VariableContext",
    "certify_nonvanishing_on_segment",
    "context",
    "evaluate",
    "exact_kernel",
    "format_rational",
    "format_scalar",
    "generic_rank",
    "parse_scalar",
    "vanishing_order",
]
