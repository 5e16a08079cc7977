"""JSON encodings shared by the library and the CLI.

Rationals travel as decimal-free ``p/q`` strings; Gaussian rationals as
``{"re": "p/q", "im": "p/q"}`` inside polynomial terms, or as single
strings like ``"1/2-3i"`` where a scalar is expected.  A polynomial is a
list of terms ``{"re": ..., "im": ..., "exps": [e1, ...]}``; a matrix
family is ``{"variables": [...], "conjugates": {...}, "rows": n,
"cols": m, "entries": [[ [term, ...] ]]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra.localring import PointedRational
from .algebra.matrices import MatrixFamily
from .algebra.poly import MultiPoly, VariableContext, context
from .algebra.scalars import (
    GaussianRational,
    format_rational,
    format_scalar,
    parse_scalar,
)
from .algebra.series import TruncatedSeries
from .curves import CurveSpec, FullGerm, LineUnion, MonomialCusp
from .errors import ParseError
from .smith import LocalMatrix
from .topology import SampledLoop


def scalar_to_json(z: GaussianRational) -> dict:
    return {"re": format_rational(z.re), "im": format_rational(z.im)}


def scalar_from_json(data) -> GaussianRational:
    if isinstance(data, str):
        return parse_scalar(data)
    if isinstance(data, int):
        return GaussianRational(data)
    try:
        return GaussianRational(Fraction(data["re"]), Fraction(data["im"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"cannot parse scalar from {data!r}") from exc


def poly_to_terms(p: MultiPoly) -> list:
    out = []
    for exps in sorted(p.terms, key=lambda e: (sum(e), e)):
        coef = p.terms[exps]
        out.append({"re": format_rational(coef.re), "im": format_rational(coef.im),
                    "exps": list(exps)})
    return out


def poly_from_terms(ctx: VariableContext, terms: Sequence) -> MultiPoly:
    acc: dict = {}
    for term in terms:
        try:
            coef = GaussianRational(Fraction(term["re"]), Fraction(term.get("im", 0)))
            exps = tuple(int(e) for e in term["exps"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial term {term!r}") from exc
        if len(exps) != ctx.arity:
            raise ParseError(f"term {term!r} has arity {len(exps)}, expected {ctx.arity}")
        prev = acc.get(exps)
        acc[exps] = coef if prev is None else prev + coef
    return MultiPoly(ctx, acc)


def context_to_json(ctx: VariableContext) -> dict:
    return {"variables": list(ctx.names), "conjugates": dict(ctx.conjugates)}


def context_from_json(data: Mapping) -> VariableContext:
    try:
        names = tuple(data["variables"])
    except (KeyError, TypeError) as exc:
        raise ParseError("matrix document misses 'variables'") from exc
    conj = data.get("conjugates") or {}
    return context(*names, conjugates=dict(conj))


def matrix_to_json(m: MatrixFamily) -> dict:
    doc = context_to_json(m.ctx)
    doc.update({
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[poly_to_terms(e) for e in row] for row in m.entries],
    })
    return doc


def entries_from_json(ctx: VariableContext, data, rows=None, cols=None) -> MatrixFamily:
    if not isinstance(data, list) or not data:
        raise ParseError("matrix entries must be a nonempty list of rows")
    grid = []
    for row in data:
        if not isinstance(row, list):
            raise ParseError("matrix rows must be lists")
        grid.append([poly_from_terms(ctx, cell) for cell in row])
    m = MatrixFamily(grid)
    if rows is not None and m.rows != rows:
        raise ParseError(f"declared rows {rows} != actual {m.rows}")
    if cols is not None and m.cols != cols:
        raise ParseError(f"declared cols {cols} != actual {m.cols}")
    return m


def matrix_from_json(data: Mapping) -> MatrixFamily:
    ctx = context_from_json(data)
    return entries_from_json(ctx, data.get("entries"),
                             data.get("rows"), data.get("cols"))


def load_matrix(path: str) -> MatrixFamily:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read matrix file {path}: {exc}") from exc
    return matrix_from_json(doc)


# -- curves ---------------------------------------------------------------------


def curve_to_json(curve: CurveSpec) -> dict:
    if isinstance(curve, FullGerm):
        return {"kind": "full"}
    if isinstance(curve, MonomialCusp):
        return {"kind": "cusp", "p": curve.p, "q": curve.q}
    return {"kind": "lines", "slopes": [format_scalar(s) for s in curve.slopes]}


def curve_from_json(data: Mapping) -> CurveSpec:
    kind = data.get("kind")
    if kind == "full":
        return FullGerm()
    if kind == "cusp":
        return MonomialCusp(int(data["p"]), int(data["q"]))
    if kind == "lines":
        return LineUnion(tuple(parse_scalar(s) for s in data["slopes"]))
    raise ParseError(f"unknown curve kind {kind!r}")


def parse_curve_arg(text: str) -> CurveSpec:
    """CLI syntax: ``full``, ``cusp:P,Q`` or ``lines:s1,s2,...``."""
    text = text.strip()
    if text == "full":
        return FullGerm()
    if text.startswith("cusp:"):
        parts = text[len("cusp:"):].split(",")
        if len(parts) != 2:
            raise ParseError("cusp curve syntax is cusp:P,Q")
        return MonomialCusp(int(parts[0]), int(parts[1]))
    if text.startswith("lines:"):
        slopes = tuple(parse_scalar(s) for s in text[len("lines:"):].split(","))
        return LineUnion(slopes)
    raise ParseError(f"cannot parse curve {text!r}")


# -- points ----------------------------------------------------------------------


def parse_point_arg(text: str) -> tuple:
    return tuple(parse_scalar(part) for part in text.split(","))


def point_to_json(point: Sequence) -> list:
    return [format_scalar(x) for x in point]


def point_from_json(data: Sequence) -> tuple:
    return tuple(parse_scalar(x) if isinstance(x, str) else GaussianRational(x)
                 for x in data)


# -- germs (PointedRational grids) -----------------------------------------------


def coeffs_to_json(coeffs: Sequence) -> list:
    return [format_scalar(c) for c in coeffs]


def coeffs_from_json(data: Sequence) -> list:
    return [parse_scalar(c) if isinstance(c, str) else GaussianRational(c)
            for c in data]


def pointed_to_json(f: PointedRational) -> dict:
    return {"num": coeffs_to_json(f.num), "den": coeffs_to_json(f.den)}


def local_matrix_to_json(h: LocalMatrix) -> dict:
    ctx = h.entries[0][0].ctx
    return {
        "variable": ctx.names[0],
        "point": format_scalar(h.point),
        "rows": len(h.entries),
        "cols": len(h.entries[0]),
        "entries": [[pointed_to_json(e) for e in row] for row in h.entries],
    }


def local_matrix_from_json(data: Mapping) -> LocalMatrix:
    try:
        ctx = context(data["variable"])
        point = parse_scalar(data["point"])
        rows = data["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad germ matrix document: {exc}") from exc
    grid = []
    for row in rows:
        out = []
        for cell in row:
            num = coeffs_from_json(cell["num"])
            den = coeffs_from_json(cell.get("den", ["1"]))
            out.append(PointedRational(ctx, num, den, point))
        grid.append(tuple(out))
    return LocalMatrix(point, tuple(grid))


# -- series / obstruction reports -------------------------------------------------


def series_to_json(s: TruncatedSeries) -> dict:
    return {
        "variables": list(s.variables),
        "bound": s.bound,
        "coefficients": [
            {"exps": list(exps), "value": format_scalar(coef)}
            for exps, coef in s.coefficients
        ],
    }


def obstruction_report_to_json(report) -> dict:
    from .curves import ObstructionReport
    assert isinstance(report, ObstructionReport)
    return {
        "curve": curve_to_json(report.curve),
        "ell": report.ell,
        "truncation": report.truncation,
        "system": report.system.value,
        "unknown_functions": list(report.unknown_functions),
        "kernel_dimension": report.kernel_dimension,
        "verdicts": [
            {
                "functional": v.name,
                "forced_zero": v.forced_zero,
                "witness": ({name: series_to_json(s) for name, s in v.witness.items()}
                            if v.witness else None),
            }
            for v in report.verdicts
        ],
        "constant_term_span": [[format_scalar(x) for x in proj]
                               for proj in report.constant_term_span],
    }


# -- loops -------------------------------------------------------------------------


def loop_from_json(data) -> SampledLoop:
    try:
        return SampledLoop(tuple(complex(float(re), float(im)) for re, im in data))
    except (TypeError, ValueError) as exc:
        raise ParseError("loop JSON must be an array of [re, im] pairs") from exc


def load_loop(path: str) -> SampledLoop:
    try:
        with open(path, encoding="utf-8") as fh:
            return loop_from_json(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read loop file {path}: {exc}") from exc


# -- coverings / cocycle documents -------------------------------------------------


def covering_from_json(data: Mapping):
    from .cocycle import Covering
    charts = data.get("charts")
    if not isinstance(charts, Mapping) or not charts:
        raise ParseError("cocycle document needs a nonempty 'charts' mapping")
    chart_map = {name: [point_from_json(p) for p in pts]
                 for name, pts in charts.items()}
    overlaps = {}
    for item in data.get("overlaps", []):
        try:
            i, j = item["pair"]
            samples = [point_from_json(p) for p in item.get("samples", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad overlap item {item!r}") from exc
        overlaps[(i, j)] = samples
    return Covering.build(chart_map, overlaps)


def cocycle_document_from_json(data: Mapping) -> dict:
    """Parse the flexible cocycle file: covering, cocycles, splitting, families."""
    from .cocycle import MatrixCocycle, Splitting
    ctx = context_from_json(data)
    covering = covering_from_json(data)
    out = {"context": ctx, "covering": covering}

    def parse_pairs(items):
        entries = {}
        for item in items:
            try:
                i, j = item["pair"]
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"bad cocycle entry {item!r}") from exc
            entries[(i, j)] = entries_from_json(ctx, item["matrix"])
        return entries

    if "entries" in data:
        out["cocycle"] = MatrixCocycle.build(covering, parse_pairs(data["entries"]))
    if "g_entries" in data:
        out["g"] = MatrixCocycle.build(covering, parse_pairs(data["g_entries"]))
    if "splitting" in data:
        maps = {name: entries_from_json(ctx, grid)
                for name, grid in data["splitting"].items()}
        out["splitting"] = Splitting.build(covering, maps)
    if "locals" in data:
        out["locals"] = {name: entries_from_json(ctx, grid)
                         for name, grid in data["locals"].items()}
    for key in ("a", "b"):
        if key in data:
            out[key] = entries_from_json(ctx, data[key])
    return out


def load_cocycle_document(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read cocycle file {path}: {exc}") from exc
    return cocycle_document_from_json(doc)
