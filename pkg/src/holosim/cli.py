"""Batch front-end: load matrix families and curve/covering specs from files,
run the analyses, and emit text or JSON reports.

Exit status contract: 0 for affirmative verdicts, 2 for certified negative
verdicts (obstructed similarity, refused kernel extension, nonzero
obstruction integer, failed cocycle verification), 1 for errors of any kind
(bad input, violated preconditions, unsatisfied criteria).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import curves as curves_mod
from . import serialization as ser
from .algebra.matrices import MatrixFamily
from .algebra.poly import MultiPoly
from .algebra.scalars import format_scalar
from .cocycle import (
    assemble_global_similarity,
    verify_cocycle,
    verify_commutant_valued,
    verify_equivalence,
)
from .curves import (
    JetSystem,
    curve_similarity_obstruction,
    local_pair,
    obstruction_kernel,
)
from .errors import HolosimError, ParseError
from .smith import (
    determinantal_orders,
    kernel_extension_through,
    local_smith_form,
    smith_similarity,
    wasow_similarity,
)
from .sylvester import build_intertwiner, intertwiner_dimension_at, jump_locus, wasow_criterion
from .topology import sphere_example, splitting_obstruction, winding_number

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OBSTRUCTED = 2


def _emit(report: dict, exit_code: int, fmt: str) -> int:
    report = dict(report)
    report["exit_code"] = exit_code
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        _render_text(report)
    return exit_code


def _render_text(report: dict, indent: str = ""):
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _render_text(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for pos, item in enumerate(value):
                if pos:
                    print(f"{indent}  -")
                _render_text(item, indent + "  ")
        else:
            print(f"{indent}{key}: {value}")


# -- subcommands -----------------------------------------------------------------


def cmd_intertwine(args) -> int:
    a = ser.load_matrix(args.matrix)
    b = ser.load_matrix(args.b) if args.b else a
    op = build_intertwiner(a, b)
    locus = jump_locus(op)
    report = {
        "command": "intertwine",
        "size": op.n,
        "basis": op.basis,
        "generic_kernel_dimension": locus.generic_kernel_dim,
        "generic_rank": locus.generic_rank,
        "jump_locus_empty": locus.is_empty(),
    }
    if locus.locus_polynomial is not None:
        report["jump_locus_polynomial"] = str(locus.locus_polynomial)
    else:
        report["jump_locus_minors"] = len(locus.minors)
    if args.at is not None:
        point = ser.parse_point_arg(args.at)
        dim = intertwiner_dimension_at(op, point)
        report["point"] = args.at
        report["kernel_dimension_at_point"] = dim
        report["locally_constant_at_point"] = wasow_criterion(op, point)
    return _emit(report, EXIT_OK, args.format)


def cmd_smith(args) -> int:
    m = ser.load_matrix(args.matrix)
    point = ser.parse_point_arg(args.at)
    if len(point) != 1:
        raise ParseError("smith expects a single base-point coordinate")
    xi = point[0]

    if args.b or args.phi:
        if not (args.b and args.phi):
            raise ParseError("similarity mode needs both --b and --phi")
        b = ser.load_matrix(args.b)
        phi = ser.load_matrix(args.phi)
        if not all(e.is_constant() for row in phi.entries for e in row):
            raise ParseError("--phi must be a constant matrix")
        grid = phi.evaluate([ser.parse_scalar("0")] * len(phi.ctx.base_names))
        h = smith_similarity(m, b, xi, grid)
        if h is None:
            report = {
                "command": "smith",
                "verdict": "no intertwiner through Phi",
                "detail": ("the kernel-extension test refuses the value, so no "
                           "continuous intertwiner through Phi exists either"),
            }
            return _emit(report, EXIT_OBSTRUCTED, args.format)
        report = {
            "command": "smith",
            "verdict": "similar",
            "H": ser.local_matrix_to_json(h),
            "identity_checked": "A H = H B exactly, H(point) = Phi",
        }
        return _emit(report, EXIT_OK, args.format)

    form = local_smith_form(m, xi)
    report = {
        "command": "smith",
        "point": format_scalar(form.point),
        "rank": form.rank,
        "exponents": list(form.exponents),
        "determinantal_orders": determinantal_orders(m, xi),
        "reconstruction_verified": form.verify_reconstruction(m),
    }
    if args.full:
        report["E"] = [[ser.pointed_to_json(e) for e in row] for row in form.e]
        report["F"] = [[ser.pointed_to_json(e) for e in row] for row in form.f]
    if args.extend is not None:
        value = ser.parse_point_arg(args.extend)
        section = kernel_extension_through(m, xi, list(value))
        if section is None:
            report["extension"] = "refused: no kernel section through the value"
            return _emit(report, EXIT_OBSTRUCTED, args.format)
        report["extension"] = [ser.pointed_to_json(c) for c in section]
    return _emit(report, EXIT_OK, args.format)


def cmd_wasow(args) -> int:
    a = ser.load_matrix(args.a)
    b = ser.load_matrix(args.b)
    point = ser.parse_point_arg(args.at)
    op = build_intertwiner(a, b)
    holds = wasow_criterion(op, point)
    report = {
        "command": "wasow",
        "criterion_holds": holds,
        "kernel_dimension_at_point": intertwiner_dimension_at(op, point),
        "generic_kernel_dimension": op.matrix.cols - op.matrix.generic_rank(),
    }
    if args.phi is None:
        return _emit(report, EXIT_OK if holds else EXIT_OBSTRUCTED, args.format)
    phi = ser.load_matrix(args.phi)
    grid = phi.evaluate([ser.parse_scalar("0")] * len(phi.ctx.base_names))
    if len(point) != 1:
        raise ParseError("the similarity constructor expects one coordinate")
    h = wasow_similarity(a, b, point[0], grid)
    report["verdict"] = "similar"
    report["H"] = ser.local_matrix_to_json(h)
    report["identity_checked"] = "A H = H B exactly, H(point) = Phi"
    return _emit(report, EXIT_OK, args.format)


def _verdict_table(report) -> list:
    rows = []
    for v in report.verdicts:
        entry = {"functional": v.name,
                 "verdict": "forced-zero" if v.forced_zero else "not forced"}
        if v.witness is not None:
            entry["witness"] = {name: str(s) for name, s in v.witness.items()
                                if not s.is_zero()}
        rows.append(entry)
    return rows


def cmd_obstruct(args) -> int:
    curve = ser.parse_curve_arg(args.curve)
    if args.system is None:
        verdict = curve_similarity_obstruction(args.ell, curve, args.n)
        report = {
            "command": "obstruct",
            "curve": ser.curve_to_json(verdict.report.curve),
            "ell": args.ell,
            "truncation": verdict.report.truncation,
            "system": verdict.report.system.value,
            "verdict": verdict.label,
            "kernel_dimension": verdict.report.kernel_dimension,
            "functionals": _verdict_table(verdict.report),
        }
        return _emit(report, EXIT_OBSTRUCTED if verdict.obstructed else EXIT_OK,
                     args.format)
    system = JetSystem.parse(args.system)
    rep = obstruction_kernel(args.ell, curve, args.n, system)
    report = {
        "command": "obstruct",
        "curve": ser.curve_to_json(rep.curve),
        "ell": args.ell,
        "truncation": rep.truncation,
        "system": rep.system.value,
        "all_forced": rep.all_forced(),
        "kernel_dimension": rep.kernel_dimension,
        "functionals": _verdict_table(rep),
    }
    return _emit(report, EXIT_OBSTRUCTED if rep.all_forced() else EXIT_OK,
                 args.format)


def cmd_counterexample(args) -> int:
    ell = args.ell
    pair = local_pair(ell)
    q, p = ell + 3, ell + 4
    slopes = tuple(range(1, 2 * ell + 6))
    cusp = curves_mod.MonomialCusp(p, q)
    lines = curves_mod.LineUnion(slopes)
    sections = []
    for curve in (curves_mod.FullGerm(), cusp, lines):
        entry = {"curve": ser.curve_to_json(curve)}
        for system in JetSystem:
            rep = obstruction_kernel(ell, curve, args.n, system)
            entry[system.value] = {
                "all_forced": rep.all_forced(),
                "functionals": _verdict_table(rep),
            }
        if not isinstance(curve, curves_mod.FullGerm):
            verdict = curve_similarity_obstruction(ell, curve, args.n)
            entry["similarity"] = verdict.label
        sections.append(entry)
    obstructed = all(s.get("similarity") == "obstructed"
                     for s in sections if "similarity" in s)
    report = {
        "command": "counterexample",
        "ell": ell,
        "pair": {
            "A": ser.matrix_to_json(pair.a),
            "B": ser.matrix_to_json(pair.b),
            "identities": "A S = S B and the weighted-sum identity verified "
                          "after clearing |z|^2 + |w|^2",
        },
        "curves": sections,
        "verdict": "obstructed" if obstructed else "inconclusive",
    }
    return _emit(report, EXIT_OBSTRUCTED if obstructed else EXIT_OK, args.format)


def cmd_cocycle(args) -> int:
    doc = ser.load_cocycle_document(args.file)
    report = {"command": "cocycle"}
    negative = False
    if "cocycle" in doc:
        ok = verify_cocycle(doc["cocycle"])
        report["cocycle_law"] = ok
        negative = negative or not ok
        if "a" in doc:
            ok = verify_commutant_valued(doc["cocycle"], doc["a"])
            report["commutant_valued"] = ok
            negative = negative or not ok
        if "g" in doc and "splitting" in doc:
            ok = verify_equivalence(doc["cocycle"], doc["g"], doc["splitting"])
            report["equivalent"] = ok
            negative = negative or not ok
    if "locals" in doc and "splitting" in doc and "a" in doc and "b" in doc:
        result = assemble_global_similarity(doc["a"], doc["b"], doc["locals"],
                                            doc["splitting"])
        report["assembled"] = {
            name: {
                "num": [[ser.poly_to_terms(e) for e in row]
                        for row in chart_map.num.entries],
                "den": ser.poly_to_terms(chart_map.den),
            }
            for name, chart_map in result.charts
        }
        report["assembly"] = "consistent global similarity"
    return _emit(report, EXIT_OBSTRUCTED if negative else EXIT_OK, args.format)


def cmd_sphere(args) -> int:
    if args.loop:
        loop = ser.load_loop(args.loop)
        index = winding_number(loop)
        report = {"command": "sphere", "loop": args.loop, "winding_number": index}
        return _emit(report, EXIT_OBSTRUCTED if index else EXIT_OK, args.format)
    eps = Fraction(args.epsilon)
    grid = tuple(int(x) for x in args.band.split(","))
    example = sphere_example(eps, args.ell, band_grid=grid)
    report = {
        "command": "sphere",
        "epsilon": str(eps),
        "ell": args.ell,
        "band_samples": len(example.band_samples),
        "cap_samples": len(example.cap_samples),
        "bounds": {
            "band_identity_ok": example.bounds.band_identity_ok,
            "cap_det_one_ok": example.bounds.cap_det_one_ok,
            "re_det_half_ok": example.bounds.re_det_stated_ok,
            "re_det_third_ok": example.bounds.re_det_provable_ok,
            "min_re_det": (format(float(example.bounds.min_re_det), ".6f")
                           if example.bounds.min_re_det is not None else None),
            "half_bound_violations": len(example.bounds.stated_violations),
        },
    }
    if args.obstruction:
        g = _parse_obstruction_scalar(args.obstruction, example)
        index = splitting_obstruction(example, g, args.samples)
        report["obstruction_scalar"] = args.obstruction
        report["obstruction_integer"] = index
        return _emit(report, EXIT_OBSTRUCTED if index else EXIT_OK, args.format)
    return _emit(report, EXIT_OK, args.format)


def _parse_obstruction_scalar(name: str, example) -> MultiPoly:
    if name == "h":
        return example.h
    if name in ("hstar", "h*"):
        return example.h_star
    if name == "1":
        return MultiPoly.constant(example.h.ctx, 1)
    try:
        with open(name, encoding="utf-8") as fh:
            doc = json.load(fh)
        ctx = ser.context_from_json(doc)
        return ser.poly_from_terms(ctx, doc["terms"])
    except OSError as exc:
        raise ParseError(
            f"obstruction scalar must be h, hstar, 1 or a polynomial file: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holosim",
        description="Exact local/global holomorphic-similarity analyses "
                    "for polynomial matrix families.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("intertwine", help="intertwiner matrix, kernel dims, jump locus")
    p.add_argument("matrix", help="matrix family JSON (A)")
    p.add_argument("b", nargs="?", help="optional second family (B, default A)")
    p.add_argument("--at", help="point, comma-separated scalars")
    p.set_defaults(func=cmd_intertwine)

    p = sub.add_parser("smith", help="local Smith form / Smith-criterion similarity")
    p.add_argument("matrix", help="matrix family JSON (M, or A in similarity mode)")
    p.add_argument("--at", required=True, help="base point")
    p.add_argument("--b", help="second family for similarity mode")
    p.add_argument("--phi", help="constant matrix JSON with the prescribed value")
    p.add_argument("--extend", help="kernel value to extend, comma-separated scalars")
    p.add_argument("--full", action="store_true", help="include E and F factors")
    p.set_defaults(func=cmd_smith)

    p = sub.add_parser("wasow", help="dimension criterion / Wasow similarity")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--at", required=True)
    p.add_argument("--phi", help="constant matrix JSON with the prescribed value")
    p.set_defaults(func=cmd_wasow)

    p = sub.add_parser("obstruct", help="truncated-jet similarity obstruction on a curve")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--curve", required=True, help="full | cusp:P,Q | lines:s1,s2,...")
    p.add_argument("--N", dest="n", type=int, default=None, help="jet truncation")
    p.add_argument("--system", choices=[s.value for s in JetSystem],
                   help="raw jet system instead of the similarity verdict")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("counterexample", help="full rigid-pair suite for one ell")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--N", dest="n", type=int, default=None)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("cocycle", help="verify/assemble covering cocycle data")
    p.add_argument("file", help="cocycle document JSON")
    p.set_defaults(func=cmd_cocycle)

    p = sub.add_parser("sphere", help="sphere example bounds and winding obstruction")
    p.add_argument("--epsilon", default="1/10")
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--band", default="64,64", help="band grid ROWSxANGLES as R,A")
    p.add_argument("--obstruction", help="h | hstar | 1 | polynomial JSON file")
    p.add_argument("--samples", type=int, default=256, help="equator samples")
    p.add_argument("--loop", help="winding number of a sampled loop JSON file")
    p.set_defaults(func=cmd_sphere)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HolosimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
