"""Command-line interface.

Subcommands: mask, analyze, refine, basis, serve. The CLI calls the same
operations layer as the HTTP service, so both surfaces give identical
results for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import ops
from .analysis import DEFAULT_MAX_L, DEFAULT_MAX_N, support_width
from .errors import SceneError, SubdivisionError
from .exporters import curve_svg, function_svg, mesh_obj, polygon_layer
from .masks import FAMILY_NAMES, build_mask, specialize
from .refine import basic_limit_function
from .scene import parse_scene


def _add_scheme_arguments(parser: argparse.ArgumentParser, with_params: bool = True):
    parser.add_argument("family", choices=sorted(FAMILY_NAMES), help="scheme family")
    parser.add_argument("N", type=int, help="family index (complexity grows with N)")
    if with_params:
        parser.add_argument("--alpha", help="vertex tension, e.g. 1/8 or 0.125")
        parser.add_argument("--beta", help="edge tension, e.g. -1/16")


def _cmd_mask(args) -> int:
    family = FAMILY_NAMES[args.family]
    if args.alpha is None and args.beta is None:
        info = ops.mask_info(family, args.N)
    else:
        info = ops.mask_info(family, args.N, args.alpha or "0", args.beta or "0")
    if args.json:
        print(json.dumps(info, indent=2))
        return 0
    print(f"family: {info['family']} ({2 * args.N + _family_points(args.family)}-point), N={args.N}")
    print(f"offsets: {info['offsets'][0]}..{info['offsets'][-1]}")
    print(info["symbolic_compact"])
    if "fractions" in info:
        print("[" + ", ".join(info["fractions"]) + "]")
        print("decimal: [" + ", ".join(str(v) for v in info["decimals"]) + "]")
    return 0


def _family_points(name: str) -> int:
    return {"relaxed": 2, "extended": 3, "interpolatory": 4}[name]


def _cmd_analyze(args) -> int:
    family = FAMILY_NAMES[args.family]
    report = ops.analyze(
        family,
        args.N,
        args.alpha or "0",
        args.beta or "0",
        max_n=args.max_n,
        max_l=args.max_l,
    )
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    print(f"scheme: {report['family']} N={report['N']}, alpha={report['alpha']}, beta={report['beta']}")
    print(f"classification: {report['classification']}")
    print(f"generation degree: {report['generation_degree']}")
    extra = ""
    if report["shift_condition_degree"] > report["reproduction_degree"]:
        extra = (
            f" (shift conditions alone hold to degree {report['shift_condition_degree']},"
            " capped by generation)"
        )
    print(f"reproduction degree: {report['reproduction_degree']} at shift {report['shift']}{extra}")
    print(f"support width: {report['support_width']}")
    cont = report["continuity"]
    if cont["certified_order"] >= 0:
        print(
            f"continuity: certified C^{cont['certified_order']}"
            f" (level {cont['contraction_level']}, norm {cont['norm']} < 1)"
        )
    else:
        print("continuity: not certified within the level budget")
    if "special_check" in report:
        sc = report["special_check"]
        verdict = "holds" if sc["holds"] else "fails"
        print(
            f"closed-form C^{sc['order']} check ({sc['points']}-point): max {sc['max_value']}"
            f" -> {verdict}"
        )
    return 0


def _cmd_refine(args) -> int:
    with open(args.scene, "r", encoding="utf-8") as fh:
        scene = parse_scene(fh.read())
    results = ops.refine_scene(scene)
    out_dir = args.out_dir or "."
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for export in scene.exports:
        path = os.path.join(out_dir, export.path)
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        if export.format == "svg":
            layers = []
            for item_id in export.ids:
                result = results[item_id]
                layers.append(
                    polygon_layer(item_id, result.source, result.refined, result.flagged_points)
                )
            content = curve_svg(layers)
        else:
            meshes = [results[item_id].refined for item_id in export.ids]
            content = "".join(mesh_obj(mesh) for mesh in meshes)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(content)
        written.append(path)
    for path in written:
        print(path)
    if not scene.exports:
        for item_id, result in results.items():
            count = (
                len(result.refined.points)
                if hasattr(result.refined, "points")
                else result.refined.rows * result.refined.cols
            )
            print(f"{item_id}: {count} points")
    return 0


def _cmd_basis(args) -> int:
    family = FAMILY_NAMES[args.family]
    mask = build_mask(family, args.N)
    symbol = specialize(mask, args.alpha or "0", args.beta or "0")
    samples = basic_limit_function(
        symbol, args.steps, exact=True, support_radius=support_width(mask) // 2
    )
    content = function_svg(samples.abscissae, samples.values, samples.support_radius)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(content)
    print(args.output)
    return 0


def _cmd_serve(args) -> int:
    from .service import run

    run(host=args.host, port=args.port, static_dir=args.static)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subdivkit",
        description="Build, certify and apply parametric binary subdivision schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mask = sub.add_parser("mask", help="print a family mask, symbolic or concrete")
    _add_scheme_arguments(p_mask)
    p_mask.add_argument("--json", action="store_true")
    p_mask.set_defaults(func=_cmd_mask)

    p_an = sub.add_parser("analyze", help="certify degrees, support and continuity")
    _add_scheme_arguments(p_an)
    p_an.add_argument("--max-l", type=int, default=DEFAULT_MAX_L, dest="max_l")
    p_an.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n")
    p_an.add_argument("--json", action="store_true")
    p_an.set_defaults(func=_cmd_analyze)

    p_ref = sub.add_parser("refine", help="refine a scene file and write its exports")
    p_ref.add_argument("scene", help="path to a scene JSON document")
    p_ref.add_argument("--out-dir", help="directory for export paths (default: cwd)")
    p_ref.set_defaults(func=_cmd_refine)

    p_basis = sub.add_parser("basis", help="sample the basic limit function to SVG")
    _add_scheme_arguments(p_basis)
    p_basis.add_argument("--steps", type=int, default=6)
    p_basis.add_argument("-o", "--output", default="basis.svg")
    p_basis.set_defaults(func=_cmd_basis)

    p_serve = sub.add_parser("serve", help="run the local JSON service for the designer UI")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8710)
    p_serve.add_argument("--static", help="directory of UI assets to serve at /")
    p_serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SceneError as exc:
        print(f"scene error at {exc.path}: {exc.reason}", file=sys.stderr)
        return 2
    except SubdivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
