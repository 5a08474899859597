"""Command-line front end (`srcy`)."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import fixtures
from .cohomology import hodge_pipeline_ci
from .deformation import t1_degree_zero_basis
from .fileio import (
    geometry_and_params,
    parse_complexes_file,
    parse_fan_file,
    parse_matrix_file,
    parse_monomial_file,
    parse_vector_file,
)
from .pfaffian import (
    milnor_quasihomogeneous,
    pfaffian,
    principal_pfaffians,
    quasi_weights,
    verify_first_order,
)
from .report import emit
from .simplicial import load_triangulation
from .sr_ideal import sr_report
from .symmetry import automorphism_group, orbits_on_t1
from .torusgroup import InfiniteStabilizer, diagonal_stabilizer
from .toric import (
    all_charts,
    crepancy_check,
    derive_component_structure,
    divisor_meets_strict_transform,
    euler_exceptional,
    intersection_complex,
    match_component_table,
    verify_smooth_subdivision,
)
from .verify import run_all


def _print_json(data):
    sys.stdout.write(json.dumps(data, separators=(",", ":")) + "\n")


def _load_complex(path):
    return load_triangulation(Path(path).read_text())


def cmd_t1(args):
    k = _load_complex(args.triangulation)
    basis = t1_degree_zero_basis(k)
    _print_json({
        "dimension": len(basis),
        "elements": [
            {"a": list(e.support), "a_vector": list(e.a_vector), "b": sorted(e.b)}
            for e in basis
        ],
    })


def cmd_aut(args):
    k = _load_complex(args.triangulation)
    group = automorphism_group(k)
    _print_json({
        "order": group.order,
        "generators": [group.one_line(g) for g in group.generators],
    })


def cmd_orbits(args):
    k = _load_complex(args.triangulation)
    group = automorphism_group(k)
    basis = t1_degree_zero_basis(k)
    part = orbits_on_t1(group, basis)
    _print_json({
        "order": group.order,
        "orbit_count": part.count,
        "orbit_sizes": part.sizes(),
        "blocks": part.blocks,
    })


def cmd_sr(args):
    _print_json(sr_report(_load_complex(args.triangulation)))


def cmd_pfaffian(args):
    matrix, _ring = parse_matrix_file(Path(args.matrix).read_text())
    if matrix.dim % 2 == 0:
        _print_json({"pfaffian": str(pfaffian(matrix))})
    else:
        _print_json({"principal_pfaffians": [str(p) for p in principal_pfaffians(matrix)]})


def cmd_verify_family(args):
    matrix, ring = parse_matrix_file(Path(args.matrix).read_text())
    vector, _ring2 = parse_vector_file(Path(args.vector).read_text())
    _geo, params = geometry_and_params(ring.names)
    vector = [v.rename(ring) for v in vector]
    ok = verify_first_order(matrix, vector, params)
    _print_json({"first_order_syzygy": ok})
    return 0 if ok else 1


def cmd_torus_group(args):
    gens, ring = parse_vector_file(Path(args.generators).read_text())
    geo, _params = geometry_and_params(ring.names)
    h = diagonal_stabilizer(gens, geo)
    if isinstance(h, InfiniteStabilizer):
        _print_json({"finite": False, "torus_rank": h.torus_rank})
        return 0
    _print_json({
        "finite": True,
        "order": h.order,
        "invariant_factors": h.invariant_factors,
        "generators": h.generators,
    })


def cmd_toric(args):
    fan = parse_fan_file(Path(args.fan).read_text())
    if args.toric_cmd == "verify":
        rep = verify_smooth_subdivision(fan)
        _print_json({"rays": rep.n_rays, "cones": rep.n_cones, "ok": rep.ok,
                     "problems": rep.problems})
        return 0 if rep.ok else 1
    fmono, invmono = parse_monomial_file(Path(args.fpoly).read_text())
    charts = all_charts(fan, invmono)
    if args.toric_cmd == "crepancy":
        crep = crepancy_check(fan, fmono)
        _print_json({
            "crepant": [list(fan.rays[r]) for r, v in sorted(crep.items()) if v],
            "not_crepant": [list(fan.rays[r]) for r, v in sorted(crep.items()) if not v],
        })
        return 0
    if args.toric_cmd == "charts":
        meets = {r: divisor_meets_strict_transform(fan, charts, r)
                 for r in fan.interior_ray_ids()}
        _print_json({
            "charts": {str(c + 1): str(charts[c].poly) for c in sorted(charts)},
            "meeting_rays": [list(fan.rays[r]) for r, v in sorted(meets.items()) if v],
        })
        return 0
    if args.toric_cmd == "euler":
        rows = [tuple(r) for r in _parse_component_rows(Path(args.components).read_text())]
        structure = derive_component_structure(fan, charts)
        comps = match_component_table(fan, charts, structure, rows)
        cx = intersection_complex(fan, charts, comps)
        chi = euler_exceptional([c.chi for c in comps], cx)
        _print_json({
            "components": [
                {"label": c.label, "chi": c.chi, "provenance": c.chi_provenance}
                for c in comps
            ],
            "edges": len(cx.faces_of_dim(1)),
            "triangles": len(cx.faces_of_dim(2)),
            "chi_exceptional": chi,
        })
        return 0
    raise SystemExit("unknown toric subcommand")


def _parse_component_rows(text):
    from .fileio import parse_component_table

    return parse_component_table(text)


def cmd_cohom(args):
    res = parse_complexes_file(Path(args.complexes).read_text())
    out = hodge_pipeline_ci(res["structure_sheaf"], res["ideal_square"])
    _print_json({"h11": out.h11, "h12": out.h12, "intermediates": out.intermediates})


def cmd_milnor(args):
    weights = quasi_weights([Fraction(w) for w in args.weights])
    _print_json({"milnor": milnor_quasihomogeneous(weights)})


def cmd_run_all(args):
    only = args.only.split(",") if args.only else None
    try:
        report = run_all(base=args.fixtures, only=only)
    except fixtures.FixtureError as exc:
        sys.stderr.write("fixture error: %s\n" % exc)
        return 2
    sys.stdout.buffer.write(emit(report, args.format))
    if args.format == "json":
        sys.stdout.write("\n")
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="srcy",
        description="Exact checks for Stanley-Reisner sphere deformations, "
        "Pfaffian families and toric resolution bookkeeping.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    for name, fn in (("t1", cmd_t1), ("aut", cmd_aut), ("orbits", cmd_orbits), ("sr", cmd_sr)):
        p = sub.add_parser(name)
        p.add_argument("triangulation")
        p.set_defaults(fn=fn)

    p = sub.add_parser("pfaffian")
    p.add_argument("matrix")
    p.set_defaults(fn=cmd_pfaffian)

    p = sub.add_parser("verify-family")
    p.add_argument("matrix")
    p.add_argument("vector")
    p.set_defaults(fn=cmd_verify_family)

    p = sub.add_parser("torus-group")
    p.add_argument("generators")
    p.set_defaults(fn=cmd_torus_group)

    p = sub.add_parser("toric")
    p.add_argument("toric_cmd", choices=["verify", "crepancy", "charts", "euler"])
    p.add_argument("fan")
    p.add_argument("fpoly", nargs="?")
    p.add_argument("components", nargs="?")
    p.set_defaults(fn=cmd_toric)

    p = sub.add_parser("cohom")
    p.add_argument("cohom_cmd", choices=["hodge"])
    p.add_argument("complexes")
    p.set_defaults(fn=cmd_cohom)

    p = sub.add_parser("milnor")
    p.add_argument("weights", nargs="+")
    p.set_defaults(fn=cmd_milnor)

    p = sub.add_parser("run-all")
    p.add_argument("--fixtures", default=None)
    p.add_argument("--only", default=None,
                   help="comma-separated section list, e.g. t1,toric")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(fn=cmd_run_all)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    result = args.fn(args)
    return result or 0


if __name__ == "__main__":
    sys.exit(main())
