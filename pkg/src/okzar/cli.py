"""The `okzar` command line: load a variety document, run one computation,
print a canonical JSON report on stdout."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import report as rep
from .errors import OkzarError, InputError, DataError
from .expressions import parse_divisor
from .lattice import ehrhart_polynomial, lattice_point_count
from .okounkov import (
    OkounkovBody,
    body_hilbert_basis,
    cox_report,
    divisor_body,
    global_body,
    restrict_body,
)
from .cones import cone_from_rays
from .plotting import plot_chambers
from .variety import (
    VarietyData,
    facet_pairing,
    integral_decomposition_check,
    load_variety,
    zariski_chambers,
    zariski_decompose,
)


def _load(path: str) -> VarietyData:
    p = Path(path)
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON ({exc})") from None
    try:
        return load_variety(doc, name=p.stem)
    except DataError as exc:
        raise DataError(f"{path}: {exc}") from None


def _base_report(command: str, v: VarietyData, args=None, **extra) -> dict:
    out = {"command": command, "variety": v.name}
    if args is not None:
        out["file"] = args.file
    out.update(extra)
    return out


def cmd_validate(args) -> dict:
    v = _load(args.file)
    checks = [
        {"name": "unimodular basis change", "ok": True},
        {"name": "restriction compatibility", "ok": True},
        {"name": "fixed effective classes", "ok": True},
        {"name": "integral decompositions", "ok": integral_decomposition_check(v)},
    ]
    if v.n <= 6:
        from .lattice import generators_are_hilbert_basis

        body = global_body(v)
        checks.append(
            {
                "name": "body generators form a Hilbert basis",
                "ok": generators_are_hilbert_basis(body.cone),
            }
        )
    return _base_report(
        "validate",
        v,
        args,
        dim=v.n,
        ok=all(c["ok"] for c in checks),
        checks=checks,
        warnings=list(v.warnings),
    )


def cmd_chambers(args) -> dict:
    v = _load(args.file)
    chambers = zariski_chambers(v)
    return _base_report(
        "chambers",
        v,
        args,
        count=len(chambers),
        chambers=[rep.chamber_entry(v, ch) for ch in chambers],
    )


def cmd_pairing(args) -> dict:
    v = _load(args.file)
    pairing = facet_pairing(v)
    entries = []
    for i in sorted(pairing.by_fixed_ray):
        f = pairing.by_fixed_ray[i]
        entries.append(
            {
                "fixed_ray": f"E{i}",
                "facet_generators": sorted(
                    rep.divisor_label(v, r) for r in f.generators
                ),
                "functional": rep.fmt_vec(f.supporting_functional),
            }
        )
    f1 = pairing.non_separating
    return _base_report(
        "pairing",
        v,
        args,
        pairs=entries,
        non_separating={
            "facet_generators": sorted(rep.divisor_label(v, r) for r in f1.generators),
            "functional": rep.fmt_vec(f1.supporting_functional),
        },
    )


def cmd_zariski(args) -> dict:
    v = _load(args.file)
    coords = parse_divisor(args.divisor, v)
    dec = zariski_decompose(v, coords, check_all_chambers=True)
    negative = rep.divisor_entry(v, dec.negative)
    negative["support"] = list(dec.support)
    return _base_report(
        "zariski",
        v,
        args,
        divisor=rep.divisor_entry(v, coords, args.divisor),
        positive=rep.divisor_entry(v, dec.positive),
        negative=negative,
        chamber_support=list(dec.chamber.support),
    )


def _resolve_body(v: VarietyData, restrict: str | None) -> OkounkovBody:
    body = global_body(v)
    if restrict is None:
        return body
    if restrict not in v.subcones:
        known = ", ".join(sorted(v.subcones)) or "none defined"
        raise InputError(f"unknown subcone {restrict!r} ({known})")
    sub = cone_from_rays(v.subcones[restrict], v.n)
    return restrict_body(body, sub)


def cmd_nobody(args) -> dict:
    v = _load(args.file)
    if args.divisor is not None:
        body = global_body(v)
        coords = parse_divisor(args.divisor, v)
        poly = divisor_body(body, coords)
        return _base_report(
            "nobody",
            v,
            args,
            mode="divisor",
            divisor=rep.divisor_entry(v, coords, args.divisor),
            vertices=rep.fmt_vecs(poly.vertices),
        )
    body = _resolve_body(v, args.restrict)
    mode = "restricted" if args.restrict else "global"
    out = _base_report(
        "nobody",
        v,
        args,
        mode=mode,
        rays=rep.fmt_vecs(body.cone.rays),
        annotated=[rep.ray_annotation(v, r, v.n) for r in body.cone.rays],
        ineqs=rep.fmt_vecs(body.cone.ineqs),
    )
    if args.restrict:
        out["subcone"] = args.restrict
    return out


def cmd_hilbert(args) -> dict:
    v = _load(args.file)
    body = _resolve_body(v, args.restrict)
    basis = body_hilbert_basis(body)
    gens = set(body.cone.rays)
    extra = sorted(el for el in basis.elements if el not in gens)
    out = _base_report(
        "hilbert",
        v,
        args,
        elements=rep.fmt_vecs(basis.elements),
        annotated=[rep.ray_annotation(v, el, v.n) for el in basis.elements],
        cox_generators=[
            {
                "valuation": rep.fmt_vec(g.valuation),
                "divisor": rep.fmt_vec(g.divisor),
                "label": g.label,
            }
            for g in cox_report(v, body)
        ],
        generators_form_hilbert_basis=not extra,
        extra_elements=rep.fmt_vecs(extra),
    )
    if args.restrict:
        out["subcone"] = args.restrict
    return out


def cmd_ehrhart(args) -> dict:
    v = _load(args.file)
    coords = parse_divisor(args.divisor, v)
    body = global_body(v)
    poly = divisor_body(body, coords)
    eh = ehrhart_polynomial(poly)
    counts = {str(k): str(lattice_point_count(poly, k)) for k in range(2 * eh.degree + 1)}
    return _base_report(
        "ehrhart",
        v,
        args,
        divisor=rep.divisor_entry(v, coords, args.divisor),
        vertices=rep.fmt_vecs(poly.vertices),
        degree=eh.degree,
        coefficients=rep.fmt_vec(eh.coefficients),
        counts=counts,
    )


def cmd_plot(args) -> dict:
    v = _load(args.file)
    try:
        coeffs = [Fraction(x.strip()) for x in args.hyperplane.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse hyperplane coefficients {args.hyperplane!r}") from None
    chambers = zariski_chambers(v)
    cells = plot_chambers(v, chambers, coeffs, args.out)
    return _base_report(
        "plot",
        v,
        args,
        hyperplane=rep.fmt_vec(coeffs),
        svg=args.out,
        cells=cells,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="okzar",
        description="Exact chamber decompositions, Zariski decompositions and "
        "Newton-Okounkov bodies from Picard-lattice data.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        metavar="N",
        help="cap internal parallelism (computations are single-threaded; "
        "values above 1 are accepted and treated as a cap)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="variety document (JSON)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "run all document invariant checks")
    add("chambers", cmd_chambers, "enumerate the Mori/Zariski chambers")
    add("pairing", cmd_pairing, "pair fixed extremal classes with nef facets")

    p = add("zariski", cmd_zariski, "decompose an effective class")
    p.add_argument("-d", "--divisor", required=True, help='divisor expression, e.g. "D2+2E2"')

    p = add("nobody", cmd_nobody, "global/restricted body rays or a divisor slice")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--divisor", help="slice the body over this class")
    group.add_argument("--restrict", metavar="NAME", help="named subcone to restrict to")

    p = add("hilbert", cmd_hilbert, "Hilbert basis of the body with Cox annotations")
    p.add_argument("--restrict", metavar="NAME", help="named subcone to restrict to")

    p = add("ehrhart", cmd_ehrhart, "counting polynomial of a divisor slice")
    p.add_argument("-d", "--divisor", required=True, help="divisor expression")

    p = add("plot", cmd_plot, "slice the chamber fan and render an SVG")
    p.add_argument("--hyperplane", required=True, help='slice functional, e.g. "1,1,1"')
    p.add_argument("--out", required=True, help="output SVG path")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        out = args.func(args)
    except OkzarError as exc:
        print(f"okzar: error: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(rep.render(out))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
