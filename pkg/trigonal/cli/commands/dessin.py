# trigonal/cli/commands/dessin.py
"""`dessin`: build the dessin of one curve and report it"""
from trigonal.cli.output import apply_tolerance, emit, read_text, svg_path, write_svg
from trigonal.schemas.curves import parse_spec
from trigonal.schemas.render import RenderStyle
from trigonal.schemas.reports import dessin_report
from trigonal.services.dessin_service import build_dessin
from trigonal.services.render import render_dessin_svg


def register(subparsers) -> None:
    parser = subparsers.add_parser("dessin", help="compute the dessin of a curve")
    parser.add_argument("spec", nargs="?", help="curve spec JSON (stdin when omitted)")
    parser.add_argument("--resolution", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None, help="root-finder start perturbation")
    parser.add_argument("--tolerance", type=float, default=None, help="how close to real a critical j-value must be to count as monochrome")
    parser.add_argument("--out", default=None)
    parser.add_argument("--svg", action="store_true")
    parser.add_argument("--suppress-bivalent", action="store_true")
    parser.set_defaults(handler=run)


def run(args) -> int:
    apply_tolerance(args.tolerance)
    spec = parse_spec(read_text(args.spec))
    d = build_dessin(spec.to_curve(), args.resolution, args.seed)
    report = dessin_report(d)
    payload = report.model_dump(mode="json")
    if args.svg:
        svg = render_dessin_svg(report, RenderStyle(suppress_bivalent=args.suppress_bivalent))
        payload["svg"] = write_svg(svg, svg_path(args.out, args.spec, "dessin.svg"))
    emit(payload, args.out)
    return 0
