# trigonal/cli/commands/deform.py
"""`deform`: sweep a family, report its moves and its discriminant locus"""
from trigonal.cli.output import emit, read_text, svg_path, write_svg
from trigonal.schemas.curves import parse_spec
from trigonal.schemas.reports import deform_report
from trigonal.services.analysis.deformation import sweep_family
from trigonal.services.analysis.discriminant import LOCUS_TOLERANCE, discriminant_locus
from trigonal.services.render import render_locus_svg


def register(subparsers) -> None:
    parser = subparsers.add_parser("deform", help="sweep a one-parameter family")
    parser.add_argument("spec", nargs="?", help="spec JSON with a family block (stdin when omitted)")
    parser.add_argument("--resolution", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--tolerance", type=float, default=LOCUS_TOLERANCE, help="distance of a critical value to [0, 1]")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--locus-only", action="store_true", help="skip the dessin sweep")
    parser.add_argument("--out", default=None)
    parser.add_argument("--svg", action="store_true")
    parser.set_defaults(handler=run)


def run(args) -> int:
    spec = parse_spec(read_text(args.spec))
    family = spec.to_family()
    sweep = None if args.locus_only else sweep_family(family, args.resolution, args.seed, args.workers)
    locus = discriminant_locus(family, tolerance=args.tolerance, workers=args.workers)
    report = deform_report(family.param, sweep, locus)
    payload = report.model_dump(mode="json")
    if args.svg:
        payload["svg"] = write_svg(render_locus_svg(report.locus), svg_path(args.out, args.spec, "locus.svg"))
    emit(payload, args.out)
    return 0
