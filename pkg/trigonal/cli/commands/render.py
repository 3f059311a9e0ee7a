# trigonal/cli/commands/render.py
"""`render`: redraw a saved dessin or deform report as SVG"""
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from trigonal.cli.output import read_text
from trigonal.core.errors import ParseError
from trigonal.schemas.render import RenderStyle
from trigonal.schemas.reports import DeformReport, DessinReport
from trigonal.services.render import render_dessin_svg, render_locus_svg


def register(subparsers) -> None:
    parser = subparsers.add_parser("render", help="render a saved report to SVG")
    parser.add_argument("report", nargs="?", help="report JSON (stdin when omitted)")
    parser.add_argument("--suppress-bivalent", action="store_true")
    parser.add_argument("--out", default=None, help="SVG path (stdout when omitted)")
    parser.set_defaults(handler=run)


def run(args) -> int:
    text = read_text(args.report)
    try:
        data = json.loads(text)
        if "vertices" in data:
            svg = render_dessin_svg(
                DessinReport.model_validate(data), RenderStyle(suppress_bivalent=args.suppress_bivalent)
            )
        elif "locus" in data:
            svg = render_locus_svg(DeformReport.model_validate(data).locus)
        else:
            raise ParseError("not a dessin or deform report", "report")
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}")
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(first["msg"], ".".join(str(p) for p in first["loc"]))
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return 0
