# trigonal/cli/commands/verify.py
"""`verify`: rebuild the example curves and compare their types"""
from trigonal.cli.output import apply_tolerance, emit
from trigonal.services.catalog import verify_catalog


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="reproduce the example curve catalog")
    parser.add_argument("--n", type=int, default=None, help="only curves of this maximal degree")
    parser.add_argument("--resolution", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--tolerance", type=float, default=None, help="how close to real a critical j-value must be to count as monochrome")
    parser.add_argument("--out", default=None)
    parser.set_defaults(handler=run)


def run(args) -> int:
    apply_tolerance(args.tolerance)
    result = verify_catalog(args.n, args.resolution, args.seed)
    emit(result, args.out)
    return 0 if result["matched"] == result["total"] else 1
