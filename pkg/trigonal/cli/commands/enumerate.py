# trigonal/cli/commands/enumerate.py
"""`enumerate`: the type bound, the pre-type catalog and simple-dessin counts"""
from trigonal.cli.output import emit
from trigonal.services import combinatorics as comb

MODES = ("bound", "pretypes", "simple-count")


def register(subparsers) -> None:
    parser = subparsers.add_parser("enumerate", help="combinatorial counts for maximal degree n")
    parser.add_argument("mode", choices=MODES)
    parser.add_argument("n", type=int)
    parser.add_argument("--triples", action="store_true", help="include the partition triples behind the catalog")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--out", default=None)
    parser.set_defaults(handler=run)


def _bound(n: int) -> dict:
    catalog = comb.enumerate_pretypes(n)
    formula = comb.bound_formula(n)
    oracle = len(catalog.merged)
    return {"n": n, "formula": formula, "kappa": comb.kappa(n), "oracle": oracle, "agree": formula == oracle}


def _pretypes(n: int, triples: bool) -> dict:
    payload = _bound(n)
    payload["rows"] = [
        {"type": t.as_list(), "realizability": comb.realizability(n, t)}
        for t in comb.enumerate_pretypes(n).sorted_types()
    ]
    if triples:
        payload["triples"] = comb.pretype_rows(n)
    return payload


def _simple(n: int, workers) -> dict:
    count = comb.count_simple(n, workers)
    asymptotic = comb.simple_asymptotic(n)
    payload = {"n": n, "count": count, "asymptotic": asymptotic, "ratio": count / asymptotic}
    if n <= comb.BRUTE_FORCE_MAX_N:
        payload["bruteforce"] = comb.count_simple_bruteforce(n)
    return payload


def run(args) -> int:
    if args.mode == "bound":
        payload = _bound(args.n)
    elif args.mode == "pretypes":
        payload = _pretypes(args.n, args.triples)
    else:
        payload = _simple(args.n, args.workers)
    emit(payload, args.out)
    return 0
