"""Command-line interface.

Output is one JSON object per line unless ``--pretty`` is given.  Exit
codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bij
from . import core, qseries, stats, verify
from .core import ASYM, DYCK, MATCHING, MOTZKIN, PERMUTATION, SYM
from .render import render_ascii

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _first(fn):
    return lambda obj: fn(obj)[0]


# Fixed routes between kinds: list of (label, function) applied in order.
_STEPS = {
    "sym_pdsaw_to_dyck": _first(bij.sym_pdsaw_to_dyck),
    "dyck_to_sym_pdsaw": bij.dyck_to_sym_pdsaw,
    "matching_to_dyck": bij.matching_to_dyck,
    "dyck_to_matching": bij.dyck_to_matching,
    "asym_pdsaw_to_motzkin": _first(bij.asym_pdsaw_to_motzkin),
    "motzkin_to_asym_pdsaw": bij.motzkin_to_asym_pdsaw,
    "perm_to_motzkin": bij.perm_to_motzkin,
    "motzkin_to_perm": bij.motzkin_to_perm,
    "nadeau": bij.nadeau,
    "nadeau_inverse": bij.nadeau_inverse,
}

ROUTES = {
    (SYM, DYCK): ["sym_pdsaw_to_dyck"],
    (DYCK, SYM): ["dyck_to_sym_pdsaw"],
    (MATCHING, DYCK): ["matching_to_dyck"],
    (DYCK, MATCHING): ["dyck_to_matching"],
    (SYM, MATCHING): ["sym_pdsaw_to_dyck", "dyck_to_matching"],
    (MATCHING, SYM): ["matching_to_dyck", "dyck_to_sym_pdsaw"],
    (ASYM, MOTZKIN): ["asym_pdsaw_to_motzkin"],
    (MOTZKIN, ASYM): ["motzkin_to_asym_pdsaw"],
    (PERMUTATION, MOTZKIN): ["perm_to_motzkin"],
    (MOTZKIN, PERMUTATION): ["motzkin_to_perm"],
    (ASYM, PERMUTATION): ["asym_pdsaw_to_motzkin", "motzkin_to_perm"],
    (PERMUTATION, ASYM): ["perm_to_motzkin", "motzkin_to_asym_pdsaw"],
}
NADEAU_ROUTES = {
    (ASYM, PERMUTATION): ["nadeau"],
    (PERMUTATION, ASYM): ["nadeau_inverse"],
}

ROUTE_HELP = "routes: " + "; ".join(
    f"{a}->{b}: {' then '.join(r)}" for (a, b), r in ROUTES.items()
) + "; with --route nadeau, asym-pdsaw<->permutation use Nadeau's map"


class UsageError(Exception):
    pass


def _emit(obj):
    print(json.dumps(obj, sort_keys=False))


def _inputs(args) -> list[str]:
    if args.input is not None:
        return [args.input]
    return [line.strip() for line in sys.stdin if line.strip()]


def route_for(src: str, dst: str, route: str = "default") -> list[str]:
    if route == "nadeau":
        table = NADEAU_ROUTES
    elif route in ("default", "motzkin"):
        table = ROUTES
    else:
        raise UsageError(f"unknown route {route!r}")
    try:
        return table[(src, dst)]
    except KeyError:
        raise UsageError(f"no route from {src} to {dst} (route {route})") from None


def map_object(text: str, dst: str, route: str = "default") -> dict:
    obj = core.parse(text)
    src = core.kind_of(obj)
    labels = route_for(src, dst, route)
    out = obj
    for label in labels:
        out = _STEPS[label](out)
    result = {
        "input": core.render_text(obj),
        "output": core.render_text(out),
        "route": labels,
    }
    # the trace always describes building the path from the walk side
    for walk in (obj, out):
        if isinstance(walk, core.SymPdsaw) and any("dyck" in lab for lab in labels):
            result["trace"] = bij.sym_pdsaw_to_dyck(walk)[1].to_json()
        elif isinstance(walk, core.AsymPdsaw) and any("motzkin" in lab for lab in labels):
            result["trace"] = bij.asym_pdsaw_to_motzkin(walk)[1].to_json()
    result["stats_in"] = stats.stat_report(obj)
    result["stats_out"] = stats.stat_report(out)
    return result


def cmd_enumerate(args) -> int:
    for obj in core.enumerate_objects(args.kind, args.n, cap=args.cap):
        if args.pretty:
            print(core.render_text(obj))
            print(render_ascii(obj))
            print()
            continue
        line = {"object": core.render_text(obj)}
        if args.stats:
            line["stats"] = stats.stat_report(obj)
        _emit(line)
    return EXIT_OK


def cmd_count(args) -> int:
    _emit({"kind": args.kind, "n": args.n, "count": core.count_objects(args.kind, args.n)})
    return EXIT_OK


def cmd_free_walks(args) -> int:
    _emit({"var": "t", "coeffs": core.count_free_sym_walks(args.max_steps)})
    return EXIT_OK


def cmd_validate(args) -> int:
    status = EXIT_OK
    for text in _inputs(args):
        try:
            core.parse(text)
            _emit({"input": text, "ok": True})
        except core.ValidationError as exc:
            _emit({"input": text, "ok": False, "violations": exc.violations})
            status = EXIT_FAILED
    return status


def cmd_stats(args) -> int:
    for text in _inputs(args):
        _emit(stats.stat_report(core.parse(text)))
    return EXIT_OK


def cmd_render(args) -> int:
    for text in _inputs(args):
        obj = core.parse(text)
        print(core.render_text(obj))
        print(render_ascii(obj))
        print()
    return EXIT_OK


def cmd_map(args) -> int:
    for text in _inputs(args):
        if args.kind is not None:
            core.parse(text, args.kind)
        result = map_object(text, args.to, args.route)
        if args.pretty:
            print(result["input"], "->", result["output"])
            print(render_ascii(core.parse(result["output"])))
        else:
            _emit(result)
    return EXIT_OK


FORMULAS = {
    "touchard": qseries.touchard_riordan,
    "williams": qseries.williams,
    "cf-hermite": lambda n: qseries.cf_moments("hermite", n),
    "cf-laguerre": lambda n: qseries.cf_moments("laguerre", n),
    "transfer-hermite": lambda n: qseries.transfer_distribution("hermite", n),
    "transfer-laguerre": lambda n: qseries.transfer_distribution("laguerre", n),
}


def _poly_out(header: dict, poly, pretty: bool):
    if pretty:
        print(poly)
    else:
        _emit({**header, "poly": poly.to_json(), "text": str(poly)})


def cmd_formula(args) -> int:
    poly = FORMULAS[args.which](args.n)
    _poly_out({"which": args.which, "n": args.n}, poly, args.pretty)
    return EXIT_OK


def cmd_distribution(args) -> int:
    if args.stat not in stats.stat_names(args.kind) or args.stat == "factors":
        raise UsageError(f"statistic {args.stat!r} is not an integer statistic of {args.kind}")
    poly = qseries.statistic_distribution(args.kind, args.stat, args.n, cap=args.cap)
    _poly_out({"kind": args.kind, "stat": args.stat, "n": args.n}, poly, args.pretty)
    return EXIT_OK


def cmd_series(args) -> int:
    print(json.dumps(qseries.free_walk_series(args.order).to_json()))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    status = EXIT_OK
    for name in names:
        report = verify.run_suite(name, args.max_n, jobs=args.jobs)
        if args.pretty:
            mark = "PASS" if report.ok else "FAIL"
            print(f"{mark} {name:10s} sizes {report.sizes[0]}..{report.sizes[1]}"
                  f"  cases {report.cases}  failures {report.failure_count}"
                  f"  {report.seconds:.2f}s")
        else:
            _emit(report.to_json())
        if not report.ok:
            status = EXIT_FAILED
    if args.diagnose_nadeau:
        top = 7 if args.max_n is None else args.max_n
        _emit({"diagnostic": "nadeau-vs-motzkin-route", "sizes": verify.nadeau_agreement(top)})
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdsaw",
        description="Wedge walks, matchings and permutations: bijections, statistics, q-series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = list(core.KINDS)

    def with_input(p):
        p.add_argument("--input", help="object text; otherwise one object per stdin line")
        return p

    p = sub.add_parser("enumerate", help="list all objects of one size as JSON lines")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--cap", type=int, default=core.DEFAULT_CAP)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="closed-form number of objects")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("free-walks", help="count wedge walks ending anywhere by total steps")
    p.add_argument("--max-steps", type=int, required=True)
    p.set_defaults(func=cmd_free_walks)

    p = with_input(sub.add_parser("validate", help="check objects against their invariants"))
    p.set_defaults(func=cmd_validate)

    p = with_input(sub.add_parser("stats", help="statistic report of objects"))
    p.set_defaults(func=cmd_stats)

    p = with_input(sub.add_parser("render", help="ASCII picture of objects"))
    p.set_defaults(func=cmd_render)

    p = with_input(sub.add_parser("map", help="apply a bijection", epilog=ROUTE_HELP))
    p.add_argument("--to", choices=kinds, required=True, help="target kind")
    p.add_argument("--kind", choices=kinds, help="expected source kind")
    p.add_argument("--route", choices=["default", "motzkin", "nadeau"], default="default")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("formula", help="evaluate a moment formula")
    p.add_argument("--which", choices=list(FORMULAS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("distribution", help="brute-force distribution of a statistic")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--stat", choices=list(stats.INTEGER_STATS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=core.DEFAULT_CAP)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("series", help="closed-form series of walks ending anywhere")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    p.add_argument("--max-n", type=int, default=None, help="override every suite's largest size")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--diagnose-nadeau", action="store_true",
                   help="report how often Nadeau's map equals the Motzkin route (never fails)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
        parser.error("--n must be non-negative")
    try:
        return args.func(args)
    except core.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (core.ParseError, core.ValidationError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
