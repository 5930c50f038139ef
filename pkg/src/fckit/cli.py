"""Command line interface.

Exit status: 0 on success, 1 on a domain error or failed check, 2 on bad usage.
Caps default to 10**6 and can be changed with ``--cap`` or ``FCKIT_CAP``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .automata import StateCapExceeded, minimize, sink_states, to_dot
from .catalog import FAMILIES, CatalogError, catalog, parse_family
from .coxeter import GraphError, parse_graph
from .heaps import CapExceeded
from .series import format_poly, geodesic_series, growth_verdict, series_coefficients, smallest_positive_root, wfc_series

DEFAULT_CAP = 10**6


class UsageError(Exception):
    pass


def default_cap() -> int:
    raw = os.environ.get("FCKIT_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"FCKIT_CAP must be an integer, got {raw!r}")
    if value <= 0:
        raise UsageError("FCKIT_CAP must be positive")
    return value


def load_graph(args):
    if args.type and args.graph:
        raise UsageError("give either a graph file or --type, not both")
    if args.type:
        return catalog(parse_family(args.type))
    if not args.graph:
        raise UsageError("a graph file or --type NAME[:param] is required")
    try:
        with open(args.graph) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.graph}: {exc.strerror}")


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------- commands

def cmd_ared(args) -> int:
    from .fc_recognizer import build_ared

    g = load_graph(args)
    start = time.perf_counter()
    dfa = build_ared(g, args.cap)
    if args.minimize:
        dfa = minimize(dfa)
    elapsed = time.perf_counter() - start
    print(f"{dfa.num_states} states")
    if args.stats:
        sinks = sink_states(dfa)
        print(f"generators: {g.rank}")
        print(f"accepting states: {len(dfa.finals)}")
        print(f"sink states: {len(sinks)}")
        print(f"transitions: {dfa.num_states * g.rank}")
        print(f"build time: {elapsed:.3f} s", file=sys.stderr)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(dfa, hide_sink=args.hide_sink, name="Ared"))
    return 0


def cmd_series(args) -> int:
    g = load_graph(args)
    f = geodesic_series(g, args.cap) if args.geodesic else wfc_series(g, cap=args.cap)
    name = "R(Wfc)(t)" if args.geodesic else "Wfc(t)"
    verdict = growth_verdict(f)
    payload = {"series": f.to_dict(), "growth": verdict.to_dict()}
    lines = [f"{name} = {f}", f"growth: {verdict}"]
    if args.coeffs is not None:
        coeffs = series_coefficients(f, args.coeffs)
        payload["coefficients"] = coeffs
        lines.append("coefficients: " + " ".join(map(str, coeffs)))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    from .classify import classify_group, crosscheck_verdict

    g = load_graph(args)
    if args.crosscheck is not None:
        report = crosscheck_verdict(g, args.crosscheck, args.cap)
        payload = report.classification.to_dict()
        payload["crosscheck"] = report.to_dict()
        _emit(args, payload, _classify_text(report.classification) +
              f"\ngrowth: {report.growth}\ncrosscheck: {payload['crosscheck']['status']}")
        return 0 if report.agree else 1
    cls = classify_group(g)
    _emit(args, cls.to_dict(), _classify_text(cls))
    return 0


def _classify_text(cls) -> str:
    lines = [f"verdict: {cls.verdict}"]
    for comp in cls.components:
        cert = comp.to_dict()["certificate"]
        line = f"  {{{','.join(comp.generators)}}}: {comp.verdict} via {cert['family']} ({cert['set']})"
        if comp.embedding:
            line += " embedding " + " ".join(f"{k}->{v}" for k, v in comp.embedding.items())
        lines.append(line)
    if cls.discrepancy:
        lines.append(f"discrepancy: {cls.discrepancy}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    from . import oracle

    g = load_graph(args)
    reports = []
    if args.delta is not None:
        reports.append(("delta", oracle.verify_delta(g, args.delta)))
    if args.oracle is not None:
        reports.append(("oracle", oracle.verify_oracle(g, args.oracle, args.cap)))
    if args.shortlex is not None:
        reports.append(("shortlex", oracle.verify_shortlex(g, args.shortlex)))
    if not reports:
        raise UsageError("verify needs at least one of --delta, --oracle, --shortlex")
    if args.json:
        print(json.dumps({name: r.to_dict() for name, r in reports}, sort_keys=True))
    else:
        for name, r in reports:
            line = f"{name} L={r.length}: {r.status}"
            if r.counterexample:
                line += " " + json.dumps(r.counterexample, sort_keys=True)
            print(line)
    return 0 if all(r.ok for _, r in reports) else 1


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name, (_, params) in FAMILIES.items():
            print(name if params is None else f"{name} ({params})")
        return 0
    if not args.family:
        raise UsageError("catalog get needs a family name")
    fam = parse_family(args.family if args.param is None else f"{args.family}:{args.param}")
    print(catalog(fam).to_json())
    return 0


def table_minima() -> list[dict]:
    """Denominator and smallest positive root of the FC series of Y1..Y9."""
    rows = []
    for i in range(1, 10):
        f = wfc_series(catalog(f"Y{i}"))
        root = smallest_positive_root(f.den)
        rows.append({"type": f"Y{i}", "denominator": format_poly(f.den.coeffs, "q"),
                     "den": list(f.den.coeffs), "root": root})
    return rows


def cmd_table_minima(args) -> int:
    rows = table_minima()
    if args.json:
        print(json.dumps(rows, sort_keys=True))
        return 0
    for r in rows:
        print(f"{r['type']}\t{r['denominator']}\t{r['root']:.10f}")
    return 0


# ---------------------------------------------------------------- parser

def _add_graph(p):
    p.add_argument("graph", nargs="?", help="graph JSON file")
    p.add_argument("--type", metavar="NAME[:param]", help="catalog graph instead of a file")


def build_parser(cap: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fckit", description="Fully commutative elements of Coxeter groups")
    parser.add_argument("--cap", type=int, default=cap, help=f"state/element cap (default {cap})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ared", help="build the FC recognizer")
    _add_graph(p)
    p.add_argument("--dot", metavar="FILE", help="write Graphviz source")
    p.add_argument("--hide-sink", action="store_true", help="omit the sink from the DOT output")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_ared)

    p = sub.add_parser("series", help="generating function of FC elements")
    _add_graph(p)
    p.add_argument("--geodesic", action="store_true", help="count reduced words instead of elements")
    p.add_argument("--coeffs", type=int, metavar="L", help="also print coefficients 0..L")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("classify", help="finite / periodic / exponential verdict")
    _add_graph(p)
    p.add_argument("--crosscheck", type=int, metavar="L", help="compare with the series and the oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="brute-force checks")
    _add_graph(p)
    p.add_argument("--delta", type=int, metavar="L")
    p.add_argument("--oracle", type=int, metavar="L")
    p.add_argument("--shortlex", type=int, metavar="L")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="named graphs")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("family", nargs="?")
    p.add_argument("param", nargs="?", type=int)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("table-minima", help="denominators and smallest roots for Y1..Y9")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table_minima)
    return parser


def run(argv=None) -> int:
    try:
        parser = build_parser(default_cap())
    except UsageError as exc:
        print(f"fckit: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("delta", "oracle", "shortlex", "coeffs", "crosscheck"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.print_usage(sys.stderr)
            print(f"fckit: --{name} must be nonnegative", file=sys.stderr)
            return 2
    if args.cap <= 0:
        print("fckit: --cap must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fckit: {exc}", file=sys.stderr)
        return 2
    except (GraphError, CatalogError, CapExceeded, StateCapExceeded, ValueError) as exc:
        print(f"fckit: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
