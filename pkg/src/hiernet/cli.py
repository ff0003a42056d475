"""Command-line front end: generate, dist, route, stats, verify.

Every command is deterministic for fixed flags (there is no environment
or config-file input), so generated artifacts are byte-identical across
runs. Exit codes: 0 success, 1 verification mismatch, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import metrics, oracle, routing, topology
from .labels import (
    LabelError,
    OrderCapError,
    RadixSpec,
    SpecError,
    SpecMismatchError,
    format_label,
    format_spec,
    parse_label,
    parse_spec,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

DEFAULT_MAX_ORDER = 20_000


def _write(out: str | None, text: str) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _arrow(path: routing.Path) -> str:
    return " -> ".join(format_label(lab) for lab in path)


def _cmd_generate(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    spec.check_enumerable()
    spec.check_enumerable(args.max_order)
    stream = topology.edges(spec)
    if args.format == "edgelist":
        text = topology.to_edgelist(stream)
    elif args.format == "dot":
        text = topology.to_dot(stream)
    else:
        total, terms = topology.size_closed_form(spec)
        payload = {
            "spec": format_spec(spec),
            "order": spec.order(),
            "size": total,
            "size_by_rule": {
                "first_digit": terms[0],
                "zero_block_flip": terms[1],
                "root_clique": terms[2],
            },
            "edges": [
                [format_label(u), format_label(v), kind.value] for u, v, kind in stream
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    _write(args.out, text)
    return EXIT_OK


def _cmd_dist(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    x = parse_label(args.src, spec)
    y = parse_label(args.dst, spec)
    result = metrics.distance(x, y)
    lines = [
        str(result.value),
        f"case: {result.case.value} (common suffix {result.common_suffix_len})",
    ]
    if args.show_path:
        lines.append(_arrow(routing.route(x, y)))
    _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_route(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    x = parse_label(args.src, spec)
    y = parse_label(args.dst, spec)
    _write(args.out, _arrow(routing.route(x, y)) + "\n")
    return EXIT_OK


def build_stats(spec: RadixSpec, max_order: int = DEFAULT_MAX_ORDER) -> dict:
    """The stats payload; enumeration-backed fields are None above the cap."""
    total, terms = topology.size_closed_form(spec)
    payload = {
        "spec": format_spec(spec),
        "order": spec.order(),
        "size": total,
        "size_by_rule": {
            "first_digit": terms[0],
            "zero_block_flip": terms[1],
            "root_clique": terms[2],
        },
        "radius": metrics.radius(spec),
        "diameter": metrics.diameter(spec),
        "layers": list(metrics.layer_counts(spec).counts),
        "degree_histogram": None,
        "eccentricity_discrepancies": None,
    }
    if spec.order() <= min(max_order, spec.order_cap):
        graph = oracle.build_graph(spec)
        degrees = Counter(
            graph.degree(i) for i in range(graph.vertex_count)
        )
        payload["degree_histogram"] = [[d, degrees[d]] for d in sorted(degrees)]
        payload["eccentricity_discrepancies"] = [
            {"label": format_label(e.label), "formula": e.formula, "actual": e.actual}
            for e in metrics.eccentricity_discrepancies(spec)
        ]
    return payload


def _cmd_stats(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    payload = build_stats(spec, args.max_order)
    _write(args.out, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite:
        specs = [RadixSpec(r) for r in oracle.STANDARD_SUITE]
    elif args.spec:
        specs = [parse_spec(s) for s in args.spec]
    else:
        print("error: give --spec (repeatable) or --suite", file=sys.stderr)
        return EXIT_USAGE
    reports = []
    for spec in specs:
        spec.check_enumerable()
        spec.check_enumerable(args.max_order)
        reports.append(oracle.verify_spec(spec))
    payload = {
        "all_passed": all(r.passed for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    _write(args.out, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK if payload["all_passed"] else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiernet",
        description="Hierarchical networks on mixed-radix labels: "
        "generation, exact distance queries, routing, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write the edge set of a member")
    gen.add_argument("--spec", required=True, help="radix sequence, e.g. 2,3,4")
    gen.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    gen.add_argument("--out", default=None, help="output file (default: stdout)")
    gen.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    gen.set_defaults(handler=_cmd_generate)

    dist = sub.add_parser("dist", help="distance between two labels")
    dist.add_argument("--spec", required=True)
    dist.add_argument("--from", dest="src", required=True, metavar="LABEL")
    dist.add_argument("--to", dest="dst", required=True, metavar="LABEL")
    dist.add_argument("--show-path", action="store_true")
    dist.add_argument("--out", default=None)
    dist.set_defaults(handler=_cmd_dist)

    rt = sub.add_parser("route", help="shortest path between two labels")
    rt.add_argument("--spec", required=True)
    rt.add_argument("--from", dest="src", required=True, metavar="LABEL")
    rt.add_argument("--to", dest="dst", required=True, metavar="LABEL")
    rt.add_argument("--out", default=None)
    rt.set_defaults(handler=_cmd_route)

    st = sub.add_parser("stats", help="order, size, radius, diameter, histograms")
    st.add_argument("--spec", required=True)
    st.add_argument("--out", default=None)
    st.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    st.set_defaults(handler=_cmd_stats)

    ver = sub.add_parser("verify", help="run the brute-force battery")
    ver.add_argument("--spec", action="append", default=None, help="repeatable")
    ver.add_argument("--suite", action="store_true", help="verify the standard members")
    ver.add_argument("--out", default=None)
    ver.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    ver.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (SpecError, LabelError, SpecMismatchError, OrderCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
