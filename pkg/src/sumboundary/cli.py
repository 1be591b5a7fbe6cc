"""Command-line entry point.

Exit codes: 0 success, 1 discrepancy found, 2 input or usage error.
"""
from __future__ import annotations

import argparse
import sys

from .boundary import geodesic_interval
from .corona import DIRECTED, corona_directed, corona_undirected, verify_corona
from .edgelist import GraphDocument, read_document, serialize
from .errors import GraphError
from .fuzz import run_verify
from .report import (
    SCHEMA,
    analysis_report,
    render_analysis,
    render_check,
    render_verify,
    to_json,
)

EXIT_OK, EXIT_DISCREPANCY, EXIT_INPUT = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sumboundary",
        description="Sum-metric distance structure and boundary-type sets of strong digraphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="eccentricity and boundary-type profile")
    a.add_argument("file")
    a.add_argument("--metric", choices=["sum", "max"], default="sum")
    a.add_argument("--json", action="store_true")

    i = sub.add_parser("interval", help="geodesic interval between two vertices")
    i.add_argument("file")
    i.add_argument("u", type=int)
    i.add_argument("v", type=int)
    i.add_argument("--json", action="store_true")

    c = sub.add_parser("corona", help="build a corona product")
    c.add_argument("core_file")
    c.add_argument("h_file")
    c.add_argument("--check", action="store_true", help="compare closed forms against the product")
    c.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="seeded invariant sweep over random instances")
    v.add_argument("--family", choices=["directed", "undirected"], default="directed")
    v.add_argument("--n", type=int, default=8, help="largest core order")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    return p


def _analyze(args, out) -> int:
    doc = read_document(args.file)
    report = analysis_report(doc, args.metric)
    out.write(to_json(report) if args.json else render_analysis(report))
    return EXIT_OK


def _interval(args, out) -> int:
    doc = read_document(args.file)
    if doc.family != "directed":
        raise GraphError("interval expects a digraph file")
    iv = geodesic_interval(doc.to_graph(), args.u, args.v)
    members = sorted(iv.vertices)
    if args.json:
        out.write(to_json({"schema": SCHEMA, "command": "interval",
                           "u": args.u, "v": args.v, "vertices": members}))
    else:
        out.write(f"I({args.u},{args.v}) = {{{', '.join(map(str, members))}}}\n")
    return EXIT_OK


def _corona(args, out) -> int:
    core_doc, h_doc = read_document(args.core_file), read_document(args.h_file)
    if core_doc.family != h_doc.family:
        raise GraphError("both factors must be digraphs or both graphs")
    core, h = core_doc.to_graph(), h_doc.to_graph()
    if core_doc.family == DIRECTED:
        prod = corona_directed(core, h)
    else:
        prod = corona_undirected(core, h)
    labels = dict(enumerate(prod.labels()))
    prod_doc = GraphDocument.from_graph(prod.product, labels)
    check = verify_corona(core, h, core_doc.family).to_dict() if args.check else None

    if args.json:
        payload = {
            "schema": SCHEMA,
            "command": "corona",
            "product": {
                "family": prod_doc.family,
                "n": prod_doc.n,
                "edges": [list(e) for e in prod_doc.canonical_edges()],
                "labels": prod.labels(),
            },
        }
        if check is not None:
            payload["check"] = check
        out.write(to_json(payload))
    else:
        out.write(serialize(prod_doc))
        if check is not None:
            out.write(render_check(check))
    if check is not None and not check["ok"]:
        return EXIT_DISCREPANCY
    return EXIT_OK


def _verify(args, out) -> int:
    if args.n < 2 or args.trials < 0:
        raise GraphError("--n must be >= 2 and --trials >= 0")
    report = run_verify(args.family, args.n, args.trials, args.seed)
    out.write(to_json(report) if args.json else render_verify(report))
    return EXIT_OK if report["ok"] else EXIT_DISCREPANCY


COMMANDS = {"analyze": _analyze, "interval": _interval, "corona": _corona, "verify": _verify}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out)
    except (GraphError, OSError) as exc:
        err.write(f"sumboundary: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
