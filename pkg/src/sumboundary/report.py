"""Report assembly and rendering. Every vertex set is emitted sorted ascending."""
from __future__ import annotations

import json

from .boundary import boundary_profile, graph_boundary_profile
from .edgelist import GraphDocument
from .metric import Metric, eccentricity_profile, graph_eccentricity_profile

SCHEMA = 1


def _sorted(s):
    return sorted(s)


def analysis_report(doc: GraphDocument, metric: Metric | str = Metric.SUM) -> dict:
    g = doc.to_graph()
    if doc.family == "directed":
        metric_name = Metric(metric).value
        ep = eccentricity_profile(g, metric_name)
        bp = boundary_profile(g, metric_name)
    else:
        metric_name = "graph"
        ep = graph_eccentricity_profile(g)
        bp = graph_boundary_profile(g)
    return {
        "schema": SCHEMA,
        "command": "analyze",
        "input_digest": doc.digest(),
        "family": doc.family,
        "n": doc.n,
        "metric": metric_name,
        "eccentricity": [
            {"vertex": v, "label": doc.label(v), "ecc": e} for v, e in enumerate(ep.ecc)
        ],
        "radius": ep.radius,
        "diameter": ep.diameter,
        "center": _sorted(ep.center),
        "periphery": _sorted(ep.periphery),
        "boundary_profile": {
            "boundary": _sorted(bp.boundary),
            "contour": _sorted(bp.contour),
            "eccentric_set": _sorted(bp.eccentric_set),
            "periphery": _sorted(bp.periphery),
        },
    }


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _fmt_set(vs) -> str:
    return "{" + ", ".join(str(v) for v in vs) + "}"


def render_analysis(report: dict) -> str:
    lines = [
        f"family: {report['family']}  n: {report['n']}  metric: {report['metric']}",
        f"input sha256: {report['input_digest']}",
        "vertex  label  ecc",
    ]
    for row in report["eccentricity"]:
        lines.append(f"{row['vertex']:>6}  {row['label']:<5}  {row['ecc']}")
    bp = report["boundary_profile"]
    lines += [
        f"radius: {report['radius']}",
        f"diameter: {report['diameter']}",
        f"center: {_fmt_set(report['center'])}",
        f"periphery: {_fmt_set(report['periphery'])}",
        f"boundary: {_fmt_set(bp['boundary'])}",
        f"contour: {_fmt_set(bp['contour'])}",
        f"eccentric: {_fmt_set(bp['eccentric_set'])}",
    ]
    return "\n".join(lines) + "\n"


def render_check(check: dict) -> str:
    """Corona comparison as ``#`` comment lines, so it can trail an edge-list document."""
    lines = [f"# check family={check['family']} n={check['n']} m={check['m']} ok={str(check['ok']).lower()}"]
    for name, matched in check["matches"].items():
        lines.append(f"#   {name}: {'match' if matched else 'MISMATCH'}")
    for name in check["skipped"]:
        lines.append(f"#   {name}: skipped (core factor has one vertex)")
    for x, y, closed, oracle in check["distance_witnesses"]:
        lines.append(f"#   distance mismatch ({x},{y}): closed form {closed}, product {oracle}")
    div = check["capped_sum_divergences"]
    lines.append(f"# capped-sum same-copy formula diverges on {len(div)} pair(s)")
    for x, y, verbatim, oracle in div:
        lines.append(f"#   ({x},{y}): capped-sum {verbatim}, product {oracle}")
    return "\n".join(lines) + "\n"


def render_verify(report: dict) -> str:
    lines = [
        f"verify family={report['family']} max_n={report['max_n']} "
        f"trials={report['trials']} seed={report['seed']}",
    ]
    for name, entry in report["checks"].items():
        status = "ok" if entry["failed"] == 0 else "FAIL"
        lines.append(f"  {name:<32} {status:<4} passed={entry['passed']} failed={entry['failed']}")
        if entry["first_failure"] is not None:
            lines.append(f"    first failure: {json.dumps(entry['first_failure'], sort_keys=True)}")
    div = report["capped_sum_divergences"]
    lines.append(
        f"capped-sum same-copy formula diverged on {div['pairs']} pair(s) "
        f"in {div['instances']} instance(s)"
    )
    lines.append("result: " + ("all invariants hold" if report["ok"] else "DISCREPANCY"))
    return "\n".join(lines) + "\n"
