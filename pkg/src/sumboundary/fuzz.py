"""Seeded invariant sweep behind ``sumboundary verify``.

Each trial draws its own sub-seed from a master ``random.Random(seed)``, so
a run is reproducible from (family, max_n, trials, seed) alone. Only the
first failure of each check is recorded.
"""
from __future__ import annotations

import random
from itertools import combinations

from .boundary import boundary_profile, geodesic_interval, geodetic_closure
from .corona import DIRECTED, UNDIRECTED, corona_directed, verify_corona
from .graph import Digraph, all_pairs, bfs_from, is_strong, neighbor_lists
from .generators import random_connected, random_digraph, random_graph, random_strong
from .metric import (
    check_metric_axioms,
    eccentricity_profile,
    max_metric_matrix,
    sum_metric_matrix,
)

DENSITIES = (0.3, 0.45, 0.6, 0.8)
H_DENSITIES = (0.2, 0.4, 0.7)


class _Checks:
    def __init__(self):
        self.results: dict[str, dict] = {}

    def record(self, name, passed, witness=None):
        entry = self.results.setdefault(name, {"passed": 0, "failed": 0, "first_failure": None})
        if passed:
            entry["passed"] += 1
        else:
            entry["failed"] += 1
            if entry["first_failure"] is None:
                entry["first_failure"] = witness

    @property
    def ok(self):
        return all(e["failed"] == 0 for e in self.results.values())


def _literal_boundary(dist, nbrs):
    n = len(dist)
    return {
        v for v in range(n)
        if any(all(dist[u][w] <= dist[u][v] for w in nbrs[v]) for u in range(n))
    }


def _digraph_checks(checks, g: Digraph, tag):
    n = g.n
    d = all_pairs(g)
    gt = g.transpose()
    checks.record(
        "transpose_duality",
        all(bfs_from(g, u)[v] == bfs_from(gt, v)[u] for u in range(n) for v in range(n)),
        tag,
    )
    checks.record("edge_consistency", all(
        (d[u][v] == 1) == g.has_edge(u, v) for u in range(n) for v in range(n)), tag)
    checks.record("strong_iff_finite", is_strong(g) == d.is_finite, tag)
    if not is_strong(g):
        return

    checks.record("directed_triangle", all(
        d[u][v] <= d[u][w] + d[w][v] for u in range(n) for v in range(n) for w in range(n)), tag)
    s = sum_metric_matrix(g)
    mx = max_metric_matrix(g)
    report = check_metric_axioms(s)
    checks.record("sum_metric_axioms", report.holds, dict(tag, axiom=report.axiom, witness=report.witness))
    checks.record("sum_at_least_two", all(s[u][v] >= 2 for u in range(n) for v in range(n) if u != v), tag)
    checks.record("max_sum_sandwich", all(
        mx[u][v] <= s[u][v] <= 2 * mx[u][v] for u in range(n) for v in range(n)), tag)

    prof = eccentricity_profile(g)
    if prof.radius == prof.diameter:
        centre_ok = prof.center == prof.periphery == frozenset(range(n))
    else:
        centre_ok = bool(prof.center) and bool(prof.periphery) and not (prof.center & prof.periphery)
    checks.record("center_periphery_shape", centre_ok, tag)

    bp = boundary_profile(g)
    checks.record("per_in_ct_and_ecc", bp.periphery <= (bp.contour & bp.eccentric_set), tag)
    checks.record("ecc_ct_in_boundary", (bp.eccentric_set | bp.contour) <= bp.boundary, tag)
    checks.record("boundary_matches_definition",
                  set(bp.boundary) == _literal_boundary(s, neighbor_lists(g)), tag)

    interval_ok = True
    for u in range(n):
        for v in range(n):
            iv = geodesic_interval(g, u, v).vertices
            if iv != geodesic_interval(g, v, u).vertices:
                interval_ok = False
            expect = {w for w in range(n)
                      if d[u][w] + d[w][v] == d[u][v] or d[v][w] + d[w][u] == d[v][u]}
            if set(iv) != expect:
                interval_ok = False
    checks.record("interval_symmetry_membership", interval_ok, tag)

    monotone = True
    for a, b in combinations(range(n), 2):
        small = geodetic_closure(g, [a])
        big = geodetic_closure(g, [a, b])
        if not small <= big or not {a, b} <= big:
            monotone = False
    checks.record("closure_monotone", monotone, tag)


def run_verify(family: str, max_n: int, trials: int, seed: int) -> dict:
    if family not in (DIRECTED, UNDIRECTED):
        raise ValueError(f"family must be {DIRECTED!r} or {UNDIRECTED!r}")
    if max_n < 2:
        raise ValueError("--n must be at least 2")
    rng = random.Random(seed)
    checks = _Checks()
    divergent_instances = 0
    divergent_pairs = 0

    for trial in range(trials):
        n = rng.randint(2, max_n)
        m = rng.randint(2, 5)
        p = rng.choice(DENSITIES)
        ph = rng.choice(H_DENSITIES)
        s1, s2, s3 = (rng.randrange(2**32) for _ in range(3))
        tag = {"trial": trial, "n": n, "m": m}
        if family == DIRECTED:
            core = random_strong(n, p, s1).to_graph()
            _digraph_checks(checks, core, tag)
            _digraph_checks(checks, random_digraph(n, p, s3).to_graph(), dict(tag, graph="random"))
            h = random_digraph(m, ph, s2).to_graph()
        else:
            core = random_connected(n, p, s1).to_graph()
            h = random_graph(m, ph, s2).to_graph()
            s = sum_metric_matrix(core.to_digraph())
            dg = all_pairs(core)
            checks.record("symmetric_sum_is_twice_hop", all(
                s[u][v] == 2 * dg[u][v] for u in range(n) for v in range(n)), tag)

        ver = verify_corona(core, h, family)
        for name, matched in sorted(ver.matches.items()):
            witness = dict(tag)
            if name == "distance" and ver.distance_witnesses:
                witness["pair"] = list(ver.distance_witnesses[0][:2])
            checks.record(f"corona_{name}", matched, witness)
        if family == DIRECTED:
            checks.record("corona_product_strong", is_strong(corona_directed(core, h).product), tag)
        if ver.capped_sum_divergences:
            divergent_instances += 1
            divergent_pairs += len(ver.capped_sum_divergences)

    return {
        "schema": 1,
        "command": "verify",
        "family": family,
        "max_n": max_n,
        "trials": trials,
        "seed": seed,
        "ok": checks.ok,
        "checks": dict(sorted(checks.results.items())),
        "capped_sum_divergences": {
            "instances": divergent_instances,
            "pairs": divergent_pairs,
        },
    }
