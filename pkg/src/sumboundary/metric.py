"""Sum and maximum metrics on strong digraphs, eccentricity profiles, axiom checks."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .errors import NotConnected, NotStronglyConnected
from .graph import (
    INF,
    Digraph,
    Distance,
    DistanceMatrix,
    UndirectedGraph,
    _check_vertex,
    all_pairs,
    is_connected,
    is_strong,
)


class Metric(str, enum.Enum):
    SUM = "sum"
    MAX = "max"


def sum_distance(m: DistanceMatrix, u: int, v: int) -> Distance:
    _check_vertex(u, m.n)
    _check_vertex(v, m.n)
    return m[u][v] + m[v][u]


def max_distance(m: DistanceMatrix, u: int, v: int) -> Distance:
    _check_vertex(u, m.n)
    _check_vertex(v, m.n)
    return max(m[u][v], m[v][u])


def require_strong(g: Digraph) -> None:
    if not is_strong(g):
        raise NotStronglyConnected(f"digraph on {g.n} vertices is not strongly connected")


def require_connected(g: UndirectedGraph) -> None:
    if not is_connected(g):
        raise NotConnected(f"graph on {g.n} vertices is not connected")


def sum_metric_matrix(g: Digraph) -> DistanceMatrix:
    require_strong(g)
    d = all_pairs(g)
    return DistanceMatrix(
        tuple(d[u][v] + d[v][u] for v in range(g.n)) for u in range(g.n)
    )


def max_metric_matrix(g: Digraph) -> DistanceMatrix:
    require_strong(g)
    d = all_pairs(g)
    return DistanceMatrix(
        tuple(max(d[u][v], d[v][u]) for v in range(g.n)) for u in range(g.n)
    )


def metric_matrix(g: Digraph, metric: Metric | str = Metric.SUM) -> DistanceMatrix:
    metric = Metric(metric)
    if metric is Metric.SUM:
        return sum_metric_matrix(g)
    return max_metric_matrix(g)


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: frozenset[int]
    periphery: frozenset[int]

    @classmethod
    def from_matrix(cls, m: DistanceMatrix) -> "EccentricityProfile":
        if not m.is_finite:
            raise NotStronglyConnected("eccentricities need a finite distance matrix")
        ecc = tuple(int(max(row)) for row in m)
        radius, diameter = min(ecc), max(ecc)
        return cls(
            ecc=ecc,
            radius=radius,
            diameter=diameter,
            center=frozenset(v for v, e in enumerate(ecc) if e == radius),
            periphery=frozenset(v for v, e in enumerate(ecc) if e == diameter),
        )


def eccentricity_profile(g: Digraph, metric: Metric | str = Metric.SUM) -> EccentricityProfile:
    return EccentricityProfile.from_matrix(metric_matrix(g, metric))


def graph_eccentricity_profile(g: UndirectedGraph) -> EccentricityProfile:
    """Eccentricities of a connected undirected graph under ordinary hop distance."""
    require_connected(g)
    return EccentricityProfile.from_matrix(all_pairs(g))


@dataclass(frozen=True)
class AxiomReport:
    holds: bool
    axiom: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None


def check_metric_axioms(s: DistanceMatrix) -> AxiomReport:
    """Check identity/positivity, symmetry and the triangle inequality.

    Axioms are tried in that order; within each the first failing pair or
    triple in lexicographic order is reported.
    """
    n = s.n
    for u in range(n):
        for v in range(n):
            if s[u][v] == INF:
                return AxiomReport(False, "finite", (u, v))
    for u in range(n):
        for v in range(n):
            x = s[u][v]
            if x < 0 or (x == 0) != (u == v):
                return AxiomReport(False, "identity", (u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if s[u][v] != s[v][u]:
                return AxiomReport(False, "symmetry", (u, v))
    witness = kernels.triangle_violation(n, s.flat())
    if witness is not None:
        return AxiomReport(False, "triangle", tuple(witness))
    return AxiomReport(True)
