"""Boundary-type vertex sets and geodesic intervals."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable

from . import kernels
from .graph import (
    Digraph,
    DistanceMatrix,
    UndirectedGraph,
    _check_vertex,
    _csr,
    all_pairs,
    neighbor_lists,
)
from .metric import (
    EccentricityProfile,
    Metric,
    metric_matrix,
    require_connected,
    require_strong,
)


@dataclass(frozen=True)
class BoundaryProfile:
    boundary: frozenset[int]
    contour: frozenset[int]
    eccentric_set: frozenset[int]
    periphery: frozenset[int]
    metric: str = Metric.SUM.value


def _boundary(dist: DistanceMatrix, nbrs: list[list[int]]) -> frozenset[int]:
    ptr, idx = _csr(nbrs)
    flags = kernels.boundary_scan(dist.n, dist.flat(), ptr, idx)
    return frozenset(v for v, hit in enumerate(flags) if hit)


def _contour(ecc: tuple[int, ...], nbrs: list[list[int]]) -> frozenset[int]:
    return frozenset(
        v for v in range(len(ecc)) if all(ecc[u] <= ecc[v] for u in nbrs[v])
    )


def _eccentric(dist: DistanceMatrix, ecc: tuple[int, ...]) -> frozenset[int]:
    found = set()
    for u, row in enumerate(dist):
        found.update(v for v, x in enumerate(row) if x == ecc[u])
    return frozenset(found)


def _profile(dist: DistanceMatrix, nbrs: list[list[int]], metric: str) -> BoundaryProfile:
    prof = EccentricityProfile.from_matrix(dist)
    return BoundaryProfile(
        boundary=_boundary(dist, nbrs),
        contour=_contour(prof.ecc, nbrs),
        eccentric_set=_eccentric(dist, prof.ecc),
        periphery=prof.periphery,
        metric=metric,
    )


def boundary_set(g: Digraph, metric: Metric | str = Metric.SUM) -> frozenset[int]:
    return _boundary(metric_matrix(g, metric), neighbor_lists(g))


def eccentric_set(g: Digraph, metric: Metric | str = Metric.SUM) -> frozenset[int]:
    dist = metric_matrix(g, metric)
    return _eccentric(dist, EccentricityProfile.from_matrix(dist).ecc)


def contour_set(g: Digraph, metric: Metric | str = Metric.SUM) -> frozenset[int]:
    ecc = EccentricityProfile.from_matrix(metric_matrix(g, metric)).ecc
    return _contour(ecc, neighbor_lists(g))


def periphery_set(g: Digraph, metric: Metric | str = Metric.SUM) -> frozenset[int]:
    return EccentricityProfile.from_matrix(metric_matrix(g, metric)).periphery


def boundary_profile(g: Digraph, metric: Metric | str = Metric.SUM) -> BoundaryProfile:
    """All four sets from a single metric matrix and eccentricity profile."""
    metric = Metric(metric)
    return _profile(metric_matrix(g, metric), neighbor_lists(g), metric.value)


def graph_boundary_profile(g: UndirectedGraph) -> BoundaryProfile:
    """Same four sets for a connected undirected graph under hop distance."""
    require_connected(g)
    return _profile(all_pairs(g), neighbor_lists(g), "graph")


@dataclass(frozen=True)
class GeodesicInterval:
    endpoints: tuple[int, int]
    vertices: frozenset[int]


def _interval(d: DistanceMatrix, u: int, v: int) -> frozenset[int]:
    duv, dvu = d[u][v], d[v][u]
    return frozenset(
        w
        for w in range(d.n)
        if d[u][w] + d[w][v] == duv or d[v][w] + d[w][u] == dvu
    )


def geodesic_interval(g: Digraph, u: int, v: int) -> GeodesicInterval:
    """Vertices on some directed u->v geodesic or some directed v->u geodesic."""
    require_strong(g)
    _check_vertex(u, g.n)
    _check_vertex(v, g.n)
    return GeodesicInterval((u, v), _interval(all_pairs(g), u, v))


def geodetic_closure(g: Digraph, s: Iterable[int]) -> frozenset[int]:
    require_strong(g)
    members = sorted(set(s))
    for v in members:
        _check_vertex(v, g.n)
    d = all_pairs(g)
    closure: set[int] = set()
    for u, v in combinations_with_replacement(members, 2):
        closure |= _interval(d, u, v)
    return frozenset(closure)


def is_geodetic_set(g: Digraph, s: Iterable[int]) -> bool:
    return len(geodetic_closure(g, s)) == g.n
