"""Corona products of graphs and digraphs, their closed forms, and an oracle comparator.

Product vertex layout is fixed: core vertex ``i`` keeps index ``i`` and copy
vertex ``r`` of the ``i``-th copy of H gets index ``n + i*m + r``.

Closed forms are evaluated from the factors only. ``verify_corona`` builds
the product and recomputes everything directly so the two can be compared.

Same-copy distances in the directed product: a walk ``v_r -> u_i -> v_s``
always has length 2, so each direction is capped at 2 independently, giving
``min(d_H(r, s), 2) + min(d_H(s, r), 2)``. Capping the H sum-distance at 4
instead overestimates whenever one direction inside H is short and the
other is long (e.g. H a directed 4-cycle); ``capped_sum_distance`` keeps
that capped-sum variant only so the comparator can report where it diverges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .boundary import boundary_profile, eccentric_set, graph_boundary_profile
from .errors import CoreTooSmall, GraphError, HTooSmall
from .graph import (
    Digraph,
    Distance,
    DistanceMatrix,
    UndirectedGraph,
    all_pairs,
)
from .metric import (
    eccentricity_profile,
    graph_eccentricity_profile,
    require_connected,
    require_strong,
    sum_metric_matrix,
)

DIRECTED = "directed"
UNDIRECTED = "undirected"


@dataclass(frozen=True, order=True)
class CoronaVertex:
    """``CoronaVertex.core(i)`` or ``CoronaVertex.copy(i, r)``."""

    kind: str
    i: int
    r: int = -1

    @classmethod
    def core(cls, i: int) -> "CoronaVertex":
        return cls("core", i)

    @classmethod
    def copy(cls, i: int, r: int) -> "CoronaVertex":
        return cls("copy", i, r)

    @property
    def is_core(self) -> bool:
        return self.kind == "core"

    def index(self, n: int, m: int) -> int:
        if not 0 <= self.i < n:
            raise GraphError(f"core index {self.i} out of range for n={n}")
        if self.is_core:
            return self.i
        if not 0 <= self.r < m:
            raise GraphError(f"copy index {self.r} out of range for m={m}")
        return n + self.i * m + self.r

    @classmethod
    def from_index(cls, idx: int, n: int, m: int) -> "CoronaVertex":
        if not 0 <= idx < n * (1 + m):
            raise GraphError(f"product index {idx} out of range")
        if idx < n:
            return cls.core(idx)
        i, r = divmod(idx - n, m)
        return cls.copy(i, r)

    def __str__(self) -> str:
        return f"u{self.i}" if self.is_core else f"v{self.r}^{self.i}"


VertexRef = Union[CoronaVertex, int]


@dataclass(frozen=True)
class CoronaProduct:
    factor_core: Union[Digraph, UndirectedGraph]
    factor_h: Union[Digraph, UndirectedGraph]
    product: Union[Digraph, UndirectedGraph]

    @property
    def n(self) -> int:
        return self.factor_core.n

    @property
    def m(self) -> int:
        return self.factor_h.n

    @property
    def family(self) -> str:
        return DIRECTED if isinstance(self.product, Digraph) else UNDIRECTED

    def index(self, x: VertexRef) -> int:
        return _index(x, self.n, self.m)

    def vertex(self, idx: int) -> CoronaVertex:
        return CoronaVertex.from_index(idx, self.n, self.m)

    def copy_indices(self, cores=None) -> frozenset[int]:
        """Indices of every copy vertex attached to the given core vertices (default all)."""
        n, m = self.n, self.m
        cores = range(n) if cores is None else cores
        return frozenset(n + i * m + r for i in cores for r in range(m))

    def labels(self) -> list[str]:
        return [str(self.vertex(k)) for k in range(self.product.n)]


def _index(x: VertexRef, n: int, m: int) -> int:
    if isinstance(x, CoronaVertex):
        return x.index(n, m)
    if not 0 <= x < n * (1 + m):
        raise GraphError(f"product index {x} out of range")
    return x


def _product_edges(core, h, attach_both_ways: bool) -> list[tuple[int, int]]:
    n, m = core.n, h.n
    edges = list(core.edges())
    h_edges = h.edges()
    for i in range(n):
        base = n + i * m
        edges.extend((base + a, base + b) for a, b in h_edges)
        for r in range(m):
            edges.append((i, base + r))
            if attach_both_ways:
                edges.append((base + r, i))
    return edges


def corona_undirected(g: UndirectedGraph, h: UndirectedGraph) -> CoronaProduct:
    if h.n < 2:
        raise HTooSmall(f"H needs at least 2 vertices, got {h.n}")
    product = UndirectedGraph(g.n * (1 + h.n), _product_edges(g, h, False))
    return CoronaProduct(g, h, product)


def corona_directed(d: Digraph, h: Digraph) -> CoronaProduct:
    require_strong(d)
    if h.n < 2:
        raise HTooSmall(f"H needs at least 2 vertices, got {h.n}")
    product = Digraph(d.n * (1 + h.n), _product_edges(d, h, True))
    return CoronaProduct(d, h, product)


# -- closed-form distances ---------------------------------------------------

def _closed_undirected(dg: DistanceMatrix, dh: DistanceMatrix, x: int, y: int) -> Distance:
    n, m = dg.n, dh.n
    if x < n and y < n:
        return dg[x][y]
    if x < n or y < n:
        core, other = (x, y) if x < n else (y, x)
        j = (other - n) // m
        return dg[core][j] + 1
    i, r = divmod(x - n, m)
    j, t = divmod(y - n, m)
    if i != j:
        return dg[i][j] + 2
    return min(dh[r][t], 2)


def _closed_directed(sd: DistanceMatrix, dh: DistanceMatrix, x: int, y: int) -> Distance:
    n, m = sd.n, dh.n
    if x < n and y < n:
        return sd[x][y]
    if x < n or y < n:
        core, other = (x, y) if x < n else (y, x)
        j = (other - n) // m
        return sd[core][j] + 2
    i, r = divmod(x - n, m)
    j, s = divmod(y - n, m)
    if i != j:
        return sd[i][j] + 4
    if r == s:
        return 0
    return min(dh[r][s], 2) + min(dh[s][r], 2)


def capped_sum_distance(h: Digraph, r: int, s: int) -> Distance:
    """Same-copy distance as ``min(sd_H(r, s), 4)``; unreliable, kept for comparison only."""
    d = all_pairs(h)
    return min(d[r][s] + d[s][r], 4)


def corona_distance_undirected(g: UndirectedGraph, h: UndirectedGraph, x: VertexRef, y: VertexRef) -> Distance:
    require_connected(g)
    n, m = g.n, h.n
    return _closed_undirected(all_pairs(g), all_pairs(h), _index(x, n, m), _index(y, n, m))


def corona_distance_directed(d: Digraph, h: Digraph, x: VertexRef, y: VertexRef) -> Distance:
    n, m = d.n, h.n
    return _closed_directed(sum_metric_matrix(d), all_pairs(h), _index(x, n, m), _index(y, n, m))


def corona_distance_matrix_undirected(g: UndirectedGraph, h: UndirectedGraph) -> DistanceMatrix:
    require_connected(g)
    dg, dh = all_pairs(g), all_pairs(h)
    size = g.n * (1 + h.n)
    return DistanceMatrix(
        tuple(_closed_undirected(dg, dh, x, y) for y in range(size)) for x in range(size)
    )


def corona_distance_matrix_directed(d: Digraph, h: Digraph) -> DistanceMatrix:
    sd, dh = sum_metric_matrix(d), all_pairs(h)
    size = d.n * (1 + h.n)
    return DistanceMatrix(
        tuple(_closed_directed(sd, dh, x, y) for y in range(size)) for x in range(size)
    )


# -- closed-form eccentricities and sets --------------------------------------

@dataclass(frozen=True)
class CoronaProfile:
    """Distance structure of a corona product, as product vertex indices."""

    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: frozenset[int]
    periphery: frozenset[int]
    eccentric_set: frozenset[int]
    contour: frozenset[int]
    boundary: frozenset[int]


def _require_core_size(core) -> None:
    # a one-vertex core has no second copy to push copy eccentricities up
    if core.n < 2:
        raise CoreTooSmall("closed forms need a core factor with at least 2 vertices")


def corona_ecc_undirected(g: UndirectedGraph, h: UndirectedGraph, x: VertexRef) -> int:
    require_connected(g)
    _require_core_size(g)
    v = CoronaVertex.from_index(_index(x, g.n, h.n), g.n, h.n)
    return graph_eccentricity_profile(g).ecc[v.i] + (1 if v.is_core else 2)


def corona_ecc_directed(d: Digraph, h: Digraph, x: VertexRef) -> int:
    require_strong(d)
    _require_core_size(d)
    v = CoronaVertex.from_index(_index(x, d.n, h.n), d.n, h.n)
    return eccentricity_profile(d).ecc[v.i] + (2 if v.is_core else 4)


def _shifted_profile(n, m, prof, ecc_core_set, core_shift, copy_shift) -> CoronaProfile:
    ecc = tuple(prof.ecc[i] + core_shift for i in range(n)) + tuple(
        prof.ecc[i] + copy_shift for i in range(n) for _ in range(m)
    )

    def copies(cores):
        return frozenset(n + i * m + r for i in cores for r in range(m))

    return CoronaProfile(
        ecc=ecc,
        radius=prof.radius + core_shift,
        diameter=prof.diameter + copy_shift,
        center=frozenset(prof.center),
        periphery=copies(prof.periphery),
        eccentric_set=copies(ecc_core_set),
        contour=copies(range(n)),
        boundary=copies(range(n)),
    )


def corona_profile_undirected(g: UndirectedGraph, h: UndirectedGraph) -> CoronaProfile:
    require_connected(g)
    _require_core_size(g)
    prof = graph_eccentricity_profile(g)
    ecc_g = graph_boundary_profile(g).eccentric_set
    return _shifted_profile(g.n, h.n, prof, ecc_g, 1, 2)


def corona_profile_directed(d: Digraph, h: Digraph) -> CoronaProfile:
    require_strong(d)
    _require_core_size(d)
    prof = eccentricity_profile(d)
    return _shifted_profile(d.n, h.n, prof, eccentric_set(d), 2, 4)


# -- comparator --------------------------------------------------------------

PROFILE_QUANTITIES = (
    "ecc", "radius", "diameter", "center", "periphery", "eccentric_set", "contour", "boundary",
)


@dataclass
class CoronaVerification:
    """Closed forms against direct computation on the built product.

    ``distance_witnesses`` lists pairs where the closed form and the oracle
    disagree; ``capped_sum_divergences`` lists same-copy pairs where the capped
    H sum-distance disagrees with the oracle (directed family only).
    Both are sorted by (x, y).
    """

    family: str
    n: int
    m: int
    matches: dict[str, bool] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)
    distance_witnesses: list[tuple[int, int, Distance, Distance]] = field(default_factory=list)
    capped_sum_divergences: list[tuple[int, int, Distance, Distance]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.matches.values()) and not self.distance_witnesses

    def to_dict(self) -> dict:
        def num(x):
            return None if x == float("inf") else int(x)

        def rows(items):
            return [[x, y, num(a), num(b)] for x, y, a, b in items]

        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "ok": self.ok,
            "matches": dict(sorted(self.matches.items())),
            "skipped": sorted(self.skipped),
            "distance_witnesses": rows(self.distance_witnesses),
            "capped_sum_divergences": rows(self.capped_sum_divergences),
        }


def _direct_profile(product) -> CoronaProfile:
    if isinstance(product, Digraph):
        ep, bp = eccentricity_profile(product), boundary_profile(product)
    else:
        ep, bp = graph_eccentricity_profile(product), graph_boundary_profile(product)
    return CoronaProfile(
        ecc=ep.ecc,
        radius=ep.radius,
        diameter=ep.diameter,
        center=ep.center,
        periphery=ep.periphery,
        eccentric_set=bp.eccentric_set,
        contour=bp.contour,
        boundary=bp.boundary,
    )


def verify_corona(core, h, family: str) -> CoronaVerification:
    """Build the corona product and compare every closed form with direct computation."""
    if family == DIRECTED:
        prod = corona_directed(core, h)
        closed = corona_distance_matrix_directed(core, h)
        oracle = sum_metric_matrix(prod.product)
    elif family == UNDIRECTED:
        require_connected(core)
        prod = corona_undirected(core, h)
        closed = corona_distance_matrix_undirected(core, h)
        oracle = all_pairs(prod.product)
    else:
        raise GraphError(f"unknown family {family!r}")

    n, m = core.n, h.n
    report = CoronaVerification(family, n, m)
    size = prod.product.n
    for x in range(size):
        for y in range(size):
            if closed[x][y] != oracle[x][y]:
                report.distance_witnesses.append((x, y, closed[x][y], oracle[x][y]))
    report.matches["distance"] = not report.distance_witnesses

    if family == DIRECTED:
        for i in range(n):
            base = n + i * m
            for r in range(m):
                for s in range(m):
                    if r == s:
                        continue
                    verbatim = capped_sum_distance(h, r, s)
                    actual = oracle[base + r][base + s]
                    if verbatim != actual:
                        report.capped_sum_divergences.append((base + r, base + s, verbatim, actual))

    if n < 2:
        report.skipped.extend(PROFILE_QUANTITIES)
        return report
    if family == DIRECTED:
        expected = corona_profile_directed(core, h)
    else:
        expected = corona_profile_undirected(core, h)
    direct = _direct_profile(prod.product)
    for name in PROFILE_QUANTITIES:
        report.matches[name] = getattr(expected, name) == getattr(direct, name)
    return report
