"""Graph containers, reachability and BFS distances.

Vertices are dense integers ``0..n-1``. Both graph classes are immutable
after construction, so every function here is safe to call from several
threads at once.
"""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence, Tuple, Union

from . import kernels
from .errors import GraphError, LoopEdge, VertexOutOfRange

INF = math.inf
"""Distance between mutually unreachable vertices. Absorbs addition, exceeds every int."""

Distance = Union[int, float]
Edge = Tuple[int, int]


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise VertexOutOfRange(v, n)


def _csr(adj: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    ptr = [0]
    idx: list[int] = []
    for row in adj:
        idx.extend(row)
        ptr.append(len(idx))
    return ptr, idx


class DistanceMatrix:
    """n x n hop counts; ``INF`` where no path exists.

    Index as ``m[u][v]`` or ``m[u, v]``.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[Distance]]):
        self.rows: tuple[tuple[Distance, ...], ...] = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise GraphError("distance matrix must be square")

    @classmethod
    def _from_flat(cls, n: int, flat: Sequence[int]) -> "DistanceMatrix":
        return cls(
            tuple(INF if x < 0 else x for x in flat[i * n:(i + 1) * n]) for i in range(n)
        )

    def __getitem__(self, key):
        if isinstance(key, tuple):
            u, v = key
            return self.rows[u][v]
        return self.rows[key]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, DistanceMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"DistanceMatrix({[list(r) for r in self.rows]!r})"

    @property
    def is_finite(self) -> bool:
        return all(x != INF for row in self.rows for x in row)

    def flat(self) -> list[int]:
        """Row-major ints for the kernels; requires a finite matrix."""
        return [int(x) for row in self.rows for x in row]

    def tolist(self) -> list[list[Distance]]:
        return [list(r) for r in self.rows]


class Digraph:
    """Simple digraph: no loops, no parallel edges.

    Repeated edges in the input are dropped; a loop raises ``LoopEdge``.
    Adjacency lists are kept sorted so every traversal is deterministic.
    """

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"a digraph needs at least one vertex, got n={n!r}")
        out = [set() for _ in range(n)]
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise LoopEdge(u)
            out[u].add(v)
        inn = [set() for _ in range(n)]
        for u, targets in enumerate(out):
            for v in targets:
                inn[v].add(u)
        self.n = n
        self.out_adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in out)
        self.in_adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in inn)
        self._apsp: DistanceMatrix | None = None

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.out_adj[u]]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.out_adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]

    def transpose(self) -> "Digraph":
        return Digraph(self.n, ((v, u) for u, v in self.edges()))

    def __eq__(self, other) -> bool:
        if isinstance(other, Digraph):
            return self.n == other.n and self.out_adj == other.out_adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.out_adj))

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {self.edges()!r})"


class UndirectedGraph:
    """Simple undirected graph. ``(u, v)`` and ``(v, u)`` name the same edge."""

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"a graph needs at least one vertex, got n={n!r}")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise LoopEdge(u)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        self._apsp: DistanceMatrix | None = None

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def to_digraph(self) -> Digraph:
        """The symmetric digraph with both orientations of every edge."""
        return Digraph(self.n, [e for u, v in self.edges() for e in ((u, v), (v, u))])

    def __eq__(self, other) -> bool:
        if isinstance(other, UndirectedGraph):
            return self.n == other.n and self.adj == other.adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"UndirectedGraph({self.n}, {self.edges()!r})"


def build_digraph(n: int, edges: Iterable[Edge]) -> Digraph:
    return Digraph(n, edges)


def build_graph(n: int, edges: Iterable[Edge]) -> UndirectedGraph:
    return UndirectedGraph(n, edges)


def neighbors(g: Digraph | UndirectedGraph, v: int) -> frozenset[int]:
    """N(v): out- and in-neighbours together (plain adjacency for undirected graphs)."""
    _check_vertex(v, g.n)
    if isinstance(g, UndirectedGraph):
        return frozenset(g.adj[v])
    return frozenset(g.out_adj[v]) | frozenset(g.in_adj[v])


def neighbor_lists(g: Digraph | UndirectedGraph) -> list[list[int]]:
    return [sorted(neighbors(g, v)) for v in range(g.n)]


def _reach(adj: Sequence[Sequence[int]], src: int) -> set[int]:
    seen = {src}
    stack = [src]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strong(g: Digraph) -> bool:
    """True when every vertex reaches vertex 0 and vertex 0 reaches every vertex."""
    return len(_reach(g.out_adj, 0)) == g.n and len(_reach(g.in_adj, 0)) == g.n


def is_weak(g: Digraph) -> bool:
    undirected = [set(g.out_adj[v]) | set(g.in_adj[v]) for v in range(g.n)]
    return len(_reach(undirected, 0)) == g.n


def is_connected(g: UndirectedGraph) -> bool:
    return len(_reach(g.adj, 0)) == g.n


def bfs_from(g: Digraph | UndirectedGraph, src: int) -> list[Distance]:
    """Directed hop distance from ``src`` to every vertex."""
    _check_vertex(src, g.n)
    adj = g.adj if isinstance(g, UndirectedGraph) else g.out_adj
    row: list[Distance] = [INF] * g.n
    row[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if row[w] == INF:
                row[w] = row[u] + 1
                queue.append(w)
    return row


def all_pairs(g: Digraph | UndirectedGraph) -> DistanceMatrix:
    """All-pairs hop distances (directed for Digraph, ordinary for UndirectedGraph).

    Runs one BFS per source through the active kernel backend; the result
    is memoised on the graph.
    """
    if g._apsp is None:
        adj = g.adj if isinstance(g, UndirectedGraph) else g.out_adj
        ptr, idx = _csr(adj)
        g._apsp = DistanceMatrix._from_flat(g.n, kernels.all_pairs_bfs(g.n, ptr, idx))
    return g._apsp


def graph_distance_matrix(g: UndirectedGraph) -> DistanceMatrix:
    return all_pairs(g)
