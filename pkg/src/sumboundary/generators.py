"""Deterministic graph generators for fixtures and fuzzing.

Every random model takes an explicit seed and draws from its own
``random.Random`` so results never depend on global state.
"""
from __future__ import annotations

import random

from .edgelist import GraphDocument
from .errors import GenerationFailed, GraphError
from .graph import Digraph, UndirectedGraph, is_connected, is_strong

MAX_TRIES = 1000


def _check(n, p=None):
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    if p is not None and not 0 < p <= 1:
        raise GraphError(f"p must lie in (0, 1], got {p}")


def dicycle(n: int) -> GraphDocument:
    _check(n)
    edges = [(i, (i + 1) % n) for i in range(n)] if n > 1 else []
    return GraphDocument("directed", n, edges)


def bidirected_path(n: int) -> GraphDocument:
    _check(n)
    edges = [e for i in range(n - 1) for e in ((i, i + 1), (i + 1, i))]
    return GraphDocument("directed", n, edges)


def _gnp_directed(n, p, rng):
    return [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]


def _gnp_undirected(n, p, rng):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def random_strong(n: int, p: float, seed: int, max_tries: int = MAX_TRIES) -> GraphDocument:
    """Edges drawn independently with probability p, redrawn until strong."""
    _check(n, p)
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = _gnp_directed(n, p, rng)
        if is_strong(Digraph(n, edges)):
            return GraphDocument("directed", n, edges)
    raise GenerationFailed(f"no strong digraph with n={n}, p={p} after {max_tries} draws")


def random_digraph(n: int, p: float, seed: int) -> GraphDocument:
    _check(n, p)
    return GraphDocument("directed", n, _gnp_directed(n, p, random.Random(seed)))


def tournament(n: int, seed: int) -> GraphDocument:
    _check(n)
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return GraphDocument("directed", n, edges)


def random_graph(n: int, p: float, seed: int) -> GraphDocument:
    _check(n, p)
    return GraphDocument("undirected", n, _gnp_undirected(n, p, random.Random(seed)))


def random_connected(n: int, p: float, seed: int, max_tries: int = MAX_TRIES) -> GraphDocument:
    _check(n, p)
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = _gnp_undirected(n, p, rng)
        if is_connected(UndirectedGraph(n, edges)):
            return GraphDocument("undirected", n, edges)
    raise GenerationFailed(f"no connected graph with n={n}, p={p} after {max_tries} draws")


MODELS = {
    "dicycle": dicycle,
    "bidirected_path": bidirected_path,
    "random_strong": random_strong,
    "random_digraph": random_digraph,
    "tournament": tournament,
    "random_graph": random_graph,
    "random_connected": random_connected,
}


def generate(model: str, *args, **kwargs) -> GraphDocument:
    try:
        fn = MODELS[model]
    except KeyError:
        raise GraphError(f"unknown model {model!r}; choose from {sorted(MODELS)}") from None
    return fn(*args, **kwargs)
