"""Plain-text edge-list format.

::

    digraph 6          # header: family (digraph | graph) and vertex count
    0 1                # one edge per line, 0-based, single space
    #@label 0 u1       # optional vertex label; an ordinary comment to other readers

``#`` starts a comment; blank lines are ignored. Bidirectional edges are
written as two lines.
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import LoopEdge, ParseError, VertexOutOfRange
from .graph import Digraph, UndirectedGraph

FAMILIES = {"digraph": "directed", "graph": "undirected"}
_HEADERS = {v: k for k, v in FAMILIES.items()}
_INT = re.compile(r"0|[1-9][0-9]*")
_LABEL = re.compile(r"#@label (0|[1-9][0-9]*) (\S+)\s*$")


@dataclass
class GraphDocument:
    family: str  # "directed" | "undirected"
    n: int
    edges: list[tuple[int, int]]
    labels: Optional[dict[int, str]] = field(default=None)

    def to_graph(self) -> Union[Digraph, UndirectedGraph]:
        if self.family == "directed":
            return Digraph(self.n, self.edges)
        return UndirectedGraph(self.n, self.edges)

    @classmethod
    def from_graph(cls, g, labels=None) -> "GraphDocument":
        family = "directed" if isinstance(g, Digraph) else "undirected"
        return cls(family, g.n, list(g.edges()), dict(labels) if labels else None)

    def canonical_edges(self) -> list[tuple[int, int]]:
        if self.family == "undirected":
            return sorted({(min(u, v), max(u, v)) for u, v in self.edges})
        return sorted(set(self.edges))

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def digest(self) -> str:
        return hashlib.sha256(serialize(self).encode()).hexdigest()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphDocument):
            return NotImplemented
        return (
            self.family == other.family
            and self.n == other.n
            and self.canonical_edges() == other.canonical_edges()
            and (self.labels or {}) == (other.labels or {})
        )


def parse_edge_list(text: str) -> GraphDocument:
    family = None
    n = 0
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    label_lines: list[tuple[int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        m = _LABEL.match(raw.strip())
        if m:
            label_lines.append((lineno, int(m.group(1))))
            labels[int(m.group(1))] = m.group(2)
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split(" ")
        if family is None:
            if len(tokens) != 2 or tokens[0] not in FAMILIES or not _INT.fullmatch(tokens[1]):
                raise ParseError(lineno, "expected header '<digraph|graph> <n>'")
            family = FAMILIES[tokens[0]]
            n = int(tokens[1])
            if n < 1:
                raise ParseError(lineno, "vertex count must be at least 1")
            continue
        if len(tokens) != 2 or not all(_INT.fullmatch(t) for t in tokens):
            raise ParseError(lineno, "expected '<u> <v>' with 0-based integers")
        u, v = int(tokens[0]), int(tokens[1])
        for x in (u, v):
            if x >= n:
                raise VertexOutOfRange(x, n, line=lineno)
        if u == v:
            raise LoopEdge(u, line=lineno)
        edges.append((u, v))

    if family is None:
        raise ParseError(1, "missing header")
    for lineno, v in label_lines:
        if v >= n:
            raise VertexOutOfRange(v, n, line=lineno)
    return GraphDocument(family, n, edges, labels or None)


def serialize(doc: GraphDocument) -> str:
    """Canonical text: header, labels by vertex, edges sorted lexicographically."""
    lines = [f"{_HEADERS[doc.family]} {doc.n}"]
    for v in sorted(doc.labels or {}):
        lines.append(f"#@label {v} {doc.labels[v]}")
    lines.extend(f"{u} {v}" for u, v in doc.canonical_edges())
    return "\n".join(lines) + "\n"


def read_document(path) -> GraphDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def to_dot(doc: GraphDocument) -> str:
    """One-way Graphviz export for quick visual inspection."""
    directed = doc.family == "directed"
    arrow = "->" if directed else "--"
    lines = [("digraph" if directed else "graph") + " G {"]
    for v in range(doc.n):
        lines.append(f'  {v} [label="{doc.label(v)}"];')
    lines.extend(f"  {u} {arrow} {v};" for u, v in doc.canonical_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
