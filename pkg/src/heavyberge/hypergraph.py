"""Uniform hypergraphs, simple graphs and pair multiplicities.

Vertices are the integers ``0..n-1``.  Edges are stored as sorted tuples and
the edge sequence itself is kept in lexicographic order, so two values with
the same edge set compare equal and serialize to the same bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Pair = tuple[int, int]


class HypergraphError(ValueError):
    """Base class for invalid hypergraph or graph data."""


class DuplicateEdge(HypergraphError):
    def __init__(self, edge):
        super().__init__(f"duplicate edge {list(edge)}")
        self.edge = tuple(edge)


class WrongArity(HypergraphError):
    def __init__(self, edge, r):
        super().__init__(f"edge {list(edge)} does not have {r} distinct vertices")
        self.edge = tuple(edge)


class VertexOutOfRange(HypergraphError):
    def __init__(self, edge, n):
        super().__init__(f"edge {list(edge)} has a vertex outside 0..{n - 1}")
        self.edge = tuple(edge)


class ParseError(ValueError):
    """Raised when JSON input does not describe a hypergraph or graph."""


def pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _canonical(edges: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(e)) for e in edges))


@dataclass(frozen=True)
class Hypergraph:
    """An ``r``-uniform hypergraph on ``n`` vertices.

    The constructor only canonicalizes; call :func:`validate` (or use
    :meth:`of`) to enforce the invariants.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", _canonical(self.edges))

    @classmethod
    def of(cls, n: int, r: int, edges: Iterable[Iterable[int]] = ()) -> "Hypergraph":
        h = cls(n, r, tuple(tuple(e) for e in edges))
        validate(h)
        return h

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self.edge_index

    @cached_property
    def edge_index(self) -> dict[tuple[int, ...], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def covering(self) -> dict[Pair, list[int]]:
        """Map each covered pair to the indices of hyperedges containing it."""
        cover: dict[Pair, list[int]] = {}
        for idx, e in enumerate(self.edges):
            for p in combinations(e, 2):
                cover.setdefault(p, []).append(idx)
        return cover

    def union(self, other: "Hypergraph") -> "Hypergraph":
        if (self.n, self.r) != (other.n, other.r):
            raise HypergraphError("union needs equal n and r")
        return Hypergraph(self.n, self.r, tuple(set(self.edges) | set(other.edges)))

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, tuple(tuple(e) for e in edges))


@dataclass(frozen=True)
class PatternGraph:
    """A simple graph, used for forbidden patterns and for shadow/heavy graphs."""

    n: int
    edges: tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", _canonical(self.edges))

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]] = ()) -> "PatternGraph":
        g = cls(n, tuple(tuple(e) for e in edges))
        validate_graph(g)
        return g

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> list[int]:
        """Neighbourhoods as integer bitmasks."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    @cached_property
    def edge_set(self) -> frozenset[Pair]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return pair(u, v) in self.edge_set


@dataclass(frozen=True)
class EdgeMultiplicityMap:
    """Shadow graph with multiplicities; only positive counts are stored."""

    n: int
    mult: dict[Pair, int] = field(default_factory=dict)

    def __getitem__(self, p: Iterable[int]) -> int:
        u, v = p
        return self.mult.get(pair(u, v), 0)

    def total(self) -> int:
        return sum(self.mult.values())

    def pairs_at_least(self, t: int) -> list[Pair]:
        return sorted(p for p, c in self.mult.items() if c >= t)

    def max_multiplicity(self) -> int:
        return max(self.mult.values(), default=0)


def validate(h: Hypergraph) -> None:
    """Raise a :class:`HypergraphError` subclass naming the first bad edge."""
    if h.n < 0:
        raise HypergraphError(f"negative vertex count {h.n}")
    if h.r < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {h.r}")
    prev = None
    for e in h.edges:
        if len(e) != h.r or len(set(e)) != h.r:
            raise WrongArity(e, h.r)
        if e[0] < 0 or e[-1] >= h.n:
            raise VertexOutOfRange(e, h.n)
        if e == prev:
            raise DuplicateEdge(e)
        prev = e


def validate_graph(g: PatternGraph) -> None:
    prev = None
    for e in g.edges:
        if len(e) != 2 or e[0] == e[1]:
            raise WrongArity(e, 2)
        if e[0] < 0 or e[1] >= g.n:
            raise VertexOutOfRange(e, g.n)
        if e == prev:
            raise DuplicateEdge(e)
        prev = e


def shadow_multiplicity(h: Hypergraph) -> EdgeMultiplicityMap:
    return EdgeMultiplicityMap(h.n, {p: len(ix) for p, ix in h.covering.items()})


def heavy_graph(h: Hypergraph, t: int) -> PatternGraph:
    """Graph of the pairs contained in at least ``t`` hyperedges."""
    if t < 1:
        raise ValueError("t must be positive")
    return PatternGraph(h.n, tuple(p for p, ix in h.covering.items() if len(ix) >= t))


def shadow_graph(h: Hypergraph) -> PatternGraph:
    return heavy_graph(h, 1)


# -- JSON ---------------------------------------------------------------------


def to_dict(obj: Hypergraph | PatternGraph) -> dict:
    if isinstance(obj, Hypergraph):
        return {"n": obj.n, "r": obj.r, "edges": [list(e) for e in obj.edges]}
    return {"n": obj.n, "edges": [list(e) for e in obj.edges]}


def serialize(obj: Hypergraph | PatternGraph) -> str:
    return json.dumps(to_dict(obj))


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _int_field(data: dict, key: str) -> int:
    if key not in data:
        raise ParseError(f"missing field {key!r}")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"field {key!r}: expected integer, got {value!r}")
    return value


def _edge_list(data: dict) -> list[tuple[int, ...]]:
    raw = data.get("edges")
    if not isinstance(raw, list):
        raise ParseError("field 'edges': expected a list")
    edges = []
    for i, e in enumerate(raw):
        if not isinstance(e, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in e):
            raise ParseError(f"edges[{i}]: expected a list of integers, got {e!r}")
        edges.append(tuple(e))
    return edges


def from_dict(data) -> Hypergraph | PatternGraph:
    """Build a hypergraph (``r`` present) or a graph (``r`` absent or ``graph``)."""
    if not isinstance(data, dict):
        raise ParseError("top level: expected a JSON object")
    n = _int_field(data, "n")
    edges = _edge_list(data)
    is_graph = data.get("graph") is True or "r" not in data
    r = 2 if is_graph and "r" not in data else _int_field(data, "r")
    for i, e in enumerate(edges):
        if len(e) != r:
            raise ParseError(f"edges[{i}]: expected {r} vertices, got {len(e)}")
    try:
        if is_graph:
            if r != 2:
                raise ParseError(f"field 'r': a graph must have r=2, got {r}")
            return PatternGraph.of(n, edges)
        return Hypergraph.of(n, r, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc)) from None


def parse(text: str) -> Hypergraph:
    obj = from_dict(_load(text))
    if not isinstance(obj, Hypergraph):
        raise ParseError("expected a hypergraph (field 'r' missing)")
    return obj


def parse_graph(text: str) -> PatternGraph:
    data = _load(text)
    if isinstance(data, dict) and data.get("r", 2) == 2:
        data = dict(data, graph=True)
    obj = from_dict(data)
    if isinstance(obj, Hypergraph):
        raise ParseError("expected a graph")
    return obj
