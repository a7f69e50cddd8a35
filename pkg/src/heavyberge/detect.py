"""Detection and extraction of t-heavy and t-wise Berge copies of a graph.

A copy is witnessed by an injection ``i`` of the pattern vertices into the
host and, for every pattern edge (in canonical edge order), a list ``h`` of
``t`` hyperedge indices covering the image of that edge.  In ``berge`` mode
all ``t * |E(F)|`` indices must be distinct; in ``heavy`` mode they may
overlap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Literal

from .embed import contains, embeddings
from .hypergraph import (
    Hypergraph,
    Pair,
    PatternGraph,
    heavy_graph,
    pair,
    validate,
    validate_graph,
)
from .matching import hopcroft_karp, saturating_matching

Mode = Literal["heavy", "berge"]
MODES: tuple[Mode, ...] = ("heavy", "berge")


class ExtractionError(ValueError):
    """Precondition of an extraction procedure does not hold."""


class NoHeavyCopy(ExtractionError):
    pass


class ThresholdTooSmall(ExtractionError):
    pass


@dataclass(frozen=True)
class BergeWitness:
    i: tuple[int, ...]
    h: tuple[tuple[int, ...], ...]
    mode: Mode = "berge"
    t: int = 1

    def essence(self, f: PatternGraph) -> PatternGraph:
        """Image of the pattern inside the host vertex set."""
        n = max(self.i, default=-1) + 1
        return PatternGraph(n, tuple(pair(self.i[x], self.i[y]) for x, y in f.edges))

    def to_dict(self) -> dict:
        return {"i": list(self.i), "h": [list(s) for s in self.h], "mode": self.mode, "t": self.t}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "BergeWitness":
        return cls(tuple(data["i"]), tuple(tuple(s) for s in data["h"]), data["mode"], data["t"])


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be 'heavy' or 'berge', got {mode!r}")


def _berge_assignment(h: Hypergraph, f: PatternGraph, image: tuple[int, ...], t: int):
    """Distinct covering hyperedges for every image edge, or ``None``."""
    cover = h.covering
    graph = {}
    for ei, (x, y) in enumerate(f.edges):
        options = cover.get(pair(image[x], image[y]), [])
        for c in range(t):
            graph[(ei, c)] = options
    match = saturating_matching(graph)
    if match is None:
        return None
    return tuple(tuple(sorted(match[(ei, c)] for c in range(t))) for ei in range(len(f.edges)))


def find_copy(h: Hypergraph, f: PatternGraph, t: int, mode: Mode) -> BergeWitness | None:
    """First witness in canonical enumeration order, or ``None`` if ``h`` is free."""
    validate(h)
    validate_graph(f)
    _check_mode(mode)
    if t < 1:
        raise ValueError("t must be positive")
    if f.n > h.n:
        return None
    if mode == "berge" and len(h) < t * len(f.edges):
        return None
    cover = h.covering
    host = heavy_graph(h, t)
    tried: set[frozenset[Pair]] = set()
    for image in embeddings(f, host.adjacency):
        if mode == "heavy":
            hs = tuple(tuple(cover[pair(image[x], image[y])][:t]) for x, y in f.edges)
            return BergeWitness(image, hs, "heavy", t)
        # feasibility only depends on the set of image edges
        key = frozenset(pair(image[x], image[y]) for x, y in f.edges)
        if key in tried:
            continue
        tried.add(key)
        hs = _berge_assignment(h, f, image, t)
        if hs is not None:
            return BergeWitness(image, hs, "berge", t)
    return None


def is_free(h: Hypergraph, f: PatternGraph, t: int, mode: Mode) -> bool:
    return find_copy(h, f, t, mode) is None


def verify_witness(h: Hypergraph, f: PatternGraph, t: int, mode: Mode, w: BergeWitness) -> bool:
    """Check a witness against the definitions, independently of the search."""
    if len(w.i) != f.n or len(set(w.i)) != f.n:
        return False
    if any(not 0 <= v < h.n for v in w.i):
        return False
    if len(w.h) != len(f.edges):
        return False
    seen: set[int] = set()
    for (x, y), chosen in zip(f.edges, w.h):
        if len(chosen) != t or len(set(chosen)) != t:
            return False
        for idx in chosen:
            if not 0 <= idx < len(h.edges):
                return False
            edge = h.edges[idx]
            if w.i[x] not in edge or w.i[y] not in edge:
                return False
        if mode == "berge":
            if seen.intersection(chosen):
                return False
            seen.update(chosen)
    return True


def extract_berge_from_heavy(h: Hypergraph, f: PatternGraph, t: int) -> BergeWitness:
    """Turn a t-heavy copy into a t'-wise Berge copy on the same essence.

    ``t' = t // min(C(r, 2), |E(F)|)``.  Each essence edge is duplicated
    ``t'`` times and matched to distinct covering hyperedges; a hyperedge
    covers at most ``min(C(r, 2), |E(F)|)`` essence edges, so Hall's
    condition guarantees a saturating matching.
    """
    m = min(comb(h.r, 2), len(f.edges))
    t_low = t // m if m else 0
    if t_low < 1:
        raise ThresholdTooSmall(f"t={t} is below min(C(r,2), |E(F)|)={m}; derived level is 0")
    heavy = find_copy(h, f, t, "heavy")
    if heavy is None:
        raise NoHeavyCopy(f"no {t}-heavy copy of the pattern")
    cover = h.covering
    graph = {}
    for ei, (x, y) in enumerate(f.edges):
        options = cover[pair(heavy.i[x], heavy.i[y])]
        for c in range(t_low):
            graph[(ei, c)] = options
    match = hopcroft_karp(graph)
    if len(match) != len(graph):
        raise AssertionError("Hall condition violated: no saturating matching")
    hs = tuple(tuple(sorted(match[(ei, c)] for c in range(t_low))) for ei in range(len(f.edges)))
    return BergeWitness(heavy.i, hs, "berge", t_low)


def expansion3_with_essence(h: Hypergraph, f: PatternGraph, t: int) -> tuple[BergeWitness, list[tuple[int, ...]]]:
    """Like :func:`extract_expansion3` but also return the heavy witness used.

    The selected hyperedges are listed in pattern edge order.
    """
    if h.r != 3:
        raise ExtractionError("expansion extraction needs a 3-uniform hypergraph")
    bound = f.n + len(f.edges) - 2
    if t < bound:
        raise ThresholdTooSmall(f"t={t} is below |V(F)|+|E(F)|-2={bound}")
    heavy = find_copy(h, f, t, "heavy")
    if heavy is None:
        raise NoHeavyCopy(f"no {t}-heavy copy of the pattern")
    blocked = set(heavy.i)
    cover = h.covering
    chosen = []
    for x, y in f.edges:
        a, b = heavy.i[x], heavy.i[y]
        for idx in cover[pair(a, b)]:
            (apex,) = set(h.edges[idx]) - {a, b}
            if apex not in blocked:
                blocked.add(apex)
                chosen.append(h.edges[idx])
                break
        else:
            raise AssertionError("no hyperedge with a free apex; counting bound violated")
    return heavy, chosen


def extract_expansion3(h: Hypergraph, f: PatternGraph, t: int) -> Hypergraph:
    """Hyperedges of ``h`` forming a copy of the 3-uniform expansion of ``f``."""
    _, chosen = expansion3_with_essence(h, f, t)
    return Hypergraph(h.n, 3, tuple(chosen))


@dataclass(frozen=True)
class Representatives:
    pairs: tuple[Pair, ...]
    assignment: dict[Pair, tuple[int, ...]]
    rest: Hypergraph

    def __iter__(self):
        return iter((self.pairs, self.assignment, self.rest))


def strip_representatives(h: Hypergraph) -> Representatives:
    """Maximum system of distinct representing pairs, and the leftover hyperedges.

    Returns ``(S, g, H')`` where ``g`` injects the pair set ``S`` into the
    hyperedges with ``e`` contained in ``g(e)``; ``S`` is a maximum matching in
    the pair/hyperedge incidence graph and ``H'`` is ``h`` minus ``g(S)``.
    """
    graph = {}
    for e in h.edges:
        graph[e] = [pair(e[a], e[b]) for a in range(len(e)) for b in range(a + 1, len(e))]
    match = hopcroft_karp(graph)
    assignment = {p: e for e, p in match.items()}
    rest = Hypergraph(h.n, h.r, tuple(e for e in h.edges if e not in match))
    return Representatives(tuple(sorted(assignment)), assignment, rest)


@dataclass(frozen=True)
class Certificate:
    """Output of the pick-or-mark greedy.

    ``graphs[i]`` holds the pairs picked exactly ``i`` times (``i = 0..t``);
    ``marked`` lists the hyperedges whose pairs were all used up.
    """

    t: int
    graphs: tuple[PatternGraph, ...]
    marked: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def x(self) -> int:
        return len(self.marked)

    def weighted_total(self) -> int:
        return self.x + sum(i * len(g.edges) for i, g in enumerate(self.graphs))


def greedy_certificate(h: Hypergraph, t: int) -> Certificate:
    if t < 1:
        raise ValueError("t must be positive")
    picked: dict[Pair, int] = {}
    marked = []
    for e in h.edges:
        for a in range(len(e)):
            choice = next((pair(e[a], e[b]) for b in range(a + 1, len(e))
                           if picked.get(pair(e[a], e[b]), 0) < t), None)
            if choice is not None:
                break
        if choice is None:
            marked.append(e)
        else:
            picked[choice] = picked.get(choice, 0) + 1
    layers: list[list[Pair]] = [[] for _ in range(t + 1)]
    for u in range(h.n):
        for v in range(u + 1, h.n):
            layers[picked.get((u, v), 0)].append((u, v))
    graphs = tuple(PatternGraph(h.n, tuple(ps)) for ps in layers)
    return Certificate(t, graphs, tuple(marked))


def certificate_consistent(cert: Certificate, h: Hypergraph, f: PatternGraph | None = None) -> bool:
    """Counting identity, marked cliques inside the top layer, and (optionally)
    freeness of the top layer from ``f``."""
    if cert.weighted_total() != len(h):
        return False
    top = cert.graphs[cert.t]
    for e in cert.marked:
        if any(not top.has_edge(e[a], e[b]) for a in range(len(e)) for b in range(a + 1, len(e))):
            return False
    if f is not None and contains(f, top):
        return False
    return True
