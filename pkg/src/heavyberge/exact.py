"""Exhaustive detection oracle and branch-and-bound Turan numbers at small n."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations

from .detect import MODES, Mode
from .embed import embeddings
from .hypergraph import Hypergraph, PatternGraph, to_dict, validate, validate_graph
from .matching import saturating_matching


class TooLarge(ValueError):
    pass


class BadPattern(ValueError):
    pass


MAX_PATTERN_VERTICES = 8
MAX_HOST_EDGES = 60


def brute_force_detect(h: Hypergraph, f: PatternGraph, t: int, mode: Mode) -> bool:
    """Decide containment straight from the definitions.

    Tries every injection of the pattern vertices; in ``berge`` mode it then
    enumerates every choice of ``t`` unused covering hyperedges per pattern
    edge.  No heavy-graph pruning and no matching theory is involved.
    """
    validate(h)
    validate_graph(f)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if f.n > MAX_PATTERN_VERTICES or len(h.edges) > MAX_HOST_EDGES:
        raise TooLarge(f"brute force is capped at {MAX_PATTERN_VERTICES} pattern vertices "
                       f"and {MAX_HOST_EDGES} hyperedges")
    if f.n > h.n:
        return False
    sets = [frozenset(e) for e in h.edges]

    def covering(a, b):
        return [idx for idx, s in enumerate(sets) if a in s and b in s]

    for image in permutations(range(h.n), f.n):
        covers = [covering(image[x], image[y]) for x, y in f.edges]
        if any(len(c) < t for c in covers):
            continue
        if mode == "heavy":
            return True
        if _disjoint_choice(covers, t, 0, set()):
            return True
    return False


def _disjoint_choice(covers, t, pos, used) -> bool:
    if pos == len(covers):
        return True
    free = [c for c in covers[pos] if c not in used]
    for chosen in combinations(free, t):
        used.update(chosen)
        if _disjoint_choice(covers, t, pos + 1, used):
            return True
        used.difference_update(chosen)
    return False


@dataclass
class SolveResult:
    value: int
    extremal: Hypergraph
    nodes_explored: int
    exhausted: bool

    def to_dict(self) -> dict:
        return {"value": self.value, "exhausted": self.exhausted,
                "nodes_explored": self.nodes_explored, "extremal": to_dict(self.extremal)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _edge_orbit_reps(f: PatternGraph) -> list[tuple[int, int]]:
    """One directed pattern edge per orbit of the automorphism group."""
    directed = [(x, y) for x, y in f.edges] + [(y, x) for x, y in f.edges]
    seen: set[tuple[int, int]] = set()
    reps = []
    autos = list(embeddings(f, f.adjacency))
    for x, y in directed:
        if (x, y) in seen:
            continue
        reps.append((x, y))
        for a in autos:
            seen.add((a[x], a[y]))
    return reps


class _Search:
    def __init__(self, n, r, f, t, mode, node_budget, symmetry):
        self.n, self.r, self.f, self.t, self.mode = n, r, f, t, mode
        self.budget = node_budget
        self.symmetry = symmetry
        self.sets = list(combinations(range(n), r))
        self.pair_id = {p: i for i, p in enumerate(combinations(range(n), 2))}
        self.pairs_of = [[(p, self.pair_id[p]) for p in combinations(s, 2)] for s in self.sets]
        self.mult = [0] * len(self.pair_id)
        self.cover: list[list[int]] = [[] for _ in self.pair_id]
        self.adj = [0] * n
        self.reps = _edge_orbit_reps(f)
        self.chosen: list[int] = []
        self.best: list[int] = []
        self.nodes = 0
        self.out_of_budget = False

    # -- state updates
    def push(self, s: int) -> None:
        self.chosen.append(s)
        for (a, b), pid in self.pairs_of[s]:
            self.mult[pid] += 1
            self.cover[pid].append(s)
            if self.mult[pid] == self.t:
                self.adj[a] |= 1 << b
                self.adj[b] |= 1 << a

    def pop(self) -> None:
        s = self.chosen.pop()
        for (a, b), pid in self.pairs_of[s]:
            if self.mult[pid] == self.t:
                self.adj[a] &= ~(1 << b)
                self.adj[b] &= ~(1 << a)
            self.mult[pid] -= 1
            self.cover[pid].pop()

    # -- freeness of current + {s}, given current is free
    def addable(self, s: int) -> bool:
        t = self.t
        touched = [(ab, pid) for ab, pid in self.pairs_of[s] if self.mult[pid] + 1 >= t]
        if self.mode == "heavy":
            touched = [(ab, pid) for ab, pid in touched if self.mult[pid] + 1 == t]
        if not touched:
            return True
        self.push(s)
        try:
            return not self._copy_through(touched, s)
        finally:
            self.pop()

    def _copy_through(self, touched, s) -> bool:
        f = self.f
        tried = set()
        for (a, b), _ in touched:
            for x, y in self.reps:
                for image in embeddings(f, self.adj, {x: a, y: b}):
                    if self.mode == "heavy":
                        return True
                    key = frozenset(tuple(sorted((image[u], image[v]))) for u, v in f.edges)
                    if key in tried:
                        continue
                    tried.add(key)
                    graph = {}
                    for ei, (u, v) in enumerate(f.edges):
                        p = self.pair_id[tuple(sorted((image[u], image[v])))]
                        for c in range(self.t):
                            graph[(ei, c)] = self.cover[p]
                    if saturating_matching(graph) is not None:
                        return True
        return False

    # -- branch and bound
    def run(self) -> None:
        cands = [s for s in range(len(self.sets)) if self.addable(s)]
        if self.symmetry and cands and cands[0] == 0:
            # every nonempty hypergraph is isomorphic to one containing the first r-set
            self.nodes += 1
            self.best = []
            self.push(0)
            self.expand([q for q in cands[1:] if self.addable(q)])
            self.pop()
        else:
            self.expand(cands)

    def expand(self, cands: list[int]) -> None:
        self.nodes += 1
        if len(self.chosen) > len(self.best):
            self.best = list(self.chosen)
        if self.nodes >= self.budget:
            self.out_of_budget = True
            return
        size = len(self.chosen)
        for idx, s in enumerate(cands):
            if size + len(cands) - idx <= len(self.best) or self.out_of_budget:
                return
            self.push(s)
            rest = [q for q in cands[idx + 1:] if self.addable(q)]
            self.expand(rest)
            self.pop()


def exact_turan(n: int, r: int, f: PatternGraph, t: int, mode: Mode,
                node_budget: int = 10_000_000, symmetry: bool = False) -> SolveResult:
    """Largest r-uniform hypergraph on n vertices free of t-heavy / t-wise Berge copies of f.

    Branch and bound over r-sets in lexicographic order, include-branch
    first.  Candidates that cannot be added to the current hypergraph on
    their own are dropped (containment is monotone), which gives the bound
    ``current + candidates``.  ``exhausted`` is true iff the whole tree was
    searched within ``node_budget`` nodes.
    """
    validate_graph(f)
    if not f.edges:
        raise BadPattern("the forbidden pattern must have at least one edge")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if t < 1 or r < 2 or n < r:
        raise ValueError("need t >= 1 and 2 <= r <= n")
    search = _Search(n, r, f, t, mode, node_budget, symmetry)
    search.run()
    extremal = Hypergraph(n, r, tuple(search.sets[s] for s in search.best))
    return SolveResult(len(search.best), extremal, search.nodes, not search.out_of_budget)
