"""Blue-red graphs, the functional g_{r,t}, symmetrization and bound reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .constructions import (
    TooFewSupportSets,
    balanced_partition,
    construction2_size,
    elementary_symmetric,
    gen_Q,
    gen_turan_graph,
)
from .embed import contains
from .hypergraph import HypergraphError, Pair, ParseError, PatternGraph, pair
from .patterns import complete

NONE, BLUE, RED = 0, 1, 2


class InputNotKkFree(ValueError):
    pass


class BadParams(ValueError):
    pass


@dataclass(frozen=True)
class BlueRedGraph:
    n: int
    blue: frozenset[Pair] = frozenset()
    red: frozenset[Pair] = frozenset()

    def __post_init__(self):
        blue = frozenset(pair(*e) for e in self.blue)
        red = frozenset(pair(*e) for e in self.red)
        object.__setattr__(self, "blue", blue)
        object.__setattr__(self, "red", red)
        if blue & red:
            raise HypergraphError(f"edges coloured both blue and red: {sorted(blue & red)}")
        for u, v in blue | red:
            if u == v or u < 0 or v >= self.n:
                raise HypergraphError(f"bad edge {(u, v)} for n={self.n}")

    @property
    def graph(self) -> PatternGraph:
        return PatternGraph(self.n, tuple(self.blue | self.red))

    @property
    def blue_graph(self) -> PatternGraph:
        return PatternGraph(self.n, tuple(self.blue))

    @property
    def red_graph(self) -> PatternGraph:
        return PatternGraph(self.n, tuple(self.red))

    @classmethod
    def monochromatic(cls, g: PatternGraph, color: str) -> "BlueRedGraph":
        if color == "blue":
            return cls(g.n, frozenset(g.edges), frozenset())
        return cls(g.n, frozenset(), frozenset(g.edges))

    def to_dict(self) -> dict:
        return {"n": self.n, "blue": [list(e) for e in sorted(self.blue)],
                "red": [list(e) for e in sorted(self.red)]}

    @classmethod
    def from_dict(cls, data) -> "BlueRedGraph":
        try:
            n = data["n"]
            blue = [tuple(e) for e in data.get("blue", [])]
            red = [tuple(e) for e in data.get("red", [])]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"blue-red graph: {exc}") from None
        if any(len(e) != 2 for e in blue + red):
            raise ParseError("blue-red graph: every edge needs two endpoints")
        try:
            return cls(n, frozenset(blue), frozenset(red))
        except HypergraphError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str) -> "BlueRedGraph":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _count_in(adj: list[int], mask: int, k: int) -> int:
    if k == 0:
        return 1
    if k == 1:
        return mask.bit_count()
    total = 0
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        total += _count_in(adj, adj[v] & mask, k - 1)
    return total


def _cliques_from_adj(adj: list[int], r: int) -> int:
    return _count_in(adj, (1 << len(adj)) - 1, r)


def count_cliques(g: PatternGraph, r: int) -> int:
    """Number of r-vertex cliques of ``g``."""
    if r < 1:
        raise ValueError("r must be positive")
    return _cliques_from_adj(g.adjacency, r)


def g_value(g: BlueRedGraph, r: int, t: int) -> int:
    return (count_cliques(g.blue_graph, r) + t * len(g.red)
            + (t - 1) * (comb(g.n, 2) - len(g.blue) - len(g.red)))


def symmetrization_bound(n: int, r: int, t: int, k: int) -> int:
    """Upper bound on g_{r,t} over K_k-free blue-red graphs (attained by Turan graphs)."""
    sizes = balanced_partition(n, min(k - 1, n)).sizes
    ex_k = elementary_symmetric(sizes, 2)
    ex_rk = elementary_symmetric(sizes, r)
    return (t - 1) * comb(n, 2) + max(ex_rk - (t - 1) * ex_k, ex_k)


# -- symmetrization -------------------------------------------------------------


class _Colouring:
    """Mutable colour matrix with blue adjacency bitmasks."""

    def __init__(self, g: BlueRedGraph, r: int, t: int):
        self.n, self.r, self.t = g.n, r, t
        self.col = [[NONE] * g.n for _ in range(g.n)]
        self.blue = [0] * g.n
        for u, v in g.blue:
            self.set(u, v, BLUE)
        for u, v in g.red:
            self.set(u, v, RED)

    def set(self, u: int, v: int, c: int) -> None:
        self.col[u][v] = self.col[v][u] = c
        if c == BLUE:
            self.blue[u] |= 1 << v
            self.blue[v] |= 1 << u
        else:
            self.blue[u] &= ~(1 << v)
            self.blue[v] &= ~(1 << u)

    def adjacent(self, u: int, v: int) -> bool:
        return self.col[u][v] != NONE

    def d_star(self, v: int) -> int:
        """Blue r-clique degree + t * red degree - (t - 1) * degree."""
        row = self.col[v]
        red = sum(1 for c in row if c == RED)
        deg = sum(1 for c in row if c != NONE)
        cliques = _count_in(self.blue, self.blue[v], self.r - 1)
        return cliques + self.t * red - (self.t - 1) * deg

    def g(self) -> int:
        blue = red = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                c = self.col[u][v]
                blue += c == BLUE
                red += c == RED
        return (_cliques_from_adj(self.blue, self.r) + self.t * red
                + (self.t - 1) * (comb(self.n, 2) - blue - red))

    def twins(self, u: int, v: int) -> bool:
        return all(self.col[u][w] == self.col[v][w] for w in range(self.n) if w not in (u, v))

    def clone(self, u: int, v: int) -> None:
        """Symmetrize u to v (u, v non-adjacent)."""
        for w in range(self.n):
            if w != u:
                self.set(u, w, NONE)
        for w in range(self.n):
            if w not in (u, v) and self.col[v][w] != NONE:
                self.set(u, w, self.col[v][w])

    def freeze(self) -> BlueRedGraph:
        blue, red = [], []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.col[u][v] == BLUE:
                    blue.append((u, v))
                elif self.col[u][v] == RED:
                    red.append((u, v))
        return BlueRedGraph(self.n, frozenset(blue), frozenset(red))


@dataclass
class SymmetrizationResult:
    graph: BlueRedGraph
    parts: list[list[int]]
    steps: list[dict] = field(default_factory=list)
    g_initial: int = 0

    @property
    def g_final(self) -> int:
        return self.steps[-1]["g_after"] if self.steps else self.g_initial

    def to_dict(self) -> dict:
        return {"g_initial": self.g_initial, "g_final": self.g_final,
                "parts": self.parts, "steps": self.steps, "graph": self.graph.to_dict()}


class _Run:
    def __init__(self, g: BlueRedGraph, r: int, t: int, max_steps: int):
        self.st = _Colouring(g, r, t)
        self.r, self.t = r, t
        self.steps: list[dict] = []
        self.g = self.st.g()
        self.max_steps = max_steps

    def log(self, kind: str, **detail) -> None:
        after = self.st.g()
        if after < self.g:
            raise AssertionError(f"step {kind} {detail} decreased g from {self.g} to {after}")
        if "predicted_gain" in detail and after - self.g != detail["predicted_gain"]:
            raise AssertionError(f"step {kind} {detail}: g changed by {after - self.g}")
        self.steps.append({"step": len(self.steps), "kind": kind, **detail,
                           "g_before": self.g, "g_after": after})
        self.g = after
        if len(self.steps) > self.max_steps:
            raise RuntimeError("symmetrization did not terminate within the step limit")

    # phase 1: vertex symmetrization into independent parts
    def vertex_phase(self) -> list[list[int]]:
        st = self.st
        remaining = list(range(st.n))
        parts = []
        while remaining:
            center = max(remaining, key=lambda v: (st.d_star(v), -v))
            part = [center]
            while True:
                outside = [u for u in remaining if u not in part and not st.adjacent(u, center)]
                if not outside:
                    break
                dc = st.d_star(center)
                scores = {u: st.d_star(u) for u in outside}
                best = max(outside, key=lambda u: (scores[u], -u))
                if scores[best] > dc:
                    center, part = best, [best]
                    continue
                u = outside[0]
                part.append(u)
                if st.twins(u, center):
                    continue
                st.clone(u, center)
                self.log("vertex", moved=u, to=center, d_moved=scores[u], d_target=dc,
                         predicted_gain=dc - scores[u])
            part.sort()
            parts.append(part)
            remaining = [v for v in remaining if v not in part]
        return sorted(parts)

    def part_colour(self, a: list[int], b: list[int]) -> int:
        return self.st.col[a[0]][b[0]]

    def move_part(self, b: list[int], a: list[int], parts: list[list[int]]) -> None:
        """Give part b the colours of part a towards every other part."""
        for c in parts:
            if c is a or c is b:
                continue
            colour = self.part_colour(a, c)
            for u in b:
                for w in c:
                    self.st.set(u, w, colour)

    def part_potential(self, p: list[int]) -> int:
        """d*(v) + |P| for v in part P.

        Giving part B the colours of a red-joined part A changes g by exactly
        |B| * (potential(A) - potential(B)).
        """
        return self.st.d_star(p[0]) + len(p)

    # phase 2: part symmetrization along red connections
    def part_phase(self, parts: list[list[int]]) -> list[list[list[int]]]:
        done: list[list[int]] = []
        classes = []

        def synced(b, a):
            return all(self.part_colour(b, c) == self.part_colour(a, c)
                       for c in parts if c is not a and c is not b)

        while len(done) < len(parts):
            open_parts = [p for p in parts if not any(p is q for q in done)]
            active = max(open_parts, key=lambda p: (self.part_potential(p), -p[0]))
            while True:
                reds = [p for p in open_parts if p is not active and self.part_colour(active, p) == RED]
                pending = [p for p in reds if not synced(p, active)]
                if not pending:
                    break
                pa = self.part_potential(active)
                higher = [p for p in pending if self.part_potential(p) > pa]
                if higher:
                    active = max(higher, key=lambda p: (self.part_potential(p), -p[0]))
                    continue
                b = pending[0]
                pb = self.part_potential(b)
                self.move_part(b, active, parts)
                self.log("part", moved=b, to=active, potential_moved=pb, potential_target=pa,
                         predicted_gain=len(b) * (pa - pb))
            cls = [active] + reds
            classes.append(sorted(cls))
            done.extend(cls)
        return classes

    # phase 3: recolouring that strictly raises g
    def recolour(self, parts, classes) -> bool:
        st, r, t = self.st, self.r, self.t
        for cls in classes:
            if len(cls) < 2:
                continue
            a, b = cls[0], cls[1]
            sizes = [sum(len(p) for p in other) for other in classes if other is not cls]
            x = elementary_symmetric(sizes, r - 2)
            y = elementary_symmetric(sizes, r - 1)
            z = sum(sizes)
            gain_blue = len(a) * len(b) * (x - t)
            gain_red = len(a) * (t * z - y)
            if max(gain_blue, gain_red) <= 0:
                continue
            if gain_blue >= gain_red:
                for u in a:
                    for w in b:
                        st.set(u, w, BLUE)
                self.log("recolour-blue", part=a, other=b, x=x, y=y, z=z, predicted_gain=gain_blue)
            else:
                for u in a:
                    for w in range(st.n):
                        if st.col[u][w] == BLUE:
                            st.set(u, w, RED)
                self.log("recolour-red", part=a, x=x, y=y, z=z, predicted_gain=gain_red)
            return True
        return False

    def monochrome_fallback(self) -> bool:
        """Recolour everything one colour when that does not lower g (degenerate r=2)."""
        st = self.st
        edges = [(u, v) for u in range(st.n) for v in range(u + 1, st.n) if st.col[u][v] != NONE]
        colours = {st.col[u][v] for u, v in edges}
        if len(colours) < 2:
            return False
        best = None
        for colour in (BLUE, RED):
            saved = [st.col[u][v] for u, v in edges]
            for u, v in edges:
                st.set(u, v, colour)
            value = st.g()
            for (u, v), c in zip(edges, saved):
                st.set(u, v, c)
            if value >= self.g and (best is None or value > best[0]):
                best = (value, colour)
        if best is None:
            return False
        for u, v in edges:
            st.set(u, v, best[1])
        self.log("monochrome", colour="blue" if best[1] == BLUE else "red")
        return True

    # phase 4: balancing part sizes of the monochromatic multipartite graph
    def balance(self, parts: list[list[int]], k: int) -> list[list[int]]:
        st = self.st
        parts = [list(p) for p in parts]

        def colour_now():
            for u in range(st.n):
                for v in range(st.n):
                    if st.col[u][v] != NONE:
                        return st.col[u][v]
            return None

        def place(v, target, colour):
            for w in range(st.n):
                if w != v:
                    st.set(v, w, NONE if w in target else colour)

        while True:
            colour = colour_now()
            options = []
            big = max(parts, key=len)
            if len(big) >= 2:
                v = big[-1]
                for dest in parts:
                    if dest is not big and len(big) >= len(dest) + 2:
                        options.append((v, big, dest))
                if len(parts) < k - 1:
                    options.append((v, big, None))
            improved = False
            for v, src, dest in options:
                colours = [colour] if colour is not None else [RED, BLUE]
                for c in colours:
                    saved = list(st.col[v])
                    target = dest if dest is not None else []
                    place(v, target, c)
                    if st.g() > self.g:
                        src.remove(v)
                        if dest is None:
                            parts.append([v])
                        else:
                            dest.append(v)
                            dest.sort()
                        self.log("balance", moved=v, new_part=dest is None)
                        improved = True
                        break
                    for w in range(st.n):
                        if w != v:
                            st.set(v, w, saved[w])
                if improved:
                    break
            if not improved:
                return sorted(sorted(p) for p in parts if p)


def symmetrize(g: BlueRedGraph, k: int, r: int, t: int, max_steps: int = 100_000) -> SymmetrizationResult:
    """Zykov-style symmetrization of a K_k-free blue-red graph.

    Vertex symmetrization toward a maximum-d* vertex produces a complete
    multipartite graph with one colour per pair of parts; part symmetrization
    along red connections makes "joined by red" an equivalence relation;
    strictly improving recolourings (computed from the x, y, z sums) then
    remove mixed colourings, and a last pass balances part sizes.  No step
    lowers g_{r,t}; every step is logged with the value before and after.
    """
    if contains(complete(k), g.graph):
        raise InputNotKkFree(f"input contains K_{k}")
    run = _Run(g, r, t, max_steps)
    g0 = run.g
    parts = run.vertex_phase()
    while True:
        classes = run.part_phase(parts)
        if run.recolour(parts, classes):
            continue
        if run.monochrome_fallback():
            continue
        break
    parts = run.balance(parts, k)
    final = run.st.freeze()
    if contains(complete(k), final.graph):
        raise AssertionError("symmetrization produced a K_k")
    return SymmetrizationResult(final, parts, run.steps, g0)


def is_complete_multipartite(g: PatternGraph) -> list[list[int]] | None:
    """Parts of ``g`` if it is complete multipartite (non-adjacency transitive)."""
    parts: list[list[int]] = []
    for v in range(g.n):
        for p in parts:
            if not g.has_edge(v, p[0]):
                p.append(v)
                break
        else:
            parts.append([v])
    for i, p in enumerate(parts):
        if any(g.has_edge(u, v) for u, v in combinations(p, 2)):
            return None
        for q in parts[i + 1:]:
            if any(not g.has_edge(u, v) for u in p for v in q):
                return None
    return parts


# -- closed-form bounds ------------------------------------------------------------


@dataclass
class BoundReport:
    n: int
    r: int
    t: int
    pattern: str
    lower: dict[str, int] = field(default_factory=dict)
    upper: dict[str, int] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return bool(self.lower and self.upper) and max(self.lower.values()) == min(self.upper.values())

    def consistent(self) -> bool:
        if not self.lower or not self.upper:
            return True
        return max(self.lower.values()) <= min(self.upper.values())

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "t": self.t, "pattern": self.pattern,
                "lower": self.lower, "upper": self.upper, "notes": self.notes, "exact": self.exact}


def theorem_bounds(n: int, r: int, t: int, pattern: tuple[str, int]) -> BoundReport:
    """Evaluate the closed-form bounds for cliques, paths or cycles.

    ``pattern`` is ``("K", k)``, ``("P", k)`` or ``("C", k)``; paths and
    cycles are indexed by vertex count.
    """
    kind, k = pattern
    if r < 2 or t < 1 or n < 1:
        raise BadParams("need r >= 2, t >= 1, n >= 1")
    report = BoundReport(n, r, t, f"{kind}{k}")
    pairs = comb(n, 2)
    if kind == "K":
        if not 2 <= r < k <= n + 1:
            raise BadParams("clique bounds need 2 <= r < k <= n + 1")
        turan = gen_turan_graph(n, k - 1)
        ex_k = len(turan.edges)
        ex_rk = count_cliques(turan, r)
        report.upper["symmetrization"] = (t - 1) * pairs + max(ex_rk - (t - 1) * ex_k, ex_k)
        report.upper["greedy-certificate"] = ex_rk + ex_k + (t - 1) * pairs
        report.lower["cliques-of-turan-graph"] = ex_rk
        try:
            report.lower["Q"] = len(gen_Q(n, k - 1, r, t))
        except TooFewSupportSets as exc:
            report.notes["Q"] = f"not defined at this n: {exc}"
        report.notes["ex(n,K_k)"] = str(ex_k)
        report.notes[f"ex(n,K_{r},K_k)"] = str(ex_rk)
    elif kind in ("P", "C"):
        if t < 2 or r < 3:
            raise BadParams("path/cycle bounds need t >= 2 and r >= 3")
        need = 2 * (t - 1) * (r - 2) + 2
        covered = k if kind == "P" else k + 1
        if covered >= need and n > (t - 1) * (r - 2) + 1:
            report.lower["construction2"] = construction2_size(n, r, t)
        else:
            report.notes["construction2"] = f"needs {'k' if kind == 'P' else 'k+1'} >= {need}"
        report.upper["leading-term"] = (t - 1) * pairs
        report.notes["leading-term"] = (
            f"(t-1)C(n,2) plus ex_r(n, Berge {kind}{k}), which is "
            + ("O(n)" if kind == "P" else f"O(n^(1+1/{k // 2}))"))
        if kind == "P" and k >= 2 and k - 1 >= r:
            # Erdos-Gallai and Luo: ex(n, P_k) <= (k-2)n/2, ex(n, K_r, P_k) <= n/(k-1) C(k-1, r)
            report.upper["greedy-certificate"] = ((k - 2) * n // 2 + n * comb(k - 1, r) // (k - 1)
                                          + (t - 1) * pairs)
    else:
        raise BadParams(f"unknown pattern kind {kind!r}")
    return report
