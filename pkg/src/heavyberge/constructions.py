"""Generators for the extremal constructions.

Every generator is deterministic: parts are contiguous vertex intervals with
the larger parts first, and all choices are made in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .embed import contains
from .hypergraph import Hypergraph, PatternGraph, pair, validate_graph


class BadParams(ValueError):
    pass


class TooFewSupportSets(BadParams):
    pass


class SeedNotRegular(BadParams):
    pass


class SeedMismatch(BadParams):
    pass


class BadResidue(BadParams):
    pass


class PreconditionViolated(BadParams):
    pass


def elementary_symmetric(values, k: int) -> int:
    """Sum over all k-subsets of the product of their entries."""
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


@dataclass(frozen=True)
class PartitionSpec:
    parts: tuple[range, ...]
    balanced: bool = True

    @property
    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def part_of(self) -> list[int]:
        owner = [0] * sum(self.sizes)
        for i, p in enumerate(self.parts):
            for v in p:
                owner[v] = i
        return owner


def balanced_partition(n: int, p: int) -> PartitionSpec:
    if not 1 <= p <= n:
        raise BadParams(f"need 1 <= p <= n, got p={p}, n={n}")
    q, extra = divmod(n, p)
    parts, start = [], 0
    for i in range(p):
        size = q + (1 if i < extra else 0)
        parts.append(range(start, start + size))
        start += size
    return PartitionSpec(tuple(parts), True)


def gen_turan_graph(n: int, p: int) -> PatternGraph:
    """Complete balanced p-partite graph on n vertices."""
    owner = balanced_partition(n, p).part_of()
    return PatternGraph(n, tuple((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]))


def turan_graph_edges(n: int, p: int) -> int:
    return elementary_symmetric(balanced_partition(n, p).sizes, 2)


def gen_turan_hypergraph(n: int, p: int, r: int) -> Hypergraph:
    """All r-sets meeting r distinct parts of the balanced p-partition."""
    if not 2 <= r <= p <= n:
        raise BadParams(f"need 2 <= r <= p <= n, got r={r}, p={p}, n={n}")
    spec = balanced_partition(n, p)
    edges = []
    for chosen in combinations(spec.parts, r):
        edges.extend(_product(chosen))
    return Hypergraph(n, r, tuple(edges))


def _product(ranges):
    out = [()]
    for rg in ranges:
        out = [prefix + (v,) for prefix in out for v in rg]
    return out


def gen_Q(n: int, p: int, r: int, t: int) -> Hypergraph:
    """Turan hypergraph plus t-1 extra hyperedges on every same-part pair.

    The extra hyperedges for a pair ``{u, v}`` are ``{u, v} | S`` for the
    lexicographically first ``t - 1`` sets ``S`` of ``r - 2`` vertices lying
    in distinct parts other than the part of ``u`` and ``v``.
    """
    if t < 1:
        raise BadParams("t must be positive")
    base = gen_turan_hypergraph(n, p, r)
    if t == 1:
        return base
    spec = balanced_partition(n, p)
    owner = spec.part_of()
    extra = []
    for idx, part in enumerate(spec.parts):
        others = [q for j, q in enumerate(spec.parts) if j != idx]
        supports = []
        for vs in combinations([v for q in others for v in q], r - 2):
            if len({owner[v] for v in vs}) == r - 2:
                supports.append(vs)
                if len(supports) == t - 1:
                    break
        if len(part) >= 2 and len(supports) < t - 1:
            raise TooFewSupportSets(
                f"only {len(supports)} admissible {r - 2}-sets for a pair in part {idx}, need {t - 1}")
        for u, v in combinations(part, 2):
            extra.extend((u, v) + s for s in supports)
    return Hypergraph(n, r, base.edges + tuple(extra))


def q_size(n: int, p: int, r: int, t: int) -> int:
    sizes = balanced_partition(n, p).sizes
    return elementary_symmetric(sizes, r) + (t - 1) * (comb(n, 2) - elementary_symmetric(sizes, 2))


def _degrees(h: Hypergraph, k: int) -> list[int]:
    deg = [0] * k
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return deg


def gen_construction1(n: int, seed: Hypergraph, t: int | None = None) -> Hypergraph:
    """Blocks carrying a (t-1)-regular (r-1)-uniform seed; each hyperedge is a
    seed hyperedge of a later block plus one vertex of an earlier block."""
    k = seed.n
    deg = _degrees(seed, k)
    if k == 0 or len(set(deg)) != 1 or deg[0] == 0:
        raise SeedNotRegular(f"seed degrees {deg} are not constant and positive")
    if t is not None and deg[0] != t - 1:
        raise SeedNotRegular(f"seed is {deg[0]}-regular, expected {t - 1}-regular")
    blocks = n // k
    edges = []
    for j in range(1, blocks):
        copy = [tuple(v + j * k for v in e) for e in seed.edges]
        for v in range(j * k):
            edges.extend((v,) + e for e in copy)
    return Hypergraph(n, seed.r + 1, tuple(edges))


def construction1_size(n: int, seed: Hypergraph) -> int:
    blocks = n // seed.n
    return len(seed) * seed.n * blocks * (blocks - 1) // 2


def gen_construction2(n: int, r: int, t: int) -> Hypergraph:
    """t-1 disjoint (r-2)-blocks; hyperedges are a block plus a pair of the rest."""
    if r < 2 or t < 1:
        raise BadParams("need r >= 2 and t >= 1")
    reserved = (t - 1) * (r - 2)
    if n <= reserved + 1:
        raise BadParams(f"need n > (t-1)(r-2)+1 = {reserved + 1}")
    rest = range(reserved, n)
    edges = []
    for i in range(t - 1):
        block = tuple(range(i * (r - 2), (i + 1) * (r - 2)))
        edges.extend(block + xy for xy in combinations(rest, 2))
    return Hypergraph(n, r, tuple(edges))


def construction2_size(n: int, r: int, t: int) -> int:
    return (t - 1) * comb(n - (t - 1) * (r - 2), 2)


@dataclass(frozen=True)
class RegularSeed:
    graph: PatternGraph
    d: int
    matching: tuple[tuple[int, int], ...] | None = None

    @property
    def m(self) -> int:
        return self.graph.n


def regular_seed(d: int) -> RegularSeed:
    """Built-in seeds: K_{d+1} for odd d, K_{d+2} minus a perfect matching for even d.

    Both carry a perfect matching.
    """
    if d < 1:
        raise BadParams("seed degree must be positive")
    if d % 2:
        m = d + 1
        g = PatternGraph.of(m, combinations(range(m), 2))
        match = tuple((i, i + 1) for i in range(0, m, 2))
    else:
        m = d + 2
        removed = {(i, i + 1) for i in range(0, m, 2)}
        g = PatternGraph.of(m, (e for e in combinations(range(m), 2) if e not in removed))
        match = tuple(sorted(pair(i, (i + 1) % m) for i in range(1, m, 2)))
    return RegularSeed(g, d, match)


def check_seed(seed: RegularSeed, t: int) -> None:
    g = seed.graph
    validate_graph(g)
    need = (t - 1) // 2 if t % 2 else t // 2
    if seed.d != need:
        raise SeedMismatch(f"t={t} needs a {need}-regular seed, got d={seed.d}")
    if any(g.degree(v) != seed.d for v in range(g.n)):
        raise SeedMismatch(f"seed graph is not {seed.d}-regular")
    if t % 2 == 0:
        if seed.matching is None:
            raise SeedMismatch("even t needs a perfect matching in the seed")
        covered = [v for e in seed.matching for v in e]
        if sorted(covered) != list(range(g.n)) or any(not g.has_edge(*e) for e in seed.matching):
            raise SeedMismatch("seed matching is not a perfect matching of the seed graph")


def gen_construction3(n: int, t: int, seed: RegularSeed) -> Hypergraph:
    """3-uniform blocks with seed copies; cross-block pairs have multiplicity t-1.

    For blocks ``i < j`` it takes (seed edge in block i) x (vertex of block j)
    and (vertex of block i) x (seed edge in block j), the latter skipping
    matching edges when ``t`` is even.
    """
    if t < 2:
        raise BadParams("t must be at least 2")
    check_seed(seed, t)
    m = seed.m
    blocks = n // m
    skip = set(seed.matching or ()) if t % 2 == 0 else set()
    later = [e for e in seed.graph.edges if e not in skip]
    edges = []
    for i in range(blocks):
        for j in range(i + 1, blocks):
            oi, oj = i * m, j * m
            for a, b in seed.graph.edges:
                edges.extend((oi + a, oi + b, oj + w) for w in range(m))
            for a, b in later:
                edges.extend((oi + w, oj + a, oj + b) for w in range(m))
    return Hypergraph(n, 3, tuple(edges))


def construction3_size(n: int, t: int, seed: RegularSeed) -> int:
    blocks = n // seed.m
    skip = len(seed.matching or ()) if t % 2 == 0 else 0
    per_pair = seed.m * (2 * len(seed.graph.edges) - skip)
    return blocks * (blocks - 1) // 2 * per_pair


def _complete_bipartite(a: int, b: int) -> PatternGraph:
    return PatternGraph(a + b, tuple((u, v) for u in range(a) for v in range(a, a + b)))


def star_threshold(n: int, f: PatternGraph) -> int:
    """Largest ``t0 <= n/2`` such that ``f`` is not a subgraph of K_{t0-1, n-t0+1}."""
    best = None
    for t0 in range(1, n // 2 + 1):
        if not contains(f, _complete_bipartite(t0 - 1, n - t0 + 1)):
            best = t0
    if best is None:
        raise PreconditionViolated("pattern fits into every K_{a, n-a}")
    return best


def _connected(f: PatternGraph) -> bool:
    if f.n == 0:
        return True
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        for v in range(f.n):
            if frontier >> v & 1:
                nxt |= f.adjacency[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << f.n) - 1


def fill_packing(base: Hypergraph, lam: int, t: int) -> Hypergraph:
    """Greedily add triples to ``base`` without changing its t-heavy pairs.

    A triple is added iff every pair in it has been used at most ``lam - 1``
    times by added triples, and no pair that is below ``t`` in ``base`` would
    reach ``t``.
    """
    if lam <= 0:
        return base
    present = set(base.edges)
    total = {p: len(ix) for p, ix in base.covering.items()}
    heavy = {p for p, c in total.items() if c >= t}
    added_count: dict = {}
    added = []
    for e in combinations(range(base.n), base.r):
        if e in present:
            continue
        ps = list(combinations(e, 2))
        if any(added_count.get(p, 0) >= lam for p in ps):
            continue
        if any(p not in heavy and total.get(p, 0) + 1 >= t for p in ps):
            continue
        added.append(e)
        for p in ps:
            added_count[p] = added_count.get(p, 0) + 1
            total[p] = total.get(p, 0) + 1
    return Hypergraph(base.n, base.r, base.edges + tuple(added))


def construction4_candidates(n: int, t: int, f: PatternGraph) -> dict[str, Hypergraph]:
    """Both halves of the combined construction for a tree-like pattern.

    ``star`` is the fixed-vertex construction on ``t0 - 1`` hub vertices plus a
    packing of multiplicity ``t - t0``; ``blocks`` is the block construction
    with seed ``K_{k-1}`` (threshold ``2k - 3``) plus a packing of
    multiplicity ``t - 2k + 3``.
    """
    k = f.n
    if not f.edges or not _connected(f):
        raise PreconditionViolated("pattern must be connected and have an edge")
    t0 = star_threshold(n, f)
    if t <= t0 or t < 2 * k - 3:
        raise PreconditionViolated(f"need t > t0={t0} and t >= 2k-3={2 * k - 3}, got t={t}")
    out = {}
    if t0 >= 2 and n > t0:
        h1 = gen_construction2(n, 3, t0)
    else:
        h1 = Hypergraph(n, 3, ())
    out["star"] = fill_packing(h1, t - t0, t)
    if k >= 3:
        h2 = gen_construction3(n, 2 * k - 3, regular_seed(k - 2))
    else:
        h2 = Hypergraph(n, 3, ())
    out["blocks"] = fill_packing(h2, t - 2 * k + 3, t)
    return out


def gen_construction4(n: int, t: int, f: PatternGraph) -> Hypergraph:
    """Larger of the two candidates in :func:`construction4_candidates` (ties: blocks)."""
    cands = construction4_candidates(n, t, f)
    return cands["star"] if len(cands["star"]) > len(cands["blocks"]) else cands["blocks"]


def gen_sts(n: int) -> Hypergraph:
    """Steiner triple system: Bose construction for n = 3 (mod 6), Skolem for n = 1 (mod 6)."""
    if n % 6 not in (1, 3) or n < 3:
        raise BadResidue(f"Steiner triple systems exist only for n = 1, 3 (mod 6); got {n}")
    if n % 6 == 3:
        return _bose(n)
    return _skolem(n)


def _bose(n: int) -> Hypergraph:
    q = n // 3  # odd order of the idempotent commutative quasigroup
    half = (q + 1) // 2

    def op(x, y):
        return (x + y) * half % q

    def vid(x, a):
        return 3 * x + a

    edges = [(vid(x, 0), vid(x, 1), vid(x, 2)) for x in range(q)]
    for a in range(3):
        for x, y in combinations(range(q), 2):
            edges.append((vid(x, a), vid(y, a), vid(op(x, y), (a + 1) % 3)))
    return Hypergraph(n, 3, tuple(edges))


def _skolem(n: int) -> Hypergraph:
    s = (n - 1) // 6
    q = 2 * s  # order of the half-idempotent commutative quasigroup
    # relabel Z_q symbols so the diagonal reads 0, 1, ..., s-1, 0, 1, ..., s-1
    relabel = {2 * i: i for i in range(s)}
    relabel.update({2 * i + 1: s + i for i in range(s)})

    def op(x, y):
        return relabel[(x + y) % q]

    inf = n - 1

    def vid(x, a):
        return 3 * x + a

    edges = [(vid(x, 0), vid(x, 1), vid(x, 2)) for x in range(s)]
    for x in range(s):
        for a in range(3):
            edges.append((inf, vid(s + x, a), vid(x, (a + 1) % 3)))
    for a in range(3):
        for x, y in combinations(range(q), 2):
            edges.append((vid(x, a), vid(y, a), vid(op(x, y), (a + 1) % 3)))
    return Hypergraph(n, 3, tuple(edges))


def gen_packing(n: int, r: int, lam: int) -> Hypergraph:
    """Greedy r-uniform packing in which no pair lies in more than ``lam`` hyperedges."""
    if lam < 1 or not 2 <= r <= n:
        raise BadParams("need lam >= 1 and 2 <= r <= n")
    count: dict = {}
    edges = []
    for e in combinations(range(n), r):
        ps = list(combinations(e, 2))
        if all(count.get(p, 0) < lam for p in ps):
            edges.append(e)
            for p in ps:
                count[p] = count.get(p, 0) + 1
    return Hypergraph(n, r, tuple(edges))


def packing_target(n: int, r: int, lam: int) -> float:
    """Size of a lam-fold design on n points, the packing's ceiling."""
    return lam * comb(n, 2) / comb(r, 2)
