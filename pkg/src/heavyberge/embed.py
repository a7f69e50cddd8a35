"""Backtracking enumeration of (not necessarily induced) subgraph embeddings."""

from __future__ import annotations

from typing import Iterator, Mapping, Sequence

from .hypergraph import PatternGraph


def search_order(f: PatternGraph, pinned: Sequence[int] = ()) -> list[int]:
    """Pattern vertices ordered for backtracking.

    Pinned vertices come first; afterwards the vertex with the most already
    placed neighbours wins, then the higher degree, then the lower index.
    """
    adj = f.adjacency
    order = list(pinned)
    placed = 0
    for x in order:
        placed |= 1 << x
    remaining = [x for x in range(f.n) if not placed >> x & 1]
    while remaining:
        best = max(remaining, key=lambda x: ((adj[x] & placed).bit_count(), adj[x].bit_count(), -x))
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


def embeddings(
    f: PatternGraph,
    host_adj: Sequence[int],
    pinned: Mapping[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield injections ``V(f) -> V(host)`` mapping edges onto host edges.

    ``host_adj`` holds host neighbourhoods as bitmasks.  Each yielded tuple is
    indexed by pattern vertex.  ``pinned`` fixes the image of some pattern
    vertices; pinned images must be distinct.
    """
    n_host = len(host_adj)
    k = f.n
    if k > n_host:
        return
    pinned = dict(pinned or {})
    if len(set(pinned.values())) != len(pinned):
        return
    order = search_order(f, sorted(pinned))
    fadj = f.adjacency
    fdeg = [fadj[x].bit_count() for x in range(k)]
    host_deg = [a.bit_count() for a in host_adj]
    everything = (1 << n_host) - 1
    # host vertices with enough degree, per pattern degree
    by_degree = {}
    for d in set(fdeg):
        mask = 0
        for v in range(n_host):
            if host_deg[v] >= d:
                mask |= 1 << v
        by_degree[d] = mask
    # for each position, the earlier positions that are pattern neighbours
    back = [[order.index(y) for y in range(k) if fadj[x] >> y & 1 and order.index(y) < pos]
            for pos, x in enumerate(order)]
    image = [-1] * k
    used = 0

    def candidates(pos: int) -> int:
        x = order[pos]
        if x in pinned:
            cand = 1 << pinned[x]
        else:
            cand = by_degree[fdeg[x]]
        cand &= ~used & everything
        for q in back[pos]:
            cand &= host_adj[image[order[q]]]
        if x in pinned:
            cand &= by_degree[fdeg[x]]
        return cand

    stack = [candidates(0)] if k else []
    if k == 0:
        yield ()
        return
    pos = 0
    while pos >= 0:
        cand = stack[pos]
        if image[order[pos]] >= 0:
            used &= ~(1 << image[order[pos]])
            image[order[pos]] = -1
        if not cand:
            stack.pop()
            pos -= 1
            continue
        low = cand & -cand
        stack[pos] = cand ^ low
        v = low.bit_length() - 1
        image[order[pos]] = v
        used |= low
        if pos == k - 1:
            yield tuple(image)
            continue
        pos += 1
        stack.append(candidates(pos))


def contains(f: PatternGraph, g: PatternGraph) -> bool:
    """Whether ``g`` has a subgraph isomorphic to ``f``."""
    return next(embeddings(f, g.adjacency), None) is not None
