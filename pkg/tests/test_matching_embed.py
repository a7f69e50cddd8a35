from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heavyberge.embed import contains, embeddings
from heavyberge.hypergraph import PatternGraph
from heavyberge.matching import hopcroft_karp, saturating_matching
from heavyberge.patterns import complete, cycle, describe, named, path, star


def brute_matching_size(graph):
    left = list(graph)
    best = 0

    def go(i, used, size):
        nonlocal best
        best = max(best, size)
        if i == len(left) or size + len(left) - i <= best:
            return
        for v in graph[left[i]]:
            if v not in used:
                go(i + 1, used | {v}, size + 1)
        go(i + 1, used, size)

    go(0, frozenset(), 0)
    return best


@settings(max_examples=80, deadline=None)
@given(st.dictionaries(st.integers(0, 6), st.lists(st.integers(0, 6), unique=True, max_size=4), max_size=7))
def test_hopcroft_karp_is_maximum(graph):
    match = hopcroft_karp(graph)
    assert len(set(match.values())) == len(match)
    assert all(v in graph[u] for u, v in match.items())
    assert len(match) == brute_matching_size(graph)


def test_saturating_matching():
    assert saturating_matching({"a": [1], "b": [1, 2]}) == {"a": 1, "b": 2}
    assert saturating_matching({"a": [1], "b": [1]}) is None


@pytest.mark.parametrize("name,n,m", [("K4", 4, 6), ("P6", 6, 5), ("C5", 5, 5), ("S2", 3, 2), ("s3", 4, 3)])
def test_named_patterns(name, n, m):
    g = named(name)
    assert (g.n, len(g.edges)) == (n, m)


def test_pattern_errors():
    with pytest.raises(ValueError):
        named("X3")
    with pytest.raises(ValueError):
        cycle(2)
    assert describe("C5") == ("C", 5)


def brute_contains(f, g):
    return any(all(g.has_edge(img[x], img[y]) for x, y in f.edges)
               for img in permutations(range(g.n), f.n))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.sampled_from(list(combinations(range(n), 2))), unique=True))),
    st.sampled_from(["S2", "P4", "K3", "C4"]))
def test_contains_matches_brute_force(ng, name):
    n, edges = ng
    g = PatternGraph.of(n, edges)
    f = named(name)
    assert contains(f, g) == brute_contains(f, g)


def test_embeddings_are_homomorphic_injections():
    host = complete(4)
    images = list(embeddings(path(3), host.adjacency))
    assert len(images) == 4 * 3 * 2
    assert all(len(set(img)) == 3 for img in images)


def test_pinned_embeddings():
    host = star(3)
    images = list(embeddings(path(3), host.adjacency, {1: 0}))
    assert images and all(img[1] == 0 for img in images)
    assert list(embeddings(path(3), host.adjacency, {1: 2})) == []
