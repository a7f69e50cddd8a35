import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heavyberge.acceptance import planted_heavy_triangle, random_hypergraph
from heavyberge.constructions import gen_construction2, gen_sts
from heavyberge.detect import (
    BergeWitness,
    NoHeavyCopy,
    ThresholdTooSmall,
    certificate_consistent,
    expansion3_with_essence,
    extract_berge_from_heavy,
    extract_expansion3,
    find_copy,
    greedy_certificate,
    is_free,
    strip_representatives,
    verify_witness,
)
from heavyberge.embed import contains
from heavyberge.exact import brute_force_detect
from heavyberge.hypergraph import Hypergraph
from heavyberge.patterns import TEST_PATTERNS, complete, named, star


def test_berge_triangle_found(berge_triangle):
    w = find_copy(berge_triangle, complete(3), 2, "berge")
    assert w is not None
    assert sorted(w.i) == [0, 1, 2]
    assert verify_witness(berge_triangle, complete(3), 2, "berge", w)
    assert find_copy(berge_triangle, complete(3), 3, "heavy") is None


def test_fan_heavy_cherry_centred_at_zero(fan):
    w = find_copy(fan, star(2), 2, "heavy")
    assert w is not None and w.i[0] == 0
    assert verify_witness(fan, star(2), 2, "heavy", w)


def test_fan_has_no_berge_cherry(fan):
    # a 2-wise Berge cherry needs four hyperedges
    assert find_copy(fan, star(2), 2, "berge") is None


def test_pattern_larger_than_host():
    assert find_copy(Hypergraph.of(3, 3, [(0, 1, 2)]), complete(4), 1, "heavy") is None


def test_bad_inputs():
    h = Hypergraph.of(4, 3, [(0, 1, 2)])
    with pytest.raises(ValueError):
        find_copy(h, complete(3), 0, "heavy")
    with pytest.raises(ValueError):
        find_copy(h, complete(3), 1, "loose")


def test_verify_rejects_broken_witnesses(berge_triangle):
    f = complete(3)
    w = find_copy(berge_triangle, f, 2, "berge")
    assert not verify_witness(berge_triangle, f, 2, "berge", BergeWitness((0, 0, 1), w.h, "berge", 2))
    reused = (w.h[0], (w.h[0][0], w.h[1][1]), w.h[2])
    assert not verify_witness(berge_triangle, f, 2, "berge", BergeWitness(w.i, reused, "berge", 2))
    wrong = ((w.h[1][0], w.h[0][1]),) + w.h[1:]
    assert not verify_witness(berge_triangle, f, 2, "heavy", BergeWitness(w.i, wrong, "heavy", 2))


def test_witness_json_round_trip(berge_triangle):
    w = find_copy(berge_triangle, complete(3), 2, "berge")
    assert BergeWitness.from_dict(w.to_dict()) == w


@pytest.mark.parametrize("n", [7, 9, 13])
@pytest.mark.parametrize("name", TEST_PATTERNS)
def test_linear_hypergraphs_have_no_2_heavy_copies(n, name):
    assert is_free(gen_sts(n), named(name), 2, "heavy")


@st.composite
def small_instances(draw):
    n = draw(st.integers(4, 6))
    edges = draw(st.lists(st.sampled_from(list(combinations(range(n), 3))), unique=True, max_size=14))
    return Hypergraph.of(n, 3, edges), draw(st.sampled_from(TEST_PATTERNS)), draw(st.integers(1, 3))


@settings(max_examples=80, deadline=None)
@given(small_instances())
def test_berge_implies_heavy_and_monotone_in_t(inst):
    h, name, t = inst
    f = named(name)
    heavy = find_copy(h, f, t, "heavy") is not None
    berge = find_copy(h, f, t, "berge") is not None
    assert not berge or heavy
    if t > 1:
        assert not heavy or find_copy(h, f, t - 1, "heavy") is not None
        assert not berge or find_copy(h, f, t - 1, "berge") is not None


@settings(max_examples=80, deadline=None)
@given(small_instances(), st.sampled_from(["heavy", "berge"]))
def test_agrees_with_brute_force(inst, mode):
    h, name, t = inst
    f = named(name)
    w = find_copy(h, f, t, mode)
    assert (w is not None) == brute_force_detect(h, f, t, mode)
    if w is not None:
        assert verify_witness(h, f, t, mode, w)


# -- extraction -----------------------------------------------------------------


def test_threshold_too_small_for_berge_extraction():
    h = Hypergraph.of(5, 3, [(0, 1, 2)])
    with pytest.raises(ThresholdTooSmall):
        extract_berge_from_heavy(h, complete(3), 2)


def test_no_heavy_copy(fano):
    with pytest.raises(NoHeavyCopy):
        extract_berge_from_heavy(fano, complete(3), 3)


def test_berge_from_construction2_hub():
    # every pair at the hub is covered 1 time per other vertex: heavy cherries galore
    h = gen_construction2(8, 3, 2)
    f = star(2)
    w = extract_berge_from_heavy(h, f, 6)
    assert w.t == 3
    assert verify_witness(h, f, 3, "berge", w)


@pytest.mark.parametrize("seed", range(20))
def test_berge_extraction_on_planted_triangles(seed):
    rng = random.Random(seed)
    h = planted_heavy_triangle(rng, 9, 6, 0.1)
    w = extract_berge_from_heavy(h, complete(3), 6)
    assert w.t == 2 and verify_witness(h, complete(3), 2, "berge", w)


def test_expansion_with_generic_apexes():
    edges = []
    apex = 3
    for a, b in [(0, 1), (1, 2), (0, 2)]:
        for _ in range(4):
            edges.append((a, b, apex))
            apex += 1
    h = Hypergraph.of(apex, 3, edges)
    chosen = extract_expansion3(h, complete(3), 4)
    assert len(chosen) == 3
    apexes = [set(e) - {0, 1, 2} for e in chosen]
    assert all(len(a) == 1 for a in apexes)
    assert len(set.union(*apexes)) == 3


def test_expansion_with_overlapping_apexes_at_threshold():
    # all three triangle edges share the same four candidate apexes: the
    # counting bound still leaves a free apex for every edge
    h = Hypergraph.of(7, 3, [(a, b, w) for a, b in [(0, 1), (1, 2), (0, 2)] for w in range(3, 7)])
    witness, chosen = expansion3_with_essence(h, complete(3), 4)
    core = set(witness.i)
    apexes = [(set(e) - core).pop() for e in chosen]
    assert len(set(apexes)) == 3


def test_expansion_threshold():
    h = Hypergraph.of(7, 3, [(0, 1, 2)])
    with pytest.raises(ThresholdTooSmall):
        extract_expansion3(h, complete(3), 3)


# -- representatives and greedy certificate ------------------------------------------


@pytest.mark.parametrize("edges,size", [
    ([(0, 1, 2)], 1),
    ([(0, 1, 2), (0, 1, 3), (0, 1, 4)], 3),
])
def test_strip_representatives_small(edges, size):
    pairs, assignment, rest = strip_representatives(Hypergraph.of(5, 3, edges))
    assert len(pairs) == size and len(rest) == 0
    assert all(set(p) <= set(assignment[p]) for p in pairs)


def test_strip_representatives_fano(fano):
    pairs, assignment, rest = strip_representatives(fano)
    assert len(pairs) == 7 and len(rest) == 0
    assert len(set(assignment.values())) == 7


@settings(max_examples=50, deadline=None)
@given(small_instances())
def test_strip_representatives_is_maximal(inst):
    h = inst[0]
    pairs, assignment, rest = strip_representatives(h)
    used = set(pairs)
    assert len(rest) + len(pairs) == len(h)
    # no leftover hyperedge has a pair still free
    for e in rest:
        assert all(p in used for p in combinations(e, 2))


def test_certificate_two_triples():
    cert = greedy_certificate(Hypergraph.of(4, 3, [(0, 1, 2), (0, 1, 3)]), 1)
    assert cert.x == 0
    assert len(cert.graphs[1].edges) == 2
    assert cert.weighted_total() == 2


def test_certificate_complete_on_four_vertices():
    h = Hypergraph.of(4, 3, combinations(range(4), 3))
    cert = greedy_certificate(h, 1)
    assert cert.x == 0 and cert.weighted_total() == 4


def test_certificate_empty():
    cert = greedy_certificate(Hypergraph.of(5, 3), 2)
    assert cert.x == 0 and all(not g.edges for g in cert.graphs[1:])


def test_certificate_consistent_on_fano(fano):
    cert = greedy_certificate(fano, 1)
    assert certificate_consistent(cert, fano)
    h = Hypergraph.of(4, 3, combinations(range(4), 3))
    assert greedy_certificate(h, 1).marked == ()


@settings(max_examples=60, deadline=None)
@given(small_instances())
def test_certificate_identity_and_top_layer(inst):
    h, name, t = inst
    f = named(name)
    cert = greedy_certificate(h, t)
    assert certificate_consistent(cert, h)
    if is_free(h, f, t, "berge"):
        assert not contains(f, cert.graphs[t])


def test_certificate_on_random_dense_instances():
    rng = random.Random(11)
    for _ in range(30):
        h = random_hypergraph(rng, 7, 0.6)
        assert certificate_consistent(greedy_certificate(h, 2), h)
