import json
from itertools import combinations

import pytest

from heavyberge.constructions import gen_turan_hypergraph
from heavyberge.detect import find_copy
from heavyberge.exact import TooLarge, BadPattern, SolveResult, brute_force_detect, exact_turan
from heavyberge.hypergraph import Hypergraph, PatternGraph, parse
from heavyberge.patterns import complete, named, star


def naive_turan(n, r, f, t, mode):
    sets = list(combinations(range(n), r))
    best = 0
    for mask in range(1 << len(sets)):
        size = bin(mask).count("1")
        if size <= best:
            continue
        h = Hypergraph(n, r, tuple(s for i, s in enumerate(sets) if mask >> i & 1))
        if not brute_force_detect(h, f, t, mode):
            best = size
    return best


@pytest.mark.parametrize("t,mode", [(1, "heavy"), (2, "heavy"), (1, "berge"), (2, "berge")])
def test_matches_full_enumeration_on_five_vertices(t, mode):
    res = exact_turan(5, 3, star(2), t, mode)
    assert res.exhausted
    assert res.value == naive_turan(5, 3, star(2), t, mode)


@pytest.mark.parametrize("t,mode", [(2, "heavy"), (3, "berge")])
def test_extremal_hypergraph_is_free(t, mode):
    res = exact_turan(5, 3, star(2), t, mode)
    assert len(res.extremal) == res.value
    assert find_copy(res.extremal, star(2), t, mode) is None
    assert not brute_force_detect(res.extremal, star(2), t, mode)


def test_k4_t1_is_turan_hypergraph():
    res = exact_turan(6, 3, complete(4), 1, "heavy")
    assert res.exhausted and res.value == len(gen_turan_hypergraph(6, 3, 3)) == 8


def test_symmetry_breaking_keeps_value():
    plain = exact_turan(5, 3, star(2), 3, "berge")
    fixed = exact_turan(5, 3, star(2), 3, "berge", symmetry=True)
    assert plain.value == fixed.value
    assert fixed.nodes_explored <= plain.nodes_explored


def test_monotone_in_t_and_mode():
    values = {(t, m): exact_turan(5, 3, star(2), t, m).value for t in (1, 2, 3) for m in ("heavy", "berge")}
    for t in (1, 2, 3):
        assert values[(t, "heavy")] <= values[(t, "berge")]
        if t > 1:
            assert values[(t - 1, "berge")] <= values[(t, "berge")]
            assert values[(t - 1, "heavy")] <= values[(t, "heavy")]


def test_budget_exhaustion_is_reported():
    res = exact_turan(6, 3, complete(4), 2, "heavy", node_budget=50)
    assert not res.exhausted
    assert find_copy(res.extremal, complete(4), 2, "heavy") is None


def test_rejects_edgeless_pattern():
    with pytest.raises(BadPattern):
        exact_turan(5, 3, PatternGraph.of(2), 1, "heavy")


def test_solve_result_json():
    res = exact_turan(5, 3, star(2), 2, "heavy")
    assert isinstance(res, SolveResult)
    data = res.to_dict()
    assert data["value"] == 4 and data["exhausted"] is True
    assert parse(json.dumps(data["extremal"])) == res.extremal


def test_brute_force_caps():
    big = Hypergraph.of(9, 3, list(combinations(range(9), 3))[:61])
    with pytest.raises(TooLarge):
        brute_force_detect(big, named("S2"), 1, "heavy")


def test_brute_force_examples(berge_triangle, fano, fan):
    assert brute_force_detect(berge_triangle, complete(3), 2, "berge")
    assert not brute_force_detect(fano, named("S2"), 2, "heavy")
    assert brute_force_detect(fan, named("S2"), 2, "heavy")
    assert not brute_force_detect(fan, named("S2"), 2, "berge")
