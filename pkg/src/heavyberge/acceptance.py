"""Exit-criteria battery.

Each ``criterion_*`` function runs one check at its fixed tolerance and
returns a :class:`CriterionResult`.  ``run_all`` is used by both the pytest
acceptance module and ``heavyberge selftest``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable

from .bounds import (
    BlueRedGraph,
    g_value,
    is_complete_multipartite,
    symmetrize,
    symmetrization_bound,
)
from .constructions import (
    gen_construction1,
    gen_construction2,
    gen_construction3,
    gen_construction4,
    gen_packing,
    gen_Q,
    gen_sts,
    gen_turan_graph,
    gen_turan_hypergraph,
    q_size,
    regular_seed,
    turan_graph_edges,
)
from .detect import (
    certificate_consistent,
    expansion3_with_essence,
    extract_berge_from_heavy,
    find_copy,
    greedy_certificate,
    verify_witness,
)
from .embed import contains
from .exact import brute_force_detect, exact_turan
from .hypergraph import Hypergraph, PatternGraph, shadow_multiplicity
from .patterns import TEST_PATTERNS, complete, cycle, named, path, star


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    limit: float | None = None
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def random_hypergraph(rng: random.Random, n: int, density: float, r: int = 3) -> Hypergraph:
    return Hypergraph.of(n, r, [e for e in combinations(range(n), r) if rng.random() < density])


def random_blue_red(rng: random.Random, n: int, k: int) -> BlueRedGraph:
    """Random K_k-free blue-red graph: random edge order, edges kept while K_k-free."""
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    density = rng.random()
    kk = complete(k)
    edges: list[tuple[int, int]] = []
    for p in pairs:
        if rng.random() < density and not contains(kk, PatternGraph(n, tuple(edges + [p]))):
            edges.append(p)
    blue_share = rng.random()
    blue = [e for e in edges if rng.random() < blue_share]
    red = [e for e in edges if e not in set(blue)]
    return BlueRedGraph(n, frozenset(blue), frozenset(red))


def planted_heavy_triangle(rng: random.Random, n: int, t: int, noise: float) -> Hypergraph:
    """3-uniform hypergraph where a random triangle has every edge in >= t triples."""
    a, b, c = rng.sample(range(n), 3)
    edges = {e for e in combinations(range(n), 3) if rng.random() < noise}
    for u, v in ((a, b), (b, c), (a, c)):
        others = [w for w in range(n) if w not in (u, v)]
        for w in rng.sample(others, rng.randint(t, len(others))):
            edges.add(tuple(sorted((u, v, w))))
    return Hypergraph.of(n, 3, edges)


def _timed(fn: Callable[[], CriterionResult]) -> CriterionResult:
    start = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - start
    if res.limit is not None and res.seconds > res.limit:
        res.passed = False
        res.detail += f"; exceeded time limit {res.limit:.0f}s"
    return res


def criterion_1() -> CriterionResult:
    r, k, t = 3, 4, 2
    problems = []
    sizes = {}
    for n in (6, 7, 8):
        q = gen_Q(n, k - 1, r, t)
        expected = len(gen_turan_hypergraph(n, k - 1, r)) + (t - 1) * (comb(n, 2) - turan_graph_edges(n, k - 1))
        sizes[n] = len(q)
        if len(q) != expected or expected != q_size(n, k - 1, r, t):
            problems.append(f"n={n}: size {len(q)} != {expected}")
        for mode in ("heavy", "berge"):
            if find_copy(q, complete(k), t, mode) is not None:
                problems.append(f"n={n}: {mode} copy of K4 found")
    solved = {}
    for mode in ("heavy", "berge"):
        res = exact_turan(6, r, complete(k), t, mode, node_budget=10_000_000)
        solved[mode] = res
        if not res.exhausted or res.value < sizes[6]:
            problems.append(f"exact {mode}: value {res.value}, exhausted={res.exhausted}")
        if find_copy(res.extremal, complete(k), t, mode) is not None:
            problems.append(f"exact {mode}: extremal hypergraph is not free")
    gaps = {m: s.value - sizes[6] for m, s in solved.items()}
    detail = (f"|Q| at n=6,7,8 = {sizes[6]},{sizes[7]},{sizes[8]}; exact n=6 heavy={solved['heavy'].value} "
              f"berge={solved['berge'].value}; gap heavy={gaps['heavy']} berge={gaps['berge']}")
    return CriterionResult(1, "Q-construction exactness", not problems, "; ".join(problems) or detail,
                           limit=300.0, data={"q_sizes": sizes, "exact": {m: s.value for m, s in solved.items()},
                                              "gaps": gaps})


def criterion_2(instances: int = 1000, seed: int = 2) -> CriterionResult:
    rng = random.Random(seed)
    agree = 0
    positives = 0
    bad = []
    for _ in range(instances):
        n = rng.randint(4, 7)
        h = random_hypergraph(rng, n, rng.choice((0.2, 0.4, 0.6, 0.8)))
        name = rng.choice(TEST_PATTERNS)
        t = rng.randint(1, 3)
        mode = rng.choice(("heavy", "berge"))
        w = find_copy(h, named(name), t, mode)
        truth = brute_force_detect(h, named(name), t, mode)
        positives += truth
        if (w is not None) == truth and (w is None or verify_witness(h, named(name), t, mode, w)):
            agree += 1
        elif len(bad) < 3:
            bad.append(f"{name} t={t} {mode} edges={list(h.edges)}")
    detail = f"{agree}/{instances} agree ({positives} contain a copy)"
    if bad:
        detail += "; disagreements: " + " | ".join(bad)
    return CriterionResult(2, "detection oracle equivalence", agree == instances, detail, limit=120.0,
                           data={"agree": agree, "instances": instances})


def criterion_3() -> CriterionResult:
    violations = []
    for n in (7, 9, 13, 15):
        h = gen_sts(n)
        if shadow_multiplicity(h).max_multiplicity() != 1 or len(h) != n * (n - 1) // 6:
            violations.append(f"STS({n}) malformed")
        for name in TEST_PATTERNS:
            if find_copy(h, named(name), 2, "heavy") is not None:
                violations.append(f"STS({n}) has a 2-heavy {name}")
    return CriterionResult(3, "linear-hypergraph freeness", not violations,
                           f"{len(violations)} violations" + (": " + "; ".join(violations) if violations else ""))


def criterion_4(instances: int = 200, seed: int = 4) -> CriterionResult:
    rng = random.Random(seed)
    tri = complete(3)
    ok = 0
    for _ in range(instances):
        h = planted_heavy_triangle(rng, rng.randint(8, 11), 6, rng.uniform(0.0, 0.3))
        w = extract_berge_from_heavy(h, tri, 6)
        heavy = find_copy(h, tri, 6, "heavy")
        if w.t == 2 and verify_witness(h, tri, 2, "berge", w) and w.i == heavy.i:
            ok += 1
    return CriterionResult(4, "extraction soundness (6-heavy K3 -> 2-wise Berge K3)", ok == instances,
                           f"{ok}/{instances} valid witnesses")


def criterion_5(instances: int = 200, seed: int = 5) -> CriterionResult:
    rng = random.Random(seed)
    tri = complete(3)
    ok = 0
    for _ in range(instances):
        h = planted_heavy_triangle(rng, rng.randint(6, 9), 4, rng.uniform(0.0, 0.4))
        heavy, chosen = expansion3_with_essence(h, tri, 4)
        essence = set(heavy.i)
        apexes = []
        good = len(chosen) == 3
        for (x, y), e in zip(tri.edges, chosen):
            a, b = heavy.i[x], heavy.i[y]
            good &= e in h and a in e and b in e
            apexes.extend(set(e) - {a, b})
        good &= len(set(apexes)) == 3 and not essence & set(apexes)
        ok += good
    return CriterionResult(5, "expansion extraction (4-heavy K3 -> K3^{+3})", ok == instances,
                           f"{ok}/{instances} valid expansions")


def criterion_6() -> CriterionResult:
    problems = []
    for n in range(8, 15):
        h = gen_construction2(n, 3, 2)
        if len(h) != comb(n - 1, 2):
            problems.append(f"n={n}: size {len(h)} != {comb(n - 1, 2)}")
        for f, label in ((path(4), "P4"), (cycle(3), "C3")):
            for mode in ("heavy", "berge"):
                if find_copy(h, f, 2, mode) is not None:
                    problems.append(f"n={n}: {mode} {label}")
    return CriterionResult(6, "path/cycle lower bound construction", not problems,
                           "; ".join(problems) or "sizes C(n-1,2) for n=8..14, 0 detector hits")


def criterion_7(instances: int = 500, seed: int = 7) -> CriterionResult:
    rng = random.Random(seed)
    r, t, k = 3, 2, 4
    violations = []
    for _ in range(instances):
        n = rng.randint(2, 10)
        g = random_blue_red(rng, n, k)
        res = symmetrize(g, k, r, t)
        final = res.graph
        monotone = all(s["g_after"] >= s["g_before"] for s in res.steps)
        mono = not final.blue or not final.red
        multipartite = is_complete_multipartite(final.graph) is not None
        free = not contains(complete(k), final.graph)
        within = res.g_final <= symmetrization_bound(n, r, t, k) and res.g_final == g_value(final, r, t)
        if not (monotone and mono and multipartite and free and within and res.g_final >= g_value(g, r, t)):
            violations.append(f"n={n} {g.to_dict()}")
    attained = []
    for n in range(k - 1, 11):
        turan = gen_turan_graph(n, k - 1)
        best = max(g_value(BlueRedGraph.monochromatic(turan, c), r, t) for c in ("blue", "red"))
        attained.append(best == symmetrization_bound(n, r, t, k))
    ok = not violations and all(attained)
    return CriterionResult(7, "symmetrization monotonicity and g bound", ok,
                           f"{len(violations)} violations in {instances} runs; Turan graphs attain the bound "
                           f"for {sum(attained)}/{len(attained)} values of n")


def _generator_outputs() -> list[Hypergraph]:
    pm = Hypergraph.of(2, 2, [(0, 1)])
    return [
        gen_turan_hypergraph(7, 3, 3), gen_Q(6, 3, 3, 2), gen_Q(8, 3, 3, 2),
        gen_construction1(6, pm), gen_construction2(10, 3, 2), gen_construction2(8, 4, 3),
        gen_construction3(8, 3, regular_seed(1)), gen_construction3(12, 4, regular_seed(2)),
        gen_construction4(12, 4, star(2)), gen_sts(7), gen_sts(9), gen_packing(9, 3, 2),
    ]


def criterion_8(instances: int = 500, seed: int = 8) -> CriterionResult:
    rng = random.Random(seed)
    violations = 0
    cases = [(random_hypergraph(rng, rng.randint(3, 8), rng.uniform(0.1, 0.9)),
              named(rng.choice(TEST_PATTERNS)), rng.randint(1, 3)) for _ in range(instances)]
    cases += [(h, named(name), t) for h in _generator_outputs() for name, t in (("K3", 2), ("S2", 3))]
    for h, f, t in cases:
        cert = greedy_certificate(h, t)
        free = find_copy(h, f, t, "berge") is None
        if not certificate_consistent(cert, h, f if free else None):
            violations += 1
    return CriterionResult(8, "greedy certificate identity", violations == 0,
                           f"{violations} violations over {len(cases)} hypergraphs")


def criterion_9() -> CriterionResult:
    n, r, f = 5, 3, star(2)
    values = {}
    problems = []
    for t in (1, 2, 3):
        for mode in ("heavy", "berge"):
            res = exact_turan(n, r, f, t, mode)
            if not res.exhausted:
                problems.append(f"t={t} {mode} not exhausted")
            values[(t, mode)] = res.value
        if values[(t, "heavy")] > values[(t, "berge")]:
            problems.append(f"t={t}: heavy {values[(t, 'heavy')]} > berge {values[(t, 'berge')]}")
    for t in (2, 3):
        if values[(t, "berge")] > values[(t - 1, "berge")] + comb(n, 2):
            problems.append(f"t={t}: recursion bound violated")
    detail = ", ".join(f"t={t}: heavy={values[(t, 'heavy')]} berge={values[(t, 'berge')]}" for t in (1, 2, 3))
    return CriterionResult(9, "t-wise Berge recursion at n=5, S2", not problems,
                           "; ".join(problems) or detail, data={"values": {f"{t}-{m}": v for (t, m), v in values.items()}})


def criterion_10(sizes: tuple[int, ...] = (30, 45, 60)) -> CriterionResult:
    t = 3
    f = star(2)
    problems = []
    measured = {}
    for n in sizes:
        for label, h in (("c3", gen_construction3(n, t, regular_seed(1))), ("c4", gen_construction4(n, t, f))):
            measured[(label, n)] = len(h)
            if find_copy(h, f, t, "heavy") is not None:
                problems.append(f"{label} n={n} contains a 3-heavy S2")
    top = max(sizes)
    floor = 0.7 * t * top * top / 6
    best = max(measured[("c3", top)], measured[("c4", top)])
    if best < floor:
        problems.append(f"n={top}: size {best} < {floor:.1f}")
    detail = f"n={top}: size {best} >= 0.7*t*n^2/6 = {floor:.1f}; ratio to t*n^2/6 = {best / (t * top * top / 6):.3f}"
    return CriterionResult(10, "cherry construction size trend (t=3)", not problems, "; ".join(problems) or detail,
                           data={"sizes": {f"{k[0]}-{k[1]}": v for k, v in measured.items()}})


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}


def run_criterion(number: int) -> CriterionResult:
    return _timed(CRITERIA[number])


def run_all(numbers=None, echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    results = []
    for number in numbers or sorted(CRITERIA):
        res = run_criterion(number)
        if echo:
            echo(res.line())
        results.append(res)
    return results
