"""Named pattern graphs.

Paths and cycles are indexed by vertex count (``P4`` has four vertices and
three edges), stars by edge count (``S2`` is the cherry).
"""

from __future__ import annotations

import re
from itertools import combinations

from .hypergraph import PatternGraph


def complete(k: int) -> PatternGraph:
    return PatternGraph.of(k, combinations(range(k), 2))


def path(k: int) -> PatternGraph:
    if k < 2:
        raise ValueError("a path needs at least 2 vertices")
    return PatternGraph.of(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> PatternGraph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return PatternGraph.of(k, [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)])


def star(edges: int) -> PatternGraph:
    if edges < 1:
        raise ValueError("a star needs at least one edge")
    return PatternGraph.of(edges + 1, ((0, i) for i in range(1, edges + 1)))


_BUILDERS = {"K": complete, "P": path, "C": cycle, "S": star}
_NAME = re.compile(r"^([KPCS])_?(\d+)$")


def named(name: str) -> PatternGraph:
    """Expand a shorthand such as ``K4``, ``P6``, ``C5`` or ``S2``."""
    m = _NAME.match(name.strip().upper())
    if not m:
        raise ValueError(f"unknown pattern {name!r}; expected K<k>, P<k>, C<k> or S<k>")
    return _BUILDERS[m.group(1)](int(m.group(2)))


def describe(name: str) -> tuple[str, int]:
    """Return the family letter and index of a shorthand name."""
    m = _NAME.match(name.strip().upper())
    if not m:
        raise ValueError(f"unknown pattern {name!r}")
    return m.group(1), int(m.group(2))


TEST_PATTERNS = ("S2", "P4", "K3", "C4", "K4")
