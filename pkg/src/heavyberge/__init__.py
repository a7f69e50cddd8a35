"""t-heavy and t-wise Berge copies of graphs in uniform hypergraphs."""

from .bounds import BlueRedGraph, BoundReport, count_cliques, g_value, symmetrize, theorem_bounds
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
)
from .detect import (
    BergeWitness,
    extract_berge_from_heavy,
    extract_expansion3,
    find_copy,
    greedy_certificate,
    is_free,
    strip_representatives,
    verify_witness,
)
from .exact import SolveResult, brute_force_detect, exact_turan
from .hypergraph import (
    EdgeMultiplicityMap,
    Hypergraph,
    ParseError,
    PatternGraph,
    heavy_graph,
    parse,
    parse_graph,
    serialize,
    shadow_multiplicity,
    validate,
)
from .patterns import named

__version__ = "0.1.0"
