"""Command-line entry point: ``heavyberge <subcommand> ...``.

Every subcommand writes machine-readable output (JSON by default) that
parses back through the library loaders.  Errors go to stderr with exit
code 2; ``check`` uses 0 for free and 1 for contained.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import constructions as C
from .bounds import BlueRedGraph, symmetrize, theorem_bounds
from .detect import find_copy
from .exact import exact_turan
from .hypergraph import Hypergraph, ParseError, parse, parse_graph, serialize
from .patterns import describe, named

GENERATORS = ("turan", "Q", "c1", "c2", "c3", "c4", "sts", "packing")
EXIT_FREE, EXIT_CONTAINED, EXIT_ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.generator} needs {', '.join(missing)}")


def load_pattern(spec: str):
    """A shorthand name (K4, P6, C5, S2) or a path to a graph JSON file."""
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        return parse_graph(path.read_text())
    return named(spec)


def _load_regular_seed(path: str) -> C.RegularSeed:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ParseError("seed file: expected a JSON object")
    matching = data.pop("matching", None)
    g = parse_graph(json.dumps(data))
    degrees = {g.degree(v) for v in range(g.n)}
    if len(degrees) != 1:
        raise C.SeedNotRegular(f"seed graph degrees {sorted(degrees)} are not constant")
    match = tuple(tuple(sorted(e)) for e in matching) if matching is not None else None
    return C.RegularSeed(g, degrees.pop(), match)


# -- generate -------------------------------------------------------------------


def _build(args) -> tuple[Hypergraph, int | float | None, str | None, int | None]:
    """Return (hypergraph, predicted size, default freeness pattern, default t)."""
    name = args.generator
    if name == "turan":
        _need(args, "n", "parts", "r")
        h = C.gen_turan_hypergraph(args.n, args.parts, args.r)
        sizes = C.balanced_partition(args.n, args.parts).sizes
        return h, C.elementary_symmetric(sizes, args.r), f"K{args.parts + 1}", 1
    if name == "Q":
        _need(args, "n", "parts", "r", "t")
        h = C.gen_Q(args.n, args.parts, args.r, args.t)
        return h, C.q_size(args.n, args.parts, args.r, args.t), f"K{args.parts + 1}", args.t
    if name == "c1":
        _need(args, "n", "seed_file")
        seed = parse(Path(args.seed_file).read_text())
        h = C.gen_construction1(args.n, seed, args.t)
        return h, C.construction1_size(args.n, seed), None, args.t
    if name == "c2":
        _need(args, "n", "r", "t")
        h = C.gen_construction2(args.n, args.r, args.t)
        longest = 2 * (args.t - 1) * (args.r - 2) + 2
        return h, C.construction2_size(args.n, args.r, args.t), f"P{longest}", args.t
    if name == "c3":
        _need(args, "n", "t")
        if args.seed_file:
            seed = _load_regular_seed(args.seed_file)
        else:
            seed = C.regular_seed((args.t - 1) // 2 if args.t % 2 else args.t // 2)
        h = C.gen_construction3(args.n, args.t, seed)
        return h, C.construction3_size(args.n, args.t, seed), "S2", args.t
    if name == "c4":
        _need(args, "n", "t", "pattern")
        h = C.gen_construction4(args.n, args.t, load_pattern(args.pattern))
        return h, None, args.pattern, args.t
    if name == "sts":
        _need(args, "n")
        return C.gen_sts(args.n), args.n * (args.n - 1) // 6, "S2", 2
    if name == "packing":
        _need(args, "n", "r", "lam")
        h = C.gen_packing(args.n, args.r, args.lam)
        return h, C.packing_target(args.n, args.r, args.lam), "K2", args.lam + 1
    raise UsageError(f"unknown generator {name!r}")


def run_generate(args) -> int:
    h, predicted, default_pattern, default_t = _build(args)
    report = {"generator": args.generator, "size": len(h), "predicted": predicted}
    pattern = args.pattern or default_pattern
    t = args.check_t or default_t
    if pattern and t:
        witness = find_copy(h, load_pattern(pattern), t, args.check_mode)
        report["freeness"] = {"pattern": pattern, "t": t, "mode": args.check_mode,
                              "free": witness is None}
    else:
        report["freeness"] = None
    if args.out:
        Path(args.out).write_text(serialize(h) + "\n")
        Path(args.out + ".report.json").write_text(_dump(report) + "\n")
    else:
        sys.stdout.write(serialize(h) + "\n")
    if args.figure:
        from .plots import plot_multiplicities

        plot_multiplicities(h, args.figure, t)
    sys.stderr.write(_dump(report) + "\n")
    return 0


# -- check ----------------------------------------------------------------------


def run_check(args) -> int:
    h = parse(Path(args.hypergraph).read_text())
    f = load_pattern(args.pattern)
    witness = find_copy(h, f, args.t, args.mode)
    if witness is None:
        print("free")
        code = EXIT_FREE
    else:
        print("contained")
        print(witness.to_json())
        code = EXIT_CONTAINED
    if args.figure:
        from .plots import plot_multiplicities

        plot_multiplicities(h, args.figure, args.t)
    return code


# -- bounds ---------------------------------------------------------------------

_BOUND_COLUMNS = ("n", "r", "t", "pattern", "side", "name", "value")


def _bound_rows(reports):
    for rep in reports:
        for side, table in (("lower", rep.lower), ("upper", rep.upper)):
            for name in sorted(table):
                yield (rep.n, rep.r, rep.t, rep.pattern, side, name, table[name])


def format_table(columns, rows) -> str:
    cells = [list(map(str, columns))] + [list(map(str, row)) for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(w) if c.lstrip("-").isdigit() else c.ljust(w)
                       for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def format_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def run_bounds(args) -> int:
    kind = describe(args.pattern)
    stop = args.n_max if args.n_max is not None else args.n
    if stop < args.n:
        raise UsageError("--n-max must be at least --n")
    reports = [theorem_bounds(n, args.r, args.t, kind) for n in range(args.n, stop + 1)]
    if args.format == "json":
        payload = [rep.to_dict() for rep in reports]
        text = _dump(payload[0] if len(payload) == 1 else payload)
    elif args.format == "csv":
        text = format_csv(_BOUND_COLUMNS, _bound_rows(reports))
    else:
        text = format_table(_BOUND_COLUMNS, _bound_rows(reports))
    _emit(text, args.out)
    if args.figure:
        from .plots import plot_bounds

        plot_bounds(reports, args.figure)
    return 0


# -- turan-exact ------------------------------------------------------------------


def run_turan_exact(args) -> int:
    f = load_pattern(args.pattern)
    start = time.perf_counter()
    res = exact_turan(args.n, args.r, f, args.t, args.mode, node_budget=args.budget,
                      symmetry=args.symmetry)
    payload = res.to_dict()
    if args.timing:
        payload["seconds"] = round(time.perf_counter() - start, 3)
    _emit(_dump(payload), args.out)
    return 0


# -- symmetrize -----------------------------------------------------------------

_STEP_COLUMNS = ("step", "kind", "g_before", "g_after")


def run_symmetrize(args) -> int:
    g = BlueRedGraph.from_json(Path(args.input).read_text())
    res = symmetrize(g, args.k, args.r, args.t, max_steps=args.max_steps)
    if args.format == "json":
        text = _dump(res.to_dict())
    else:
        rows = [tuple(s[c] for c in _STEP_COLUMNS) for s in res.steps]
        text = (format_csv if args.format == "csv" else format_table)(_STEP_COLUMNS, rows)
    _emit(text, args.out)
    if args.final:
        Path(args.final).write_text(json.dumps(res.graph.to_dict()) + "\n")
    if args.figure:
        from .plots import plot_symmetrization

        plot_symmetrization(res, args.figure)
    return 0


# -- selftest -------------------------------------------------------------------


def run_selftest(args) -> int:
    from .acceptance import CRITERIA, run_all

    numbers = args.criteria or sorted(CRITERIA)
    unknown = [c for c in numbers if c not in CRITERIA]
    if unknown:
        raise UsageError(f"unknown criteria {unknown}; choose from {sorted(CRITERIA)}")
    results = run_all(numbers, echo=lambda line: print(line, flush=True))
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        rows = [(r.number, r.name, "pass" if r.passed else "fail", f"{r.seconds:.2f}", r.detail)
                for r in results]
        (out / "acceptance.csv").write_text(
            format_csv(("criterion", "name", "result", "seconds", "detail"), rows) + "\n")
        from .plots import plot_acceptance

        plot_acceptance(results, out / "acceptance.png")
    return 1 if failed else 0


# -- parser ---------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heavyberge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build an extremal construction")
    p.add_argument("generator", choices=GENERATORS)
    p.add_argument("--n", type=_positive)
    p.add_argument("--parts", type=_positive)
    p.add_argument("--r", type=_positive)
    p.add_argument("--t", type=_positive)
    p.add_argument("--lam", type=_positive)
    p.add_argument("--seed-file", help="seed hypergraph (c1) or regular seed graph (c3)")
    p.add_argument("--pattern", help="pattern for c4, or to override the freeness check")
    p.add_argument("--check-t", type=_positive, help="threshold for the freeness check")
    p.add_argument("--check-mode", choices=("heavy", "berge"), default="heavy")
    p.add_argument("--out", help="hypergraph JSON; the report goes to OUT.report.json")
    p.add_argument("--figure", help="multiplicity histogram PNG")
    p.set_defaults(func=run_generate)

    p = sub.add_parser("check", help="look for a t-heavy or t-wise Berge copy")
    p.add_argument("hypergraph")
    p.add_argument("--pattern", required=True)
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--mode", choices=("heavy", "berge"), default="heavy")
    p.add_argument("--figure")
    p.set_defaults(func=run_check)

    p = sub.add_parser("bounds", help="closed-form bounds for cliques, paths and cycles")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--n-max", type=_positive, help="sweep n from --n up to this value")
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--pattern", required=True, help="K<k>, P<k> or C<k>")
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--out")
    p.add_argument("--figure")
    p.set_defaults(func=run_bounds)

    p = sub.add_parser("turan-exact", help="exhaustive Turan number at small n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--mode", choices=("heavy", "berge"), default="heavy")
    p.add_argument("--budget", type=_positive, default=10_000_000)
    p.add_argument("--symmetry", action="store_true", help="fix the first r-set at the root")
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds to the output")
    p.add_argument("--out")
    p.set_defaults(func=run_turan_exact)

    p = sub.add_parser("symmetrize", help="symmetrize a K_k-free blue-red graph")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--max-steps", type=_positive, default=100_000)
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--out")
    p.add_argument("--final", help="also write the final blue-red graph here")
    p.add_argument("--figure")
    p.set_defaults(func=run_symmetrize)

    p = sub.add_parser("selftest", help="run the acceptance battery")
    p.add_argument("--criteria", type=_positive, nargs="*")
    p.add_argument("--report-dir")
    p.set_defaults(func=run_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        # ParseError, generator and bound errors all derive from ValueError
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
