"""Matplotlib figures written next to the delimited reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_STYLE = {"figure.dpi": 100, "savefig.dpi": 150, "axes.grid": True, "grid.alpha": 0.3,
          "axes.spines.top": False, "axes.spines.right": False, "font.size": 10}


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps PNG bytes reproducible
    fig.savefig(path, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path


def plot_bounds(reports, path):
    """Lower and upper bounds against n for a sweep of BoundReports."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        ns = [rep.n for rep in reports]
        names = sorted({k for rep in reports for k in rep.lower})
        for name in names:
            pts = [(rep.n, rep.lower[name]) for rep in reports if name in rep.lower]
            ax.plot(*zip(*pts), marker="o", ms=3, label=f"lower: {name}")
        names = sorted({k for rep in reports for k in rep.upper})
        for name in names:
            pts = [(rep.n, rep.upper[name]) for rep in reports if name in rep.upper]
            ax.plot(*zip(*pts), ls="--", marker="s", ms=3, label=f"upper: {name}")
        first = reports[0]
        ax.set_title(f"{first.pattern}, r={first.r}, t={first.t}")
        ax.set_xlabel("n")
        ax.set_ylabel("hyperedges")
        ax.set_xlim(min(ns), max(ns))
        ax.legend(frameon=False, fontsize=8)
        return _save(fig, path)


def plot_symmetrization(result, path):
    """g_{r,t} after every logged symmetrization step."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6.4, 3.6))
        values = [result.g_initial] + [s["g_after"] for s in result.steps]
        ax.step(range(len(values)), values, where="post", color="tab:blue")
        kinds = ["start"] + [s["kind"] for s in result.steps]
        for kind, marker in (("vertex", "o"), ("part", "s"), ("recolour-blue", "^"),
                             ("recolour-red", "v"), ("balance", "D"), ("monochrome", "x")):
            xs = [i for i, k in enumerate(kinds) if k == kind]
            if xs:
                ax.plot(xs, [values[i] for i in xs], ls="none", marker=marker, ms=4, label=kind)
        ax.set_xlabel("step")
        ax.set_ylabel("g")
        if len(values) > 1:
            ax.legend(frameon=False, fontsize=8)
        return _save(fig, path)


def plot_multiplicities(h, path, t=None):
    """Histogram of pair multiplicities in the shadow, with the heavy threshold marked."""
    from .hypergraph import shadow_multiplicity

    counts = shadow_multiplicity(h).mult
    pairs = h.n * (h.n - 1) // 2
    hist: dict[int, int] = {0: pairs - len(counts)}
    for c in counts.values():
        hist[c] = hist.get(c, 0) + 1
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6.4, 3.6))
        xs = sorted(hist)
        ax.bar(xs, [hist[x] for x in xs], color="tab:gray")
        if t is not None:
            ax.axvline(t - 0.5, color="tab:red", ls="--", label=f"t = {t}")
            ax.legend(frameon=False)
        ax.set_xlabel("pair multiplicity")
        ax.set_ylabel("pairs")
        ax.set_yscale("symlog", linthresh=1)
        return _save(fig, path)


def plot_acceptance(results, path):
    """Runtime per criterion, coloured by outcome."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6.4, 3.6))
        xs = [r.number for r in results]
        colours = ["tab:green" if r.passed else "tab:red" for r in results]
        ax.bar(xs, [max(r.seconds, 1e-3) for r in results], color=colours)
        ax.set_yscale("log")
        ax.set_xticks(xs)
        ax.set_xlabel("criterion")
        ax.set_ylabel("seconds")
        return _save(fig, path)
