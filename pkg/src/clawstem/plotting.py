"""Matplotlib figures written next to CLI reports."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .graph import Graph  # noqa: E402
from .tree import TreeSubgraph  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def layout(g: Graph, seed: int = 0) -> list[tuple[float, float]]:
    """Deterministic spring layout."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    pos = nx.spring_layout(h, seed=seed)
    return [tuple(pos[v]) for v in range(g.n)]


def draw_tree(
    g: Graph,
    tree: TreeSubgraph,
    path: str,
    title: str = "",
    highlight: Iterable[int] = (),
    labels: Optional[list[str]] = None,
) -> None:
    """Host graph in grey, tree edges in black; stem vertices filled, branch vertices red.

    ``highlight`` vertices (e.g. a certificate) are drawn as squares.
    """
    pos = layout(g)
    prof = tree.profile
    marked = set(highlight)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 5))
        for u, v in g.edges:
            ax.plot(*zip(pos[u], pos[v]), color="0.85", lw=0.8, zorder=1)
        for u, v in tree.edges:
            ax.plot(*zip(pos[u], pos[v]), color="black", lw=1.8, zorder=2)
        for v in range(g.n):
            if v in prof.stem_branch_vertices:
                face = "tab:red"
            elif v in prof.stem_vertices:
                face = "tab:blue"
            elif v in tree.vertices:
                face = "white"
            else:
                face = "0.7"
            ax.scatter(*pos[v], s=170, marker="s" if v in marked else "o",
                       facecolor=face, edgecolor="black", zorder=3)
            ax.annotate(labels[v] if labels else str(v), pos[v], ha="center", va="center",
                        fontsize=7, color="white" if face in ("tab:red", "tab:blue") else "black", zorder=4)
        ax.set_title(title or f"stem branch vertices: {prof.branch_count}")
        ax.set_aspect("equal")
        ax.axis("off")
        fig.savefig(path)
        plt.close(fig)


def draw_validation(summary, path: str) -> None:
    """Outcome counts and proof-search iteration counts by graph order."""
    tally = summary.tally()
    iters = defaultdict(list)
    for o in summary.outcomes:
        iters[o.n].append(o.proof_iterations)
    with plt.rc_context(STYLE):
        fig, (a1, a2) = plt.subplots(1, 2, figsize=(10, 4))
        names = list(tally)
        bars = a1.barh(range(len(names)), [tally[k] for k in names], color="tab:blue")
        a1.bar_label(bars, padding=2, fontsize=7)
        a1.set_yticks(range(len(names)))
        a1.set_yticklabels(names, fontsize=7)
        a1.set_xlabel("instances")
        a1.set_title(f"seed {summary.seed}: {len(summary.contradictions)} contradictions")
        orders = sorted(iters)
        a2.boxplot([iters[n] for n in orders], positions=orders, widths=0.6)
        a2.set_xlabel("graph order")
        a2.set_ylabel("moves applied")
        a2.set_title("proof-search moves to termination")
        fig.savefig(path)
        plt.close(fig)
