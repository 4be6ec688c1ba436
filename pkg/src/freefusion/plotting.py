"""Figure rendering for the report path. Files only, no interactive backends."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .generation import BLACK, GenerationReport, HypercubeGraph

__all__ = ["render_graph_figure", "render_scan_figure"]


def _layered_positions(g: HypercubeGraph) -> dict:
    """Place vertices in columns by distance from the first vertex."""
    dist = g.bfs_distances(g.vertices[0])
    layers: dict[int, list] = {}
    for v in sorted(g.vertices):
        layers.setdefault(dist[v], []).append(v)
    pos = {}
    for d, vs in layers.items():
        for i, v in enumerate(vs):
            pos[v] = (float(d), i - (len(vs) - 1) / 2.0)
    return pos


def render_graph_figure(g: HypercubeGraph, path: str) -> None:
    pos = _layered_positions(g)
    fig, ax = plt.subplots(figsize=(1.8 + 1.6 * (g.k + 1), 4.5))
    for a, b in sorted(g.edges, key=lambda e: (min(e), max(e))):
        xa, ya = pos[a]
        xb, yb = pos[b]
        ax.plot([xa, xb], [ya, yb], color="#999999", linewidth=0.9, zorder=1)
    for v in g.vertices:
        x, y = pos[v]
        dark = g.coloring[v] == BLACK
        ax.scatter(
            [x], [y],
            s=320,
            facecolor="#222222" if dark else "#ffffff",
            edgecolor="#222222",
            zorder=2,
        )
        if len(g.vertices) <= 32:
            ax.annotate(
                str(v), (x, y),
                ha="center", va="center",
                fontsize=7,
                color="#ffffff" if dark else "#222222",
                zorder=3,
            )
    ax.set_title(f"two-factor products among the {len(g.vertices)} star classes of degree {g.k + 1}")
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_scan_figure(reports: list[GenerationReport], path: str) -> None:
    ks = [r.k for r in reports]
    dims = [r.component_dim for r in reports]
    ranks = [r.span_rank for r in reports]
    width = 0.38
    fig, ax = plt.subplots(figsize=(1.5 + 1.1 * len(ks), 4.2))
    ax.bar([k - width / 2 for k in ks], dims, width, label="component dimension", color="#4878a8")
    ax.bar([k + width / 2 for k in ks], ranks, width, label="two-factor span rank", color="#d0894a")
    for k, d, r in zip(ks, dims, ranks):
        ax.annotate(str(d - r), (k, max(d, r)), ha="center", va="bottom", fontsize=8)
    ax.set_xlabel("k (slice = degree k+1)")
    ax.set_ylabel("count")
    ax.set_xticks(ks)
    if max(dims) > 64:
        ax.set_yscale("log", base=2)
    ax.set_title("span gap per degree slice (annotation: missing dimensions)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
