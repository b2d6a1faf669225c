"""Matplotlib rendering of a presentation's 1-skeleton (used for windows)."""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

LINESTYLES = {1: "solid", 2: "dashed", 3: "dotted", 4: "dashdot"}


def _layout(p):
    """Grid-like positions when every vertex is a window vertex of a
    2-graph, otherwise a seeded spring layout."""
    g = nx.DiGraph()
    g.add_nodes_from(p.vertices)
    g.add_edges_from((e.source, e.range) for e in p.edges.values())
    pos = nx.spring_layout(g, seed=0)
    if p.rank != 2:
        return pos
    # pull added vertices onto offsets from their base
    for v, (base, offset) in p.ext_vertices.items():
        bx, by = pos[base]
        pos[v] = (bx + 0.35 * offset[0], by + 0.35 * offset[1])
    return pos


def plot_presentation(p, out, title=None):
    pos = _layout(p)
    fig, ax = plt.subplots(figsize=(6, 6))
    for e in p.edges.values():
        (x0, y0), (x1, y1) = pos[e.source], pos[e.range]
        added = e.source in p.ext_vertices
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", linestyle=LINESTYLES.get(e.color, "solid"),
                                    color="0.5" if added else "black",
                                    lw=1.0 if added else 2.0))
    for v in p.vertices:
        x, y = pos[v]
        if v in p.ext_vertices:
            ax.plot(x, y, "o", mfc="white", mec="0.4", ms=7)
        else:
            ax.plot(x, y, "o", mfc="white", mec="black", ms=11, mew=1.5)
            ax.plot(x, y, "o", mfc="black", ms=5)
            ax.annotate(v, (x, y), xytext=(6, 6), textcoords="offset points", fontsize=9)
    ax.set_title(title or f"k={p.rank}, {len(p.vertices)} vertices")
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out
