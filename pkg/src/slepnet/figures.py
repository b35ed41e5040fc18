"""Matplotlib figure rendering with byte-reproducible SVG output.

Output is deterministic for identical input: a fixed hash salt for
element ids, no embedded creation date, text emitted as text (not font
paths), and sorted category order for colors and legend entries.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .errors import NotTwoDimensionalError

# Fixed 12-color categorical palette; categories are assigned colors in
# sorted tag order, wrapping around if more than 12 appear.
PALETTE = (
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377",
    "#bbbbbb", "#004488", "#997700", "#6699cc", "#994455", "#225522",
)
DEFAULT_COLOR = "#555555"
_SVG_RC = {"svg.hashsalt": "slepnet", "svg.fonttype": "none"}


def _save(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def _padded_limits(values, margin=0.05):
    lo, hi = float(np.min(values)), float(np.max(values))
    if hi == lo:
        return lo - 1.0, hi + 1.0  # degenerate extent guard
    pad = margin * (hi - lo)
    return lo - pad, hi + pad


def category_colors(tags):
    """Fixed palette assignment for a collection of tags, sorted order."""
    return {t: PALETTE[k % len(PALETTE)] for k, t in enumerate(sorted(set(tags)))}


def render_scatter_svg(coords, node_ids, path, meta=None, sel=None, title=None):
    """Scatter plot of a 2-D embedding, one circle per node.

    Fill color follows each node's first category tag; selected nodes
    get a dark ring stroke. Axes fit the data with 5% margins; the
    legend lists the categories in sorted order.
    """
    mat = np.asarray(coords.coords)
    if mat.shape[1] != 2:
        raise NotTwoDimensionalError(
            f"scatter needs 2-D coordinates, got {mat.shape[1]}"
        )
    selected = set(sel.members) if sel is not None else set()

    if meta is not None:
        first_tags = [meta.first_tag(n) for n in node_ids]
        colors = category_colors(first_tags)
        groups = [(tag, [k for k, t in enumerate(first_tags) if t == tag])
                  for tag in sorted(set(first_tags))]
    else:
        colors = {}
        groups = [(None, list(range(len(node_ids))))]

    with matplotlib.rc_context(_SVG_RC):
        fig, ax = plt.subplots(figsize=(7.0, 5.6))
        for tag, nodes in groups:
            face = colors.get(tag, DEFAULT_COLOR)
            edge = ["#222222" if k in selected else "none" for k in nodes]
            width = [1.4 if k in selected else 0.0 for k in nodes]
            pc = ax.scatter(
                mat[nodes, 0], mat[nodes, 1], s=42, c=face,
                edgecolors=edge, linewidths=width, zorder=3,
                label=tag if tag is not None else None,
            )
            pc.set_gid(f"nodes-{tag}" if tag is not None else "nodes")
        ax.set_xlim(*_padded_limits(mat[:, 0]))
        ax.set_ylim(*_padded_limits(mat[:, 1]))
        ax.set_xlabel(coords.axis_labels[0])
        ax.set_ylabel(coords.axis_labels[1])
        if title:
            ax.set_title(title)
        if meta is not None:
            ax.legend(loc="best", frameon=True, fontsize=9)
        ax.grid(True, linewidth=0.4, alpha=0.4)
        _save(fig, path)


def render_sweep_svg(rows, path, title=None):
    """Line plot of sweep totals against bandwidth.

    Shows the graph-bandwidth product next to the summed energy
    concentrations of both designs and the summed embedded-distance
    eigenvalues (the series that carries the gap).
    """
    nw = [r.bandwidth for r in rows]
    series = [
        ("K (graph-bandwidth product)", [r.shannon for r in rows], "o-"),
        ("sum mu, concentration", [r.sum_mu_concentration for r in rows], "s-"),
        ("sum mu, embedded", [r.sum_mu_embedded for r in rows], "^--"),
        ("sum xi, embedded", [r.sum_xi_embedded for r in rows], "d-"),
    ]
    with matplotlib.rc_context(_SVG_RC):
        fig, ax = plt.subplots(figsize=(7.0, 5.0))
        for k, (label, ys, style) in enumerate(series):
            ax.plot(nw, ys, style, color=PALETTE[k], label=label,
                    markersize=4.5, linewidth=1.5)
        ax.set_xlabel("bandwidth")
        ax.set_ylabel("total")
        if title:
            ax.set_title(title)
        ax.legend(loc="upper left", frameon=True, fontsize=9)
        ax.grid(True, linewidth=0.4, alpha=0.4)
        _save(fig, path)
