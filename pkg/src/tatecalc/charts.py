"""Chart rendering for E2 pages: filtration degree l across, weight q up.

Output is SVG via matplotlib, pinned to be byte-identical across runs: fixed
hash salt for element ids, no date metadata, Agg backend.  Cells show how many
basis classes they hold; cells containing a plain generator get its label,
product classes are summarized by count (big pages stay readable, generators
stay visible).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

matplotlib.rcParams["svg.hashsalt"] = "tatecalc"


def render_page(page):
    """Build a matplotlib Figure for the page; caller owns closing it."""
    cells = page.cells_lq()
    gen_cells = {}
    for kind_i, key in page.generator_keys().items():
        tri = page.tridegree_of(key)
        if tri.q <= page.max_weight:
            gen_cells.setdefault((tri.l, tri.q), []).append(page.label(key))

    max_l = max((lq[0] for lq in cells), default=0)
    max_q = max(page.max_weight, 1)

    fig, ax = plt.subplots(figsize=(1.0 + 0.9 * (max_l + 2), 1.0 + 0.55 * (max_q + 2)))
    ax.set_xlim(-0.6, max_l + 0.9)
    ax.set_ylim(-0.6, max_q + 0.9)
    ax.set_xticks(range(max_l + 1))
    ax.set_yticks(range(max_q + 1))
    ax.set_xlabel("l")
    ax.set_ylabel("q")
    ax.set_title(
        "E2 page, signature (%s), %s, weight <= %d"
        % (", ".join(map(str, page.signature)), page.variant, page.max_weight)
    )
    ax.grid(True, linewidth=0.3, alpha=0.4)
    ax.set_axisbelow(True)

    if cells:
        xs, ys = zip(*sorted(cells))
        dots = ax.scatter(xs, ys, s=18, color="black", zorder=3)
        dots.set_gid("e2-classes")
        for (l, q) in sorted(cells):
            labels = gen_cells.get((l, q), [])
            count = len(cells[(l, q)])
            extra = count - len(labels)
            text_parts = list(labels)
            if extra > 0:
                text_parts.append("×%d" % count if not labels else "+%d" % extra)
            ax.annotate(
                "  " + ", ".join(text_parts),
                (l, q),
                fontsize=7,
                va="center",
                ha="left",
            )
    return fig


def save_page_svg(page, path) -> None:
    """Write the chart as deterministic SVG 1.1."""
    fig = render_page(page)
    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
