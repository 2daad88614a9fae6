"""Bar-chart rendering of a correspondence catalogue to an image file."""

from __future__ import annotations

from pathlib import Path

from .classify import PAIR_CLASS_ORDER, CorrespondenceCatalog

# compact axis labels; the full class names overflow any reasonable figure
_SHORT = {
    "SYMMETRIC_EXCLUSIVE": "sym excl",
    "SYMMETRIC_NONEXCLUSIVE": "sym nonexcl",
    "DIVERGENT": "divergent",
    "CONVERGENT": "convergent",
    "MANY_TO_MANY": "many:many",
    "NON_RECIPROCAL": "non-recip",
}


def render_catalog_figure(cat: CorrespondenceCatalog, path: str | Path) -> Path:
    """Write the class distribution and per-language lacuna counts as a
    two-panel figure.  The format follows the file suffix (png, svg, pdf)."""
    # imported lazily so that plain CLI runs never pay the matplotlib cost
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    fig = Figure(figsize=(10, 4), dpi=120)
    FigureCanvasAgg(fig)
    left, right = fig.subplots(1, 2, width_ratios=(3, 1))

    labels = [_SHORT[cls.value] for cls in PAIR_CLASS_ORDER]
    values = [cat.counts[cls] for cls in PAIR_CLASS_ORDER]
    left.bar(range(len(values)), values, color="#4a6fa5")
    left.set_xticks(range(len(labels)))
    left.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
    left.set_ylabel("pairs")
    left.set_title(f"correspondence classes ({cat.total_pairs} pairs)")

    langs = sorted(cat.lacunae)
    holes = [len(cat.lacunae[lang]) for lang in langs]
    right.bar(range(len(holes)), holes, color="#a54a4a")
    right.set_xticks(range(len(langs)))
    right.set_xticklabels(langs)
    right.set_ylabel("senses")
    right.set_title("lacunae")

    for axis in (left, right):
        axis.yaxis.get_major_locator().set_params(integer=True)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    return path
