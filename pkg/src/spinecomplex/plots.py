"""Figure rendering for analysis and census reports.

Figures display computed invariants only (curve statistics, class
distributions); the complexes themselves are never drawn.  Files are
rendered with the Agg backend so the CLI works headless.
"""

from __future__ import annotations

import os


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_analysis_figure(report: dict, path: str) -> str:
    """Bar chart of per-curve word length and even-letter count."""
    plt = _pyplot()
    curves = report["curves"]
    idx = [c["index"] for c in curves]
    lengths = [c["length"] for c in curves]
    evens = [c["even_letters"] for c in curves]

    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    width = 0.4
    ax.bar([i - width / 2 for i in idx], lengths, width, label="word length", color="#3b6ea5")
    ax.bar([i + width / 2 for i in idx], evens, width, label="even letters", color="#c45339")
    ax.set_xticks(idx)
    ax.set_xlabel("boundary curve")
    ax.set_ylabel("count")
    name = report["spec"]["name"] or "spec"
    verdict = report["verdict"]["embeddable_orientable"]
    ax.set_title(
        f"{name}: chi={report['chi']}, "
        f"{'embeddable' if verdict else 'not embeddable'}"
    )
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_census_figure(census_result, path: str) -> str:
    """Class sizes grouped by chi, split by embeddability verdict."""
    plt = _pyplot()
    classes = census_result.classes
    fig, ax = plt.subplots(figsize=(7.2, 4.0))
    xs = range(1, len(classes) + 1)
    sizes = [c.size for c in classes]
    colors = ["#2e7d32" if c.embeddable else "#b23b3b" for c in classes]
    ax.bar(xs, sizes, color=colors)
    for x, c in zip(xs, classes):
        ax.text(x, c.size + 0.3, f"chi={c.chi}", ha="center", fontsize=7)
    ax.set_xticks(list(xs))
    ax.set_xlabel("class (first-seen order; green = embeddable)")
    ax.set_ylabel("gluings in class")
    ax.set_title(
        f"census n={census_result.n_pieces}: {census_result.raw_count} gluings, "
        f"{census_result.class_count} classes, "
        f"{census_result.embeddable_class_count} embeddable"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def figure_dir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path
