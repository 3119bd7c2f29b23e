"""Figure rendering for the report paths.

Figures are written next to the delimited report output; the Agg backend
keeps everything headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_poincare_figure(hist: dict[int, int], path, title: str):
    """Bar chart of graded dimensions (degree -> multiplicity)."""
    degrees = sorted(hist)
    counts = [hist[d] for d in degrees]
    fig, ax = plt.subplots(figsize=(6, 3.4))
    ax.bar(degrees, counts, width=0.8, color="#39618f")
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.set_title(title)
    ax.set_xticks(degrees)
    for d, c in zip(degrees, counts):
        ax.annotate(str(c), (d, c), ha="center", va="bottom", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_suite_figure(summary: dict[str, tuple[int, int, int]], path, title: str):
    """Stacked horizontal bars of pass/fail/trivial counts per suite."""
    names = list(summary)
    passes = [summary[s][0] for s in names]
    fails = [summary[s][1] for s in names]
    trivial = [summary[s][2] for s in names]
    ypos = range(len(names))
    fig, ax = plt.subplots(figsize=(7, 0.45 * max(len(names), 4) + 1.2))
    ax.barh(ypos, passes, color="#2e7d32", label="pass")
    ax.barh(ypos, trivial, left=passes, color="#9e9e9e", label="trivial")
    base = [p + t for p, t in zip(passes, trivial)]
    ax.barh(ypos, fails, left=base, color="#c62828", label="fail")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("cases")
    ax.set_title(title)
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
