"""Figures for verification reports. Floats appear here only for drawing."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STATUS_STYLE = {
    "holds": dict(marker="o", color="tab:blue", label="holds"),
    "equality": dict(marker="*", color="tab:green", label="equality", s=90),
    "violation": dict(marker="x", color="tab:red", label="violation", s=70),
}


def slack_figure(results: Sequence, path: str | Path, title: str = "Bound slack per graph") -> Path:
    """Strip plot of rhs - lhs (oriented so >= 0 means the bound holds) for every decided verdict."""
    points = defaultdict(list)
    order = []
    for r in results:
        for v in r.verdicts:
            s = v.slack
            if s is None:
                continue
            if v.theorem_id not in order:
                order.append(v.theorem_id)
            points[v.status].append((v.theorem_id, s))

    fig, ax = plt.subplots(figsize=(max(6.0, 0.7 * len(order) + 2), 4.5))
    xpos = {t: i for i, t in enumerate(order)}
    seen = defaultdict(int)
    for status, pts in points.items():
        xs, ys = [], []
        for tid, s in pts:
            k = seen[tid]
            seen[tid] += 1
            xs.append(xpos[tid] + ((k % 7) - 3) * 0.05)
            ys.append(s)
        style = dict(STATUS_STYLE.get(status, dict(marker=".", color="grey", label=status)))
        size = style.pop("s", 25)
        ax.scatter(xs, ys, s=size, alpha=0.7, **style)
    ax.axhline(0.0, color="k", lw=0.8, ls="--")
    ax.set_xticks(range(len(order)))
    ax.set_xticklabels(order, rotation=45, ha="right")
    ax.set_ylabel("slack (rhs - lhs)")
    ax.set_title(title)
    if points:
        ax.legend(loc="best", frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def status_figure(summary: dict, path: str | Path) -> Path:
    """Bar chart of verdict counts from a report summary."""
    counts = summary["bounds"]
    labels = list(counts)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    colors = ["tab:blue", "tab:green", "tab:gray", "tab:orange", "tab:red"]
    ax.bar(labels, [counts[k] for k in labels], color=colors[: len(labels)])
    ax.set_ylabel("verdicts")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
