"""Figure rendering for the reporting commands (bench, stats).

Figures are written straight to files with the Agg backend, so the CLI
works on headless machines; nothing here touches stdout.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_bench_figure(rates: list[float], median: float, path) -> None:
    """Per-repetition throughput bars with the median marked."""
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    xs = range(1, len(rates) + 1)
    ax.bar(xs, rates, color="#4878cf", width=0.6)
    ax.axhline(median, color="#d65f5f", linestyle="--", linewidth=1.2,
               label=f"median {median:,.0f} w/s")
    ax.set_xlabel("repetition")
    ax.set_ylabel("words / second")
    ax.set_xticks(list(xs))
    ax.set_title("analysis throughput")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_stats_figure(category_counts: dict[str, int], path, top: int = 12) -> None:
    """Horizontal bars of entry counts per grammatical category."""
    ranked = sorted(category_counts.items(), key=lambda kv: kv[1], reverse=True)[:top]
    ranked.reverse()
    labels = [k for k, _ in ranked]
    values = [v for _, v in ranked]
    fig, ax = plt.subplots(figsize=(6.4, 0.45 * max(len(ranked), 4) + 1.2))
    ax.barh(labels, values, color="#6acc65")
    ax.set_xlabel("dictionary entries")
    ax.set_title("entries per category")
    for i, v in enumerate(values):
        ax.text(v, i, f" {v:,}", va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
