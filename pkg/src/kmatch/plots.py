"""Figure rendering for sweep output, written next to the CSV."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_counts_figure(rows: list[dict], path: str) -> None:
    """Candidate sizes against n, one line per family label."""
    series: dict[str, list[tuple[int, int]]] = {}
    for row in rows:
        label = row["family"] if row["i"] == "" else f"{row['family']} i={row['i']}"
        series.setdefault(label, []).append((row["n"], row["count"]))
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, pts in series.items():
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=label)
    ax.set_xlabel("n")
    ax.set_ylabel("edges")
    values = [p[1] for pts in series.values() for p in pts if p[1] > 0]
    if values and max(values) > 100 * max(min(values), 1):
        ax.set_yscale("log")
    ax.legend(fontsize=8)
    ax.set_title("candidate family sizes")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_conjecture_figure(rows: list[dict], path: str) -> None:
    """Candidate maxima and exact optimum (where available) against n."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ns = [row["n"] for row in rows]
    ax.plot(ns, [row["paper_max"] for row in rows], marker="o", label="candidate max")
    feasible = [(row["n"], row["feasible_max"]) for row in rows
                if row["feasible_max"] != ""]
    if feasible:
        ax.plot([p[0] for p in feasible], [p[1] for p in feasible], marker="s",
                label="feasible candidate max")
    exact = [(row["n"], row["exact"]) for row in rows if row["exact"] != ""]
    if exact:
        ax.plot([p[0] for p in exact], [p[1] for p in exact], linestyle="none",
                marker="x", markersize=9, color="black", label="exact optimum")
    ax.set_xlabel("n")
    ax.set_ylabel("edges")
    ax.legend(fontsize=8)
    ax.set_title("extremal value vs candidates")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
