"""Report rendering: matplotlib figures written next to the delimited
output of the CLI report path."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def write_weights_report(out_dir: str | Path, global_weights: dict[str, float],
                         per_cluster=None) -> list[Path]:
    """weights.csv plus a bar chart of the global weights; per-cluster
    locals get their own columns when present."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    csv_path = out_dir / "weights.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["disorder", "weight"])
        for d, w in sorted(global_weights.items(), key=lambda kv: -kv[1]):
            writer.writerow([d, f"{w:.6f}"])
    written.append(csv_path)

    fig, ax = plt.subplots(figsize=(7, 4))
    items = sorted(global_weights.items(), key=lambda kv: -kv[1])
    ax.bar([d for d, _ in items], [w for _, w in items], color="#4878a8")
    ax.set_ylabel("weight")
    ax.set_title("Disorder weights")
    fig.tight_layout()
    fig_path = out_dir / "weights.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(fig_path)

    if per_cluster:
        fig, axes = plt.subplots(1, len(per_cluster),
                                 figsize=(3.0 * len(per_cluster), 3.5),
                                 squeeze=False)
        for ax, (cid, local) in zip(axes[0], per_cluster.items()):
            ax.bar(list(local), list(local.values()), color="#6aa06a")
            ax.set_title(cid)
            ax.tick_params(axis="x", rotation=45)
        fig.suptitle("Local weights per cluster")
        fig.tight_layout()
        path = out_dir / "weights_per_cluster.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)
    return written


def write_trisection_report(out_dir: str | Path, values: dict[str, float],
                            h: float, l: float, regions: dict[str, list[str]]) -> list[Path]:
    """trisection.csv plus a value-axis figure with the h/l thresholds and
    region membership colour-coded."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    region_of = {}
    for name, members in regions.items():
        for d in members:
            region_of[d] = name

    csv_path = out_dir / "trisection.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["disorder", "value", "region"])
        for d, v in sorted(values.items(), key=lambda kv: -kv[1]):
            writer.writerow([d, f"{v:.6f}", region_of.get(d, "")])
    written.append(csv_path)

    colors = {"high": "#b84040", "medium": "#c8a848", "low": "#4878a8"}
    items = sorted(values.items(), key=lambda kv: -kv[1])
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar([d for d, _ in items],
           [v for _, v in items],
           color=[colors.get(region_of.get(d, ""), "#888888") for d, _ in items])
    ax.axhline(h, color="#b84040", linestyle="--", label=f"h = {h:.4f}")
    ax.axhline(l, color="#4878a8", linestyle="--", label=f"l = {l:.4f}")
    ax.set_ylabel("value")
    ax.set_title("Trisection into H / M / L")
    ax.legend()
    fig.tight_layout()
    fig_path = out_dir / "trisection.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(fig_path)
    return written
