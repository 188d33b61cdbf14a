"""Reporting over bench CSVs: per-target medians, engine speedup ratios,
a long-format CSV passthrough, and matplotlib figures rendered to files
next to the delimited output."""

from __future__ import annotations

import statistics
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

CSV_COLUMNS = ["target", "n1", "n2", "n3", "trials", "preprocess_ns",
               "total_ns", "updates", "queries", "table_bytes"]


@dataclass
class BenchRow:
    target: str
    n1: int
    n2: int
    n3: int
    trials: int
    preprocess_ns: int
    total_ns: int
    updates: int
    queries: int
    table_bytes: int


def parse_bench_csv(text: str) -> list[BenchRow]:
    rows = []
    lines = text.splitlines()
    if not lines:
        return rows
    header = lines[0].strip()
    if header != ",".join(CSV_COLUMNS):
        raise ValueError(f"line 1: unexpected header {header!r}")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != len(CSV_COLUMNS):
            raise ValueError(f"line {lineno}: expected {len(CSV_COLUMNS)} fields, got {len(parts)}")
        try:
            rows.append(BenchRow(parts[0], *[int(p) for p in parts[1:]]))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return rows


def summarize(rows: list[BenchRow]) -> str:
    if not rows:
        return "empty bench data\n"
    lines = []
    by_target = defaultdict(list)
    for row in rows:
        by_target[row.target].append(row)
    for target in sorted(by_target):
        group = by_target[target]
        med_total = int(statistics.median(r.total_ns for r in group))
        med_pre = int(statistics.median(r.preprocess_ns for r in group))
        lines.append(f"target={target} rows={len(group)} median_total_ns={med_total} "
                     f"median_preprocess_ns={med_pre}")
    # speedup of each non-naive engine over naive at matching sizes
    naive_at = {(r.n1, r.n2, r.n3): r.total_ns for r in by_target.get("naive", [])}
    for target in sorted(by_target):
        if target == "naive" or not target.startswith(("lookup", "tiled", "majority")):
            continue
        for row in by_target[target]:
            base = naive_at.get((row.n1, row.n2, row.n3))
            if base and row.total_ns:
                lines.append(
                    f"speedup target={target} size={row.n1}x{row.n2}x{row.n3} "
                    f"ratio={row.total_ns / base:.4f}")
    return "\n".join(lines) + "\n"


def render_figures(rows: list[BenchRow], fig_dir: Path) -> list[Path]:
    """Per-target total-time curves and the engine-vs-naive ratio chart,
    written as PNGs; returns the created paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig_dir.mkdir(parents=True, exist_ok=True)
    created = []
    by_target = defaultdict(list)
    for row in rows:
        by_target[row.target].append(row)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for target in sorted(by_target):
        pts = sorted((r.n1 * r.n2 * r.n3, r.total_ns) for r in by_target[target])
        ax.plot([p[0] for p in pts], [max(1, p[1]) for p in pts],
                marker="o", label=target)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("n1*n2*n3")
    ax.set_ylabel("total time (ns)")
    ax.set_title("total time by instance volume")
    ax.legend(fontsize=7)
    path = fig_dir / "bench_total_ns.png"
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    created.append(path)

    naive_at = {(r.n1, r.n2, r.n3): r.total_ns for r in by_target.get("naive", [])}
    ratios = []
    for target in sorted(by_target):
        if target == "naive":
            continue
        for row in by_target[target]:
            base = naive_at.get((row.n1, row.n2, row.n3))
            if base and row.total_ns:
                ratios.append((f"{target}\n{row.n1}x{row.n2}x{row.n3}",
                               row.total_ns / base))
    if ratios:
        fig, ax = plt.subplots(figsize=(max(5, 0.9 * len(ratios)), 4))
        ax.bar(range(len(ratios)), [r[1] for r in ratios])
        ax.axhline(1.0, color="k", linewidth=0.8, linestyle="--")
        ax.set_xticks(range(len(ratios)))
        ax.set_xticklabels([r[0] for r in ratios], fontsize=7)
        ax.set_ylabel("time ratio vs naive")
        ax.set_title("engine time relative to naive")
        path = fig_dir / "bench_speedup.png"
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        created.append(path)
    return created


def report(csv_text: str, out_dir: Optional[Path] = None,
           figures: bool = True) -> str:
    """Summary text; when out_dir is given, also writes the long-format
    CSV passthrough and (optionally) the figures."""
    rows = parse_bench_csv(csv_text)
    summary = summarize(rows)
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "report_summary.txt").write_text(summary)
        (out_dir / "report_long.csv").write_text(csv_text)
        if figures and rows:
            render_figures(rows, out_dir)
    return summary
