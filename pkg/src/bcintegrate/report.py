"""Render conflict reports: JSON and fixed-width text for the console,
CSV plus matplotlib figures for the report directory.

The JSON and text renderings are fully deterministic (identical inputs
give byte-identical output); scores always print as exact rationals.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .align import AggregateResult, SimilarityMatrix
from .conflicts import ConflictReport, PairVerdict, Verdict

VERDICT_ORDER = [Verdict.EQUAL, Verdict.SYNONYMOUS,
                 Verdict.HOMONYM_NAMING_CONFLICT, Verdict.DIFFERENT]


def format_score(value: Fraction) -> str:
    """Exact rational rendering: "1", "0", "1/2" -- never a decimal."""
    return str(value)


def verdict_to_dict(pv: PairVerdict) -> dict:
    return {
        "left": {"system": pv.left[0], "component": pv.left[1]},
        "right": {"system": pv.right[0], "component": pv.right[1]},
        "verdict": pv.verdict.value,
        "sigma_prime": pv.sigma_prime,
        "sigma": format_score(pv.sigma),
        "roots_synonym": pv.roots_synonym,
        "evidence": [
            {
                "left": f.left,
                "right": f.right,
                "sigma": format_score(f.sigma),
                "rule": f.rule,
            }
            for f in pv.evidence
        ],
    }


def report_to_dict(report: ConflictReport) -> dict:
    return {
        "verdicts": [verdict_to_dict(pv) for pv in report.verdicts],
        "summary": {v.value: report.counts.get(v, 0) for v in VERDICT_ORDER},
    }


def report_to_json(report: ConflictReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False,
                      sort_keys=True) + "\n"


def report_to_text(report: ConflictReport) -> str:
    """Fixed-width verdict table plus the summary counts."""
    rows = [
        (f"{pv.left[0]}/{pv.left[1]}", f"{pv.right[0]}/{pv.right[1]}",
         str(pv.sigma_prime), format_score(pv.sigma), pv.verdict.value)
        for pv in report.verdicts
    ]
    header = ("left", "right", "sigma'", "sigma", "verdict")
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
              for i in range(5)]
    out = io.StringIO()
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out.write(fmt.format(*header).rstrip() + "\n")
    out.write(fmt.format(*("-" * w for w in widths)).rstrip() + "\n")
    for r in rows:
        out.write(fmt.format(*r).rstrip() + "\n")
    out.write("\n")
    for v in VERDICT_ORDER:
        out.write(f"{v.value}: {report.counts.get(v, 0)}\n")
    return out.getvalue()


def matrix_to_text(result: AggregateResult) -> str:
    """Similarity matrix with labels, then the exact score."""
    m = result.matrix
    left_w = max((len(l) for l in m.left_labels), default=0)
    col_ws = [max(len(lbl), *(len(format_score(row[j])) for row in m.cells))
              if m.cells else len(lbl)
              for j, lbl in enumerate(m.right_labels)]
    out = io.StringIO()
    out.write(" " * left_w)
    for lbl, w in zip(m.right_labels, col_ws):
        out.write("  " + lbl.rjust(w))
    out.write("\n")
    for i, lbl in enumerate(m.left_labels):
        out.write(lbl.ljust(left_w))
        for j, w in enumerate(col_ws):
            out.write("  " + format_score(m.cells[i][j]).rjust(w))
        out.write("\n")
    out.write(f"score: {format_score(result.score)}\n")
    return out.getvalue()


def aggregate_to_dict(result: AggregateResult) -> dict:
    return {
        "score": format_score(result.score),
        "matching": [list(p) for p in result.matching],
        "matrix": {
            "left_labels": list(result.matrix.left_labels),
            "right_labels": list(result.matrix.right_labels),
            "cells": [[format_score(c) for c in row] for row in result.matrix.cells],
        },
    }


# ---------------------------------------------------------------------------
# report directory: delimited output + figures
# ---------------------------------------------------------------------------

def write_verdicts_csv(report: ConflictReport, path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["left_system", "left_component", "right_system",
                         "right_component", "sigma_prime", "sigma", "verdict"])
        for pv in report.verdicts:
            writer.writerow([pv.left[0], pv.left[1], pv.right[0], pv.right[1],
                             pv.sigma_prime, format_score(pv.sigma), pv.verdict.value])


def _slug(text: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in text)


def render_matrix_figure(matrix: SimilarityMatrix, title: str, path: Path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    nl = len(matrix.left_labels)
    nr = len(matrix.right_labels)
    data = [[float(c) for c in row] for row in matrix.cells] or [[0.0]]
    fig, ax = plt.subplots(figsize=(max(3, 0.9 * nr + 2), max(3, 0.9 * nl + 2)))
    im = ax.imshow(data, cmap="Blues", vmin=0.0, vmax=1.0)
    ax.set_xticks(range(nr), labels=matrix.right_labels, rotation=45,
                  ha="right", fontsize=8)
    ax.set_yticks(range(nl), labels=matrix.left_labels, fontsize=8)
    for i in range(nl):
        for j in range(nr):
            ax.text(j, i, format_score(matrix.cells[i][j]),
                    ha="center", va="center", fontsize=8,
                    color="white" if data[i][j] > 0.5 else "black")
    ax.set_title(title, fontsize=10)
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_summary_figure(report: ConflictReport, path: Path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = [v.value for v in VERDICT_ORDER]
    values = [report.counts.get(v, 0) for v in VERDICT_ORDER]
    colors = ["#4c9f70", "#4c72b0", "#c44e52", "#8c8c8c"]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(labels, values, color=colors)
    ax.set_ylabel("pairs")
    ax.set_title("verdicts by class")
    ax.tick_params(axis="x", labelsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report_directory(report: ConflictReport, ontologies, domain,
                           directory: Path) -> list[Path]:
    """Write verdicts.csv, summary.png and one heatmap per scored pair.

    Returns the written paths.
    """
    from .align import aggregate_similarity

    by_source = {co.source: co for co in ontologies}
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    csv_path = directory / "verdicts.csv"
    write_verdicts_csv(report, csv_path)
    written.append(csv_path)
    summary_path = directory / "summary.png"
    render_summary_figure(report, summary_path)
    written.append(summary_path)
    for pv in report.verdicts:
        left = by_source.get(pv.left)
        right = by_source.get(pv.right)
        if left is None or right is None:
            continue
        result = aggregate_similarity(left, right, domain)
        if not result.matrix.left_labels:
            continue
        name = (f"matrix_{_slug(pv.left[0])}_{_slug(pv.left[1])}"
                f"__{_slug(pv.right[0])}_{_slug(pv.right[1])}.png")
        title = (f"{pv.left[0]}/{pv.left[1]} vs {pv.right[0]}/{pv.right[1]} "
                 f"(sigma = {format_score(result.score)})")
        fig_path = directory / name
        render_matrix_figure(result.matrix, title, fig_path)
        written.append(fig_path)
    return written
