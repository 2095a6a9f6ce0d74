"""Render collapse bar charts and training-dynamics curves from CSVs.

Rendering is a pure function of the input CSV: the SVG backend is salted,
timestamps are stripped, and rows are processed in sorted order, so the
same CSV yields byte-identical output.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "slotbench-figures"

import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["FigureSpec", "MissingColumns", "read_rows", "render_bars",
           "render_curves", "save_figure"]

BAR_COLUMNS = ("task", "variant", "mean", "std")
CURVE_COLUMNS = ("task", "variant", "seed", "epoch", "loss", "peak_overlap")

# stable variant -> color mapping so figures are comparable across runs
_PALETTE = ["#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee",
            "#aa3377", "#bbbbbb", "#222255"]


@dataclass
class FigureSpec:
    inputs: list[str]
    output: str
    kind: str                  # "bars" | "curves"
    group_columns: tuple = ()

    def __post_init__(self):
        if self.kind not in ("bars", "curves"):
            raise ValueError(f"unknown figure kind: {self.kind}")


class MissingColumns(ValueError):
    def __init__(self, path, missing):
        super().__init__(f"{path}: missing required columns {sorted(missing)}")


def read_rows(path: str | Path, required: tuple) -> list[dict]:
    path = Path(path)
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        fields = set(reader.fieldnames or [])
        missing = set(required) - fields
        if missing:
            raise MissingColumns(path, missing)
        rows = list(reader)
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return rows


def _float_or_none(raw: str):
    if raw is None or raw == "" or raw == "NA":
        return None
    return float(raw)


def render_bars(csv_path: str | Path):
    """Grouped bars of mean collapse per (task, variant) with std error
    bars. Returns (figure, info) where info counts the rendered bars."""
    rows = read_rows(csv_path, BAR_COLUMNS)
    rows.sort(key=lambda r: (r["task"], r["variant"]))
    tasks = sorted({r["task"] for r in rows})
    variants = sorted({r["variant"] for r in rows})
    colors = {v: _PALETTE[i % len(_PALETTE)] for i, v in enumerate(variants)}
    by_cell = {(r["task"], r["variant"]): r for r in rows}

    fig, ax = plt.subplots(figsize=(1.8 + 1.6 * len(tasks), 3.6))
    width = 0.8 / len(variants)
    n_bars = 0
    for vi, variant in enumerate(variants):
        for ti, task in enumerate(tasks):
            row = by_cell.get((task, variant))
            if row is None:
                continue
            mean = _float_or_none(row["mean"])
            if mean is None:
                continue
            std = _float_or_none(row["std"]) or 0.0
            x = ti + (vi - (len(variants) - 1) / 2) * width
            bar = ax.bar(x, mean, width=width * 0.92, yerr=std, capsize=2,
                         color=colors[variant],
                         label=variant if ti == 0 else None,
                         error_kw={"elinewidth": 0.8})
            bar[0].set_gid(f"bar-{task}-{variant}")
            n_bars += 1
    ax.set_xticks(range(len(tasks)))
    ax.set_xticklabels(tasks)
    ax.set_ylabel("peak overlap rate")
    ax.set_ylim(bottom=0)
    ax.legend(fontsize=7, ncol=2, frameon=False)
    ax.set_title("slot collapse by task and mechanism (error bars: std over seeds)",
                 fontsize=9)
    fig.tight_layout()
    return fig, {"n_bars": n_bars, "tasks": tasks, "variants": variants}


def _series(rows: list[dict], value_key: str) -> dict:
    """cell -> (epochs, mean values across seeds, NaN where absent)."""
    cells: dict[str, dict[int, list[float]]] = {}
    for r in rows:
        cell = f"{r['task']}/{r['variant']}"
        epoch = int(float(r["epoch"]))
        value = _float_or_none(r[value_key])
        cells.setdefault(cell, {}).setdefault(epoch, [])
        if value is not None:
            cells[cell][epoch].append(value)
    out = {}
    for cell, per_epoch in sorted(cells.items()):
        epochs = sorted(per_epoch)
        means = [sum(v) / len(v) if per_epoch[e] else float("nan")
                 for e, v in ((e, per_epoch[e]) for e in epochs)]
        out[cell] = (epochs, means)
    return out


def render_curves(csv_path: str | Path):
    """Two panels (training loss, peak overlap) with one line per grid
    cell, seeds averaged per epoch; missing epochs render as gaps."""
    rows = read_rows(csv_path, CURVE_COLUMNS)
    loss_series = _series(rows, "loss")
    overlap_series = _series(rows, "peak_overlap")
    cells = sorted(loss_series)
    colors = {c: _PALETTE[i % len(_PALETTE)] for i, c in enumerate(cells)}

    fig, (ax_loss, ax_ov) = plt.subplots(1, 2, figsize=(8.4, 3.4))
    n_lines = 0
    for cell in cells:
        for ax, series, label in ((ax_loss, loss_series, "loss"),
                                  (ax_ov, overlap_series, "overlap")):
            epochs, values = series[cell]
            (line,) = ax.plot(epochs, values, color=colors[cell],
                              label=cell if label == "loss" else None,
                              linewidth=1.2)
            line.set_gid(f"curve-{label}-{cell.replace('/', '-')}")
            n_lines += 1
    ax_loss.set_xlabel("epoch")
    ax_loss.set_ylabel("training loss")
    ax_ov.set_xlabel("epoch")
    ax_ov.set_ylabel("peak overlap rate")
    ax_ov.set_ylim(0, 1)
    ax_loss.legend(fontsize=6, frameon=False)
    fig.suptitle("training dynamics", fontsize=10)
    fig.tight_layout()
    return fig, {"n_lines": n_lines, "cells": cells}


def save_figure(fig, output: str | Path) -> Path:
    """Write SVG (or PNG by extension) without embedded timestamps."""
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    if output.suffix == ".svg":
        fig.savefig(output, format="svg", metadata={"Date": None})
    else:
        fig.savefig(output)
    plt.close(fig)
    return output
