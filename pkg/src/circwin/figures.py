"""Figure data and rendering for the report path of the CLI.

Four deterministic data sets, each written as a CSV next to a standalone
matplotlib script (``plot_figures.py``) that regenerates the PNGs from
the CSVs alone:

* ``fig1``  -- zero-mean von Mises densities for beta = 1, 3, 5 on [-pi, pi]
* ``fig4a`` -- von Hann, Hamming and von Mises (beta = 1, 5) window shapes
               on the support [-1, 1]
* ``fig4b`` -- Kaiser versus von Mises window, beta = 5, same support
* ``fig5``  -- the cosine exponent cos(pi*t/N) over a full period [-N, N]
               and its gated restriction to the window support [-N/2, N/2]

``render_figures`` executes the emitted script, so the CLI renders and
the script render by the same code.
"""

from __future__ import annotations

import runpy
from pathlib import Path

import numpy as np

from .circular import VonMisesParams, vm_pdf
from .windows import WindowSpec, profile

__all__ = ["FIGURE_NAMES", "figure_tables", "write_figure_data", "render_figures", "PLOT_SCRIPT_NAME"]

FIGURE_NAMES = ("fig1", "fig4a", "fig4b", "fig5")

PLOT_SCRIPT_NAME = "plot_figures.py"

DEFAULT_POINTS = 513


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.17g}"


def figure_tables(length: float = 2.0, points: int = DEFAULT_POINTS) -> dict:
    """Header and rows for each figure CSV, keyed by figure name."""
    tables: dict[str, tuple[list[str], list[list[float | None]]]] = {}

    xs = np.linspace(-np.pi, np.pi, points)
    densities = [
        [vm_pdf(VonMisesParams(0.0, kappa), float(x)) for x in xs]
        for kappa in (1.0, 3.0, 5.0)
    ]
    tables["fig1"] = (
        ["x", "pdf_beta1", "pdf_beta3", "pdf_beta5"],
        [[float(x), d1, d3, d5] for x, d1, d3, d5 in zip(xs, *densities)],
    )

    ts = np.linspace(-length / 2.0, length / 2.0, points)
    shapes = {
        "hann": profile(WindowSpec("generalized_cosine", length, alpha=0.5), ts),
        "hamming": profile(WindowSpec("generalized_cosine", length, alpha=0.54), ts),
        "von_mises_beta1": profile(WindowSpec("von_mises", length, beta=1.0), ts),
        "von_mises_beta5": profile(WindowSpec("von_mises", length, beta=5.0), ts),
        "kaiser_beta5": profile(WindowSpec("kaiser", length, beta=5.0), ts),
    }
    tables["fig4a"] = (
        ["t", "hann", "hamming", "von_mises_beta1", "von_mises_beta5"],
        [
            [float(t), float(a), float(b), float(c), float(d)]
            for t, a, b, c, d in zip(
                ts, shapes["hann"], shapes["hamming"],
                shapes["von_mises_beta1"], shapes["von_mises_beta5"],
            )
        ],
    )
    tables["fig4b"] = (
        ["t", "kaiser_beta5", "von_mises_beta5"],
        [
            [float(t), float(k), float(v)]
            for t, k, v in zip(ts, shapes["kaiser_beta5"], shapes["von_mises_beta5"])
        ],
    )

    wide = np.linspace(-length, length, 2 * points - 1)
    rows: list[list[float | None]] = []
    for t in wide:
        c = float(np.cos(np.pi * t / length))
        gated = c if abs(t) <= length / 2.0 else None
        rows.append([float(t), c, gated])
    tables["fig5"] = (["t", "cosine", "gated"], rows)
    return tables


def write_figure_data(out_dir, length: float = 2.0, points: int = DEFAULT_POINTS) -> list[Path]:
    """Write one CSV per figure plus the plotting script; return the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (header, rows) in figure_tables(length, points).items():
        path = out / f"{name}.csv"
        with open(path, "w", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(cell) for cell in row) + "\n")
        written.append(path)
    script = out / PLOT_SCRIPT_NAME
    with open(script, "w", newline="\n") as fh:
        fh.write(PLOT_SCRIPT)
    written.append(script)
    return written


def render_figures(out_dir) -> list[Path]:
    """Run the emitted plotting script, producing one PNG per figure."""
    out = Path(out_dir)
    script = out / PLOT_SCRIPT_NAME
    if not script.exists():
        raise FileNotFoundError(f"{script} not found; write the figure data first")
    runpy.run_path(str(script))
    return [out / f"{name}.png" for name in FIGURE_NAMES]


PLOT_SCRIPT = '''#!/usr/bin/env python3
"""Render the window-toolkit figures from the CSV files next to this script."""

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = Path(__file__).resolve().parent
PNG_META = {"Software": "circwin figures"}


def read_columns(name):
    with open(HERE / name, newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    cols = {h: [] for h in header}
    for row in body:
        for h, cell in zip(header, row):
            cols[h].append(float(cell) if cell else math.nan)
    return cols


def save(fig, name):
    fig.savefig(HERE / name, dpi=150, metadata=PNG_META)
    plt.close(fig)


cols = read_columns("fig1.csv")
fig, ax = plt.subplots(figsize=(7.0, 4.0))
for key, label in [("pdf_beta1", "beta = 1"), ("pdf_beta3", "beta = 3"), ("pdf_beta5", "beta = 5")]:
    ax.plot(cols["x"], cols[key], label=label)
ax.set_xlabel("angle (rad)")
ax.set_ylabel("density")
ax.set_title("von Mises density, zero mean")
ax.legend()
fig.tight_layout()
save(fig, "fig1.png")

cols = read_columns("fig4a.csv")
fig, ax = plt.subplots(figsize=(7.0, 3.5))
for key, label in [
    ("hann", "von Hann"),
    ("hamming", "Hamming"),
    ("von_mises_beta1", "von Mises beta = 1"),
    ("von_mises_beta5", "von Mises beta = 5"),
]:
    ax.plot(cols["t"], cols[key], label=label)
ax.set_xlabel("time (s)")
ax.set_ylabel("w(t)")
ax.set_title("Normalised window shapes")
ax.legend()
fig.tight_layout()
save(fig, "fig4a.png")

cols = read_columns("fig4b.csv")
fig, ax = plt.subplots(figsize=(7.0, 3.5))
ax.plot(cols["t"], cols["kaiser_beta5"], label="Kaiser beta = 5")
ax.plot(cols["t"], cols["von_mises_beta5"], "--", label="von Mises beta = 5")
ax.set_xlabel("time (s)")
ax.set_ylabel("w(t)")
ax.set_title("Kaiser versus von Mises window")
ax.legend()
fig.tight_layout()
save(fig, "fig4b.png")

cols = read_columns("fig5.csv")
fig, ax = plt.subplots(figsize=(6.0, 4.0))
ax.plot(cols["t"], cols["cosine"], ":", label="cos(pi t / N), full period")
ax.plot(cols["t"], cols["gated"], label="gated to [-N/2, N/2]")
ax.axhline(0.0, color="k", linewidth=0.5)
ax.set_xlabel("time (s)")
ax.set_ylabel("cosine exponent")
ax.set_title("Window support cut by the gate")
ax.legend()
fig.tight_layout()
save(fig, "fig5.png")
'''
