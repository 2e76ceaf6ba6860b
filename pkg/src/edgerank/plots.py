"""Render percolation curves as figures next to the CSV reports."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .percolation import PercolationCurve

_PANELS = (
    ("sigma", "largest component fraction"),
    ("kappa_ratio", "average connectivity ratio"),
    ("cc", "component ratio"),
)


def _series(curve: PercolationCurve, field: str) -> tuple[list[float], list[float]]:
    points = (curve.initial, *curve.steps)
    xs = [p.fraction_removed for p in points]
    ys = [getattr(p, field) for p in points]
    return xs, ys


def save_percolation_figures(curves: Mapping[str, PercolationCurve],
                             out_dir: str | Path, network: str,
                             dpi: int = 150) -> list[Path]:
    """Write one PNG per signal (sigma, kappa_ratio, cc) with a line per metric.

    Returns the written paths.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for field, ylabel in _PANELS:
        fig, ax = plt.subplots(figsize=(5.0, 3.6), constrained_layout=True)
        for name, curve in curves.items():
            xs, ys = _series(curve, field)
            ax.plot(xs, ys, linewidth=1.2, label=name)
        ax.set_xlabel("fraction of edges removed")
        ax.set_ylabel(ylabel)
        ax.set_xlim(0.0, 1.0)
        ax.set_title(network)
        ax.legend(fontsize=8, framealpha=0.6)
        path = out_dir / f"{network}_{field}.png"
        fig.savefig(path, dpi=dpi)
        plt.close(fig)
        written.append(path)
    return written
