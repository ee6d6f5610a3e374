"""Figure rendering for scan output: entropy curves and Husimi heatmaps.

The backend is forced to Agg so rendering works headless; every function
writes a file and returns its path.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .husimi import QGrid  # noqa: E402


def save_entropy_curves(rows, path: str, title: str | None = None) -> str:
    """Line plot of entropy against |alpha|, one curve per (m, n) pair.

    ``rows`` are (alpha, m, n, lambda_plus, lambda_minus, entropy_bits)
    tuples as produced by the entropy scan; degenerate marker rows are
    left out of the curves.
    """
    curves: dict[tuple[int, int], list[tuple[float, float]]] = {}
    for alpha, m, n, _lp, _lm, bits in rows:
        if isinstance(bits, str):
            continue
        curves.setdefault((int(m), int(n)), []).append((abs(alpha), float(bits)))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for (m, n), points in curves.items():
        xs, ys = zip(*points)
        ax.plot(xs, ys, label=f"(m,n)=({m},{n})")
    ax.set_xlabel(r"$|\alpha|$")
    ax.set_ylabel("entanglement (bits)")
    ax.set_ylim(-0.02, 1.05)
    if title:
        ax.set_title(title)
    ax.legend(loc="best")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_entropy_vs_m(rows, path: str, title: str | None = None) -> str:
    """Entropy against the mode-a addition order m, one curve per n.

    ``rows`` are (m, n, entropy_bits) tuples; marker rows are skipped.
    """
    curves: dict[int, list[tuple[int, float]]] = {}
    for m, n, bits in rows:
        if isinstance(bits, str):
            continue
        curves.setdefault(int(n), []).append((int(m), float(bits)))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for n, points in curves.items():
        xs, ys = zip(*points)
        ax.plot(xs, ys, marker="o", markersize=3, label=f"n={n}")
    ax.set_xlabel("m")
    ax.set_ylabel("entanglement (bits)")
    if title:
        ax.set_title(title)
    ax.legend(loc="best")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_q_heatmap(grid: QGrid, path: str, title: str | None = None) -> str:
    """Heatmap of a Husimi grid on its 2-D slice."""
    fig, ax = plt.subplots(figsize=(5.6, 4.6))
    mesh = ax.pcolormesh(
        np.asarray(grid.axis_1_values),
        np.asarray(grid.axis_2_values),
        np.asarray(grid.values).T,
        shading="auto",
        cmap="viridis",
    )
    fig.colorbar(mesh, ax=ax, label="Q")
    ax.set_xlabel(grid.slice.axis_1)
    ax.set_ylabel(grid.slice.axis_2)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
