"""Sweep harness: delimited reports plus companion figures.

Each sweep grid point synthesizes a two-interval instance at a fixed total
size, runs the best construction against the window-counting upper bound,
and lands in one CSV row.  Figures are optional renderings of the same rows.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from math import sqrt
from pathlib import Path

import numpy as np

from .bound import bound_theorem
from .construct import METHODS, TwoIntervalInstance, best_construction
from .core import PreconditionError

SWEEP_COLUMNS = ("alpha", "beta", "n1", "n2", "method", "size", "ratio", "upper_bound")

# Smallest total where the difference-set machinery engages (n1 >= 7).
MIN_SWEEP_N = 14


@dataclass(frozen=True)
class SweepSpec:
    n: int
    alphas: tuple[float, ...]
    betas: tuple[float, ...]
    out: str
    methods: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        if self.n < MIN_SWEEP_N:
            raise PreconditionError(f"sweep needs n >= {MIN_SWEEP_N}")
        if not self.alphas or not self.betas:
            raise PreconditionError("alpha and beta grids must be nonempty")
        for a in self.alphas:
            if not 0 < a <= 1:
                raise PreconditionError(f"alpha {a} outside (0, 1]")
        for b in self.betas:
            if b <= 0:
                raise PreconditionError(f"beta {b} must be positive")
        if self.methods is not None:
            bad = [m for m in self.methods if m not in METHODS]
            if bad:
                raise PreconditionError(f"unknown methods {bad}")


def parse_grid(text: str) -> tuple[float, ...]:
    """Parse an inclusive grid literal ``start:stop:step``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise PreconditionError(f"bad grid literal {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise PreconditionError(f"bad grid literal {text!r}") from exc
    if step <= 0 or stop < start:
        raise PreconditionError(f"bad grid literal {text!r}")
    count = int((stop - start) / step + 1e-9) + 1
    return tuple(start + i * step for i in range(count))


def synth_instance(n: int, alpha: float, beta: float) -> TwoIntervalInstance:
    """Deterministic instance at total size n with the requested shape."""
    n1 = round(n / (1 + alpha))
    if n - n1 > n1:
        n1 = n - n1
    n2 = n - n1
    gap_start = n1 + max(1, round(beta * n1))
    return TwoIntervalInstance(n1, n2, gap_start)


def run_sweep(spec: SweepSpec) -> list[dict]:
    """Evaluate the grid, write the CSV, and return the rows (sorted)."""
    upper = bound_theorem(spec.n, 2).bound
    rows = []
    for alpha in spec.alphas:
        for beta in spec.betas:
            inst = synth_instance(spec.n, alpha, beta)
            report = best_construction(inst, spec.methods)
            rows.append(
                {
                    "alpha": alpha,
                    "beta": beta,
                    "n1": inst.n1,
                    "n2": inst.n2,
                    "method": report.method,
                    "size": report.size,
                    "ratio": report.ratio,
                    "upper_bound": upper,
                }
            )
    rows.sort(key=lambda r: (r["alpha"], r["beta"]))
    out = Path(spec.out)
    try:
        with out.open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=SWEEP_COLUMNS)
            writer.writeheader()
            writer.writerows(rows)
    except OSError as exc:
        raise PreconditionError(f"cannot write sweep output {out}: {exc}") from exc
    return rows


def _pyplot():
    # deferred so that plain library use never pays the matplotlib import
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_sweep_figure(rows: list[dict], path: str) -> None:
    """Ratio-versus-beta curves per alpha, with the upper bound overlaid."""
    if not rows:
        raise PreconditionError("no rows to plot")
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    total = rows[0]["n1"] + rows[0]["n2"]
    for alpha in sorted({r["alpha"] for r in rows}):
        sub = sorted((r for r in rows if r["alpha"] == alpha), key=lambda r: r["beta"])
        ax.plot(
            [r["beta"] for r in sub],
            [r["ratio"] for r in sub],
            marker="o",
            label=f"alpha = {alpha:g}",
        )
    ax.axhline(
        rows[0]["upper_bound"] / sqrt(total),
        color="black",
        linestyle="--",
        linewidth=1,
        label="upper bound",
    )
    ax.set_xlabel("beta (normalized separation)")
    ax.set_ylabel("size / sqrt(n1 + n2)")
    ax.set_title(f"Best construction across the (alpha, beta) grid, n = {total}")
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_surface_figure(
    alphas, betas, surface, best: tuple[float, float], path: str
) -> None:
    """Heatmap of the guarantee surface with the maximizer marked."""
    alphas = np.asarray(alphas)
    betas = np.asarray(betas)
    surface = np.asarray(surface)
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    mesh = ax.pcolormesh(betas, alphas, surface, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="worst-case guarantee")
    ax.plot(best[1], best[0], "r*", markersize=12, label="maximizer")
    ax.set_xlabel("beta0")
    ax.set_ylabel("alpha0")
    ax.set_title("Guarantee surface over classification thresholds")
    ax.legend(loc="upper right", fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
