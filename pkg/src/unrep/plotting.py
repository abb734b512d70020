"""Matplotlib figures written next to the CLI reports."""

from __future__ import annotations

import os
from typing import Dict, Iterable, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .numerics import Grid, uniform_grid  # noqa: E402

_RC = {
    "figure.dpi": 100,
    "savefig.dpi": 100,
    "font.size": 9,
    "axes.titlesize": 10,
    "image.cmap": "viridis",
    "svg.hashsalt": "unrep",
}


def _save(fig, path: str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_operator(op, path: str, grid: Optional[Grid] = None, title: Optional[str] = None) -> str:
    """Heat map of a binary operator over the unit square."""
    grid = grid or uniform_grid(200)
    p = grid.points
    gx, gy = np.meshgrid(p, p, indexing="ij")
    v = np.asarray(op(gx, gy), dtype=float)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(4.6, 4))
        im = ax.imshow(v.T, origin="lower", extent=(0, 1, 0, 1), vmin=0.0, vmax=1.0, interpolation="nearest")
        fig.colorbar(im, ax=ax, fraction=0.046, pad=0.04)
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        ax.set_title(title or getattr(op, "name", "operator"))
        fig.tight_layout()
        return _save(fig, path)


def plot_cuts(op, alphas: Sequence[float], path: str, grid: Optional[Grid] = None,
              valid: Optional[Iterable[bool]] = None, title: Optional[str] = None) -> str:
    """Horizontal cuts x -> op(x, alpha); valid cuts solid, others dashed."""
    grid = grid or uniform_grid(400)
    x = grid.points
    flags = list(valid) if valid is not None else [True] * len(alphas)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(5, 4))
        cmap = plt.get_cmap("viridis")
        for k, (a, ok) in enumerate(zip(alphas, flags)):
            color = cmap(k / max(1, len(alphas) - 1))
            ax.plot(x, op.cut(a)(x), ls="-" if ok else "--", lw=1.0 if ok else 0.7, color=color)
        ax.set_xlim(0, 1)
        ax.set_ylim(-0.02, 1.02)
        ax.set_xlabel("x")
        ax.set_ylabel("cut value")
        n_ok = sum(bool(f) for f in flags)
        ax.set_title(title or f"{getattr(op, 'name', 'op')}: {n_ok}/{len(flags)} valid cuts")
        fig.tight_layout()
        return _save(fig, path)


def plot_negations(negs: Dict[str, object], path: str, grid: Optional[Grid] = None,
                   title: str = "negations") -> str:
    grid = grid or uniform_grid(400)
    x = grid.points
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(4.6, 4))
        for label, n in negs.items():
            ax.plot(x, n(x), label=label, lw=1.2)
        ax.plot([0, 1], [0, 1], color="0.7", lw=0.6, ls=":")
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
        ax.set_aspect("equal")
        ax.legend(loc="upper right", frameon=False)
        ax.set_title(title)
        fig.tight_layout()
        return _save(fig, path)


def plot_instance(inst, out_dir: str, grid: Optional[Grid] = None) -> list:
    """One heat map per binary operator and one panel for the negations of an instance."""
    from .negations import Negation
    from .uninorms import BinaryOperator

    paths = []
    negs = {}
    for key, obj in inst.operators.items():
        if isinstance(obj, BinaryOperator):
            fname = os.path.join(out_dir, f"{inst.name}_{key}.png")
            paths.append(plot_operator(obj, fname, grid, f"{inst.name}: {key}"))
        elif isinstance(obj, Negation):
            negs[key] = obj
    if negs:
        paths.append(plot_negations(negs, os.path.join(out_dir, f"{inst.name}_negations.png"), title=inst.name))
    return paths
