"""Matplotlib rendering of the CLI report tables to image files."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = [
    "save_state_figure",
    "save_j_distribution_figure",
    "save_angle_distribution_figure",
    "save_scan_error_figure",
    "save_gate_map_figure",
]

_RC = {
    "figure.figsize": (6.0, 3.8),
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.labelsize": 10,
    "font.size": 10,
    "legend.fontsize": 8,
}


def _save(fig, path: str) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_state_figure(js, magnitudes, path: str, title: str = "") -> None:
    """Stem plot of amplitude magnitudes over the basis window."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        ax.stem(js, magnitudes, basefmt=" ")
        ax.set_xlabel("j")
        ax.set_ylabel("|amplitude|")
        if title:
            ax.set_title(title)
        _save(fig, path)


def save_j_distribution_figure(js, p, path: str, title: str = "") -> None:
    """Stem plot of the momentum distribution p(j)."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        ax.stem(js, p, basefmt=" ")
        ax.set_xlabel("j")
        ax.set_ylabel("p(j)")
        if title:
            ax.set_title(title)
        _save(fig, path)


def save_angle_distribution_figure(phis, p, path: str, title: str = "", alpha=None) -> None:
    """Line plot of the angular density over one period."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        ax.plot(phis, p)
        if alpha is not None:
            ax.axvline(alpha % (2 * math.pi), color="tab:red", ls="--", lw=1, label="alpha")
            ax.legend()
        ax.set_xlim(0.0, 2 * math.pi)
        ax.set_xlabel("phi")
        ax.set_ylabel("p(phi)")
        if title:
            ax.set_title(title)
        _save(fig, path)


def save_scan_error_figure(rows, path: str, title: str = "") -> None:
    """Relative error of the angular-momentum expectation over the (q, l) scan.

    `rows` are (q, l, bracket_l, expectation, rel_err) tuples.
    """
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        qs = sorted({r[0] for r in rows})
        for q in qs:
            pts = [(r[1], r[4]) for r in rows if r[0] == q and math.isfinite(r[4])]
            if pts:
                ls, errs = zip(*pts)
                ax.semilogy(ls, errs, marker="o", ms=3, label=f"q={q:g}")
        ax.set_xlabel("l")
        ax.set_ylabel("relative error")
        ax.legend()
        if title:
            ax.set_title(title)
        _save(fig, path)


def save_gate_map_figure(rows, path: str, title: str = "") -> None:
    """Convergence verdict map over the (l, s) plane at fixed q.

    `rows` are (q, l, s, gate_value, verdict) tuples; verdict strings are
    "convergent", "divergent" or "boundary".
    """
    colors = {"convergent": "tab:green", "divergent": "tab:red", "boundary": "tab:orange"}
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        for verdict, color in colors.items():
            pts = [(r[1], r[2]) for r in rows if r[4] == verdict]
            if pts:
                ls, ss = zip(*pts)
                ax.scatter(ls, ss, c=color, s=18, label=verdict)
        ax.set_xlabel("l")
        ax.set_ylabel("s")
        ax.legend()
        if title:
            ax.set_title(title)
        _save(fig, path)


def save_limit_check_figure(rows, path: str, title: str = "") -> None:
    """Bar chart of relative deviations between deformed and theta values.

    `rows` carry the relative error in their last column.
    """
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        errs = [r[-1] for r in rows if math.isfinite(r[-1]) and r[-1] > 0]
        ax.semilogy(np.arange(len(errs)), errs, marker=".", ls="none")
        ax.set_xlabel("check #")
        ax.set_ylabel("relative deviation")
        if title:
            ax.set_title(title)
        _save(fig, path)
