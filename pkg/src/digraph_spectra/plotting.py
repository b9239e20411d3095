"""Render simulation trajectories and spectra to figure files.

Figures are drawn on standalone ``Figure`` objects (no pyplot state), so
rendering works headless and never touches a global backend.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from matplotlib.figure import Figure

from .consensus import SimulationResult, disagreement


def plot_trajectory(result: SimulationResult, path: str | Path,
                    title: str | None = None) -> None:
    """Agent states over time plus the disagreement on a log axis."""
    fig = Figure(figsize=(7, 5))
    ax_states, ax_dis = fig.subplots(2, 1, sharex=True)
    n = result.states.shape[1]
    for i in range(n):
        ax_states.plot(result.times, result.states[:, i], lw=1.0, label=f"x{i + 1}")
    ax_states.set_ylabel("state")
    if n <= 8:
        ax_states.legend(loc="best", fontsize="small")
    if title:
        ax_states.set_title(title)

    dis = [disagreement(x) for x in result.states]
    ax_dis.semilogy(result.times, dis, color="tab:red", lw=1.0)
    ax_dis.set_xlabel("t [s]")
    ax_dis.set_ylabel("max spread")
    if result.t_event is not None:
        ax_dis.axvline(result.t_event, color="gray", ls="--", lw=0.8)
    fig.savefig(path, dpi=150, bbox_inches="tight")


def plot_spectrum(eigs: Sequence[complex], path: str | Path,
                  title: str | None = None) -> None:
    """Eigenvalues in the complex plane."""
    fig = Figure(figsize=(5, 4))
    ax = fig.subplots()
    ax.scatter([z.real for z in eigs], [z.imag for z in eigs],
               marker="x", color="tab:blue")
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.axvline(0.0, color="gray", lw=0.6)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
