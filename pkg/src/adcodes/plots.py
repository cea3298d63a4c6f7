"""Matplotlib rendering of report figures, written to files next to the data."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .oracle import FidelityResult

__all__ = ["render_fidelity_figure"]


def render_fidelity_figure(result: FidelityResult, path, title: str = "") -> None:
    """Log-log infidelity vs damping rate with the fitted slope overlaid."""
    g = np.asarray(result.gammas)
    infid = np.asarray(result.infidelities)
    fig, ax = plt.subplots(figsize=(5.2, 3.8))
    ax.loglog(g, infid, "o-", color="tab:blue", label="measured")
    ref = infid[0] * (g / g[0]) ** result.fitted_exponent
    ax.loglog(g, ref, "--", color="tab:orange",
              label=f"slope {result.fitted_exponent:.2f}")
    ax.set_xlabel(r"damping rate $\gamma$")
    ax.set_ylabel(r"$1 - F$")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
