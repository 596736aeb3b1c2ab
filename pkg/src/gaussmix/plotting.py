"""Figure rendering for sweep reports.

Renders the same data that goes into the sweep CSV: fidelity and minimum PT
symplectic eigenvalue against the swept variable, the entanglement threshold,
and (in io-fidelity mode) the four input-output fidelity curves with their
numerically recovered thresholds.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .verify import IoFidelityReport, SweepSample  # noqa: E402

_XLABELS = {"psi": "squeezing phase of state 2 (rad)", "tau": "effective coupling"}


def _shade_entangled(ax, grid, samples) -> None:
    flags = [s.verdict_simon for s in samples]
    ax.fill_between(grid, 0.0, 1.0, where=flags, transform=ax.get_xaxis_transform(),
                    color="gold", alpha=0.25, linewidth=0, label="entangled output")


def render_sweep_figure(grid, samples: list[SweepSample], variable: str, path: str,
                        io_report: IoFidelityReport | None = None) -> None:
    """Write a PNG/PDF figure for a sweep; format follows the file suffix."""
    has_io = any(s.io_fidelities is not None for s in samples)
    n_axes = 2 if has_io else 1
    fig, axes = plt.subplots(n_axes, 1, figsize=(6.4, 3.6 * n_axes), sharex=True, squeeze=False)
    ax = axes[0, 0]

    ax.plot(grid, [s.fidelity for s in samples], "r-", label="input fidelity")
    ax.plot(grid, [s.lambda_tilde for s in samples], "b--", label=r"min PT symplectic eigenvalue")
    thresholds = [s.threshold for s in samples]
    if any(not math.isnan(t) for t in thresholds):
        ax.plot(grid, thresholds, "k-.", linewidth=1, label="entanglement threshold")
    ax.axhline(0.5, color="gray", linewidth=0.8)
    _shade_entangled(ax, grid, samples)
    ax.set_ylabel("fidelity / eigenvalue")
    ax.legend(loc="best", fontsize=8)

    if has_io:
        ax2 = axes[1, 0]
        labels = ("F(in1, out1)", "F(in1, out2)", "F(in2, out1)", "F(in2, out2)")
        styles = ("g-", "m--", "c-.", "y:")
        for idx, (label, style) in enumerate(zip(labels, styles)):
            ax2.plot(grid, [s.io_fidelities[idx] for s in samples], style, label=label)
        if io_report is not None and io_report.thresholds is not None:
            for idx, thr in enumerate(io_report.thresholds):
                ax2.axhline(thr, color="k", linewidth=0.6, linestyle=":")
        _shade_entangled(ax2, grid, samples)
        ax2.set_ylabel("input-output fidelity")
        ax2.legend(loc="best", fontsize=8)

    axes[-1, 0].set_xlabel(_XLABELS.get(variable, variable))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
