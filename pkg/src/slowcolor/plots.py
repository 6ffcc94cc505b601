"""Figure rendering for table and experiment output.

The CLI writes these next to the CSV files on request; the library API keeps
CSV as its machine boundary.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .formulas import DpTable


def render_table_heatmap(table: DpTable, path) -> None:
    """Heatmap of a two-parameter value table."""
    values = np.array(table.values)
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(values, origin="lower", cmap="viridis", aspect="auto")
    ax.set_xlabel("s")
    ax.set_ylabel("r")
    ax.set_title(f"{table.kind} game values")
    fig.colorbar(im, ax=ax, label="value")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_krr_fit(rows, path) -> None:
    """Balanced bipartite values against the square-root/log fit."""
    r = [row[0] for row in rows]
    value = [row[1] for row in rows]
    fit = [row[2] for row in rows]
    diff = [row[3] for row in rows]
    fig, (top, bottom) = plt.subplots(2, 1, figsize=(6, 6), sharex=True,
                                      gridspec_kw={"height_ratios": [3, 1]})
    top.plot(r, value, label="value of K(r,r)", lw=1.5)
    top.plot(r, fit, "--", label="4r - sqrt(r) - log3(r)", lw=1.2)
    top.set_ylabel("score")
    top.legend()
    bottom.axhline(0, color="gray", lw=0.8)
    bottom.plot(r, diff, color="firebrick", lw=1.0)
    bottom.set_ylim(-2.2, 2.2)
    bottom.set_xlabel("r")
    bottom.set_ylabel("value - fit")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_gap_scatter(rows, path, *, x_label="r", y_label="gap") -> None:
    """Scatter of gap magnitudes for the join approximation experiment."""
    xs = [row[0] for row in rows]
    gaps = [row[4] for row in rows]
    within = [row[5] for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(
        [x for x, w in zip(xs, within) if w],
        [g for g, w in zip(gaps, within) if w],
        s=8, label="within t", color="seagreen",
    )
    flagged_x = [x for x, w in zip(xs, within) if not w]
    if flagged_x:
        ax.scatter(
            flagged_x,
            [g for g, w in zip(gaps, within) if not w],
            s=12, label="exceeds t", color="firebrick",
        )
    ax.set_xlabel(x_label)
    ax.set_ylabel(y_label)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_suite_summary(report, path) -> None:
    """Bar chart of pass/fail/info counts for a suite report."""
    counts = [report.passed, report.failed, sum(1 for c in report.cases if c.passed is None)]
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(["pass", "fail", "info"], counts, color=["seagreen", "firebrick", "steelblue"])
    ax.set_title(report.name)
    ax.set_ylabel("cases")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
