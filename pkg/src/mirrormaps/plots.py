"""Figure rendering for reports.

Everything here is headless (Agg backend) and writes PNG files; the CLI
calls these when an output path is given, so a written report comes with
a picture of the same data.
"""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .checker import BatchResult, CheckReport
from .polytope import config_polytope, lattice_points

_STATUS_COLORS = {
    "pass": "tab:green",
    "fail": "tab:red",
    "skip": "tab:gray",
}


def _draw_polygon(ax, polytope) -> None:
    verts = list(polytope.vertices)
    pts = list(lattice_points(polytope))
    ax.scatter([p[0] for p in pts], [p[1] for p in pts],
               s=12, color="0.6", zorder=2)
    # close the loop in angular order around the centroid
    cx = sum(v[0] for v in verts) / len(verts)
    cy = sum(v[1] for v in verts) / len(verts)
    ring = sorted(verts, key=lambda v: math.atan2(v[1] - cy, v[0] - cx))
    ring.append(ring[0])
    ax.plot([v[0] for v in ring], [v[1] for v in ring],
            color="tab:blue", zorder=3)
    ax.scatter([v[0] for v in verts], [v[1] for v in verts],
               s=30, color="tab:blue", zorder=4)
    ax.scatter([0], [0], s=40, color="tab:red", marker="x", zorder=5)
    ax.set_aspect("equal")
    lim = max(2, max(abs(c) for v in verts for c in v) + 1)
    ax.set_xticks(range(-lim, lim + 1))
    ax.set_yticks(range(-lim, lim + 1))
    ax.set_xlim(-lim - 0.5, lim + 0.5)
    ax.set_ylim(-lim - 0.5, lim + 0.5)
    ax.grid(True, linewidth=0.3, alpha=0.5)


def _draw_outcomes(ax, report: CheckReport) -> None:
    names = [o.name for o in report.outcomes]
    colors = [_STATUS_COLORS.get(o.status, "tab:orange")
              for o in report.outcomes]
    ypos = range(len(names), 0, -1)
    ax.barh(list(ypos), [1] * len(names), color=colors, height=0.6)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    for y, o in zip(ypos, report.outcomes):
        ax.text(0.5, y, o.status.upper(), ha="center", va="center",
                color="white", fontweight="bold")
    ax.set_xticks([])
    ax.set_xlim(0, 1)
    for side in ("top", "right", "bottom", "left"):
        ax.spines[side].set_visible(False)


def report_figure(report: CheckReport, path: str | Path) -> Path:
    """One check run: outcome strip, plus the polygon when it is planar."""
    path = Path(path)
    planar = report.error is None and report.config.dim == 2
    if planar:
        fig, (ax_out, ax_poly) = plt.subplots(
            1, 2, figsize=(9, 4), gridspec_kw={"width_ratios": [3, 2]})
        _draw_polygon(ax_poly, config_polytope(report.config))
        ax_poly.set_title("vector polytope")
    else:
        fig, ax_out = plt.subplots(figsize=(6, 4))
    if report.error is not None:
        ax_out.text(0.5, 0.5, "ERROR: %s" % report.error, ha="center",
                    va="center", wrap=True, color="tab:red")
        ax_out.set_axis_off()
    else:
        _draw_outcomes(ax_out, report)
    title = report.label or "check report"
    fig.suptitle("%s  (precision %d)" % (title, report.precision))
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def batch_figure(batch: BatchResult, path: str | Path) -> Path:
    """Stacked per-check status counts across a batch of reports."""
    path = Path(path)
    names: list[str] = []
    for report in batch.reports:
        for o in report.outcomes:
            if o.name not in names:
                names.append(o.name)
    counts = {s: [0] * len(names) for s in ("pass", "fail", "skip")}
    errors = sum(1 for r in batch.reports if r.error is not None)
    for report in batch.reports:
        for o in report.outcomes:
            bucket = counts.get(o.status)
            if bucket is not None:
                bucket[names.index(o.name)] += 1
    fig, ax = plt.subplots(figsize=(8, 0.6 * max(4, len(names)) + 1))
    ypos = list(range(len(names), 0, -1))
    left = [0] * len(names)
    for status in ("pass", "fail", "skip"):
        vals = counts[status]
        ax.barh(ypos, vals, left=left, height=0.6,
                color=_STATUS_COLORS[status], label=status)
        left = [a + b for a, b in zip(left, vals)]
    ax.set_yticks(ypos)
    ax.set_yticklabels(names)
    ax.set_xlabel("reports")
    ax.legend(loc="lower right")
    title = batch.summary_line
    if errors:
        title += " (%d with errors)" % errors
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _log10_abs(value: Fraction) -> float | None:
    if value == 0:
        return None
    num, den = abs(value).as_integer_ratio()
    # big ints stay exact through math.log10
    return math.log10(num) - math.log10(den)


def growth_figure(series: dict[str, list[Fraction]],
                  path: str | Path, title: str = "coefficient growth") -> Path:
    """log10 of |coefficient| against order, one line per labeled series."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, coeffs in series.items():
        xs, ys = [], []
        for n, c in enumerate(coeffs):
            mag = _log10_abs(Fraction(c))
            if mag is not None:
                xs.append(n)
                ys.append(mag)
        ax.plot(xs, ys, marker="o", markersize=3, label=label)
    ax.set_xlabel("order")
    ax.set_ylabel("log10 |coefficient|")
    ax.set_title(title)
    ax.legend()
    ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


__all__ = ["report_figure", "batch_figure", "growth_figure"]
