"""Figures written next to the CSV reports."""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .patterns import Pattern  # noqa: E402

_STATUS_COLOURS = {"pass": "#4c9a2a", "fail": "#c0392b", "evidence": "#7f8c8d"}


def _save(fig, path) -> None:
    fig.tight_layout()
    # fixed metadata keeps repeated runs byte-stable for PNG/SVG/PDF
    fig.savefig(path, dpi=120, metadata={"Software": None} if str(path).endswith(".png") else None)
    plt.close(fig)


def render_claims_figure(results, path) -> None:
    """Stacked bar of claim status per group."""
    groups = []
    for r in results:
        if r.group not in groups:
            groups.append(r.group)
    counts = {g: Counter(r.status for r in results if r.group == g) for g in groups}
    fig, ax = plt.subplots(figsize=(7, 0.45 * len(groups) + 1.2))
    left = [0] * len(groups)
    for status, colour in _STATUS_COLOURS.items():
        widths = [counts[g][status] for g in groups]
        ax.barh(groups, widths, left=left, color=colour, label=status)
        left = [a + b for a, b in zip(left, widths)]
    ax.invert_yaxis()
    ax.set_xlabel("claims")
    ax.legend(loc="lower right", frameon=False)
    ax.spines[["top", "right"]].set_visible(False)
    _save(fig, path)


def render_survey_figure(results, path) -> None:
    """Scatter of surveyed SRGs: n against lambda, marked by P5 / co-P5 presence."""
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    styles = {
        (True, True): ("o", "#2c7fb8", "P5 and co-P5"),
        (True, False): ("s", "#d95f0e", "P5 only"),
        (False, True): ("^", "#31a354", "co-P5 only"),
        (False, False): ("x", "#000000", "neither"),
    }
    seen = set()
    for r in results:
        if r.params is None or not r.primitive:
            continue
        key = (r.found.get(Pattern.P5), r.found.get(Pattern.COP5))
        if None in key:
            continue
        marker, colour, label = styles[key]
        ax.scatter(
            r.params.n, r.params.lam, marker=marker, color=colour,
            label=None if key in seen else label,
        )
        seen.add(key)
        if key != (True, True):
            ax.annotate(r.name, (r.params.n, r.params.lam), fontsize=7,
                        xytext=(4, 3), textcoords="offset points")
    ax.set_xlabel("vertices n")
    ax.set_ylabel(r"$\lambda$")
    ax.legend(frameon=False, fontsize=8)
    ax.spines[["top", "right"]].set_visible(False)
    _save(fig, path)
