"""Report figures: bar charts for statistic histograms and polynomial
coefficient profiles, written next to the delimited output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .poincare import Polynomial


def save_histogram_figure(
    counts: dict[int, int], path: Path | str, title: str, xlabel: str = "statistic value"
) -> None:
    values = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(values, [counts[v] for v in values], color="#33658a")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("configurations")
    ax.set_title(title)
    ax.set_xticks(values)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_polynomial_figure(
    polynomials: dict[str, Polynomial], path: Path | str, title: str
) -> None:
    """One bar group per computation method, coefficients by degree."""
    top = max((p.degree for p in polynomials.values()), default=0)
    degrees = list(range(top + 1))
    width = 0.8 / max(len(polynomials), 1)
    fig, ax = plt.subplots(figsize=(7, 4))
    for index, (label, poly) in enumerate(sorted(polynomials.items())):
        offsets = [d + index * width for d in degrees]
        heights = [poly.coeffs[d] if d <= poly.degree else 0 for d in degrees]
        ax.bar(offsets, heights, width=width, label=label)
    ax.set_xlabel("degree of q")
    ax.set_ylabel("coefficient")
    ax.set_title(title)
    ax.set_xticks([d + 0.4 - width / 2 for d in degrees], degrees)
    if len(polynomials) > 1:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
