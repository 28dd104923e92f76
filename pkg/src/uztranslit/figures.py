"""Render an evaluation report as a score-matrix figure."""

from __future__ import annotations

from itertools import permutations

from .alphabets import Alphabet
from .evaluation import EvalReport

_ORDER = (Alphabet.LATIN, Alphabet.CYRILLIC, Alphabet.NEW_LATIN)


def render_score_figure(report: EvalReport, path: str) -> None:
    """Write a heatmap of the 3x3 direction scores to ``path``.

    Rows are source alphabets, columns targets, diagonal blank; the file
    format follows the extension (png/svg/pdf).
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    for source, target in permutations(_ORDER, 2):
        if (source, target) not in report.scores:
            raise ValueError(f"report is missing direction {source.value}->{target.value}")

    matrix = np.full((3, 3), np.nan)
    for i, source in enumerate(_ORDER):
        for j, target in enumerate(_ORDER):
            if source is not target:
                matrix[i, j] = report.scores[(source, target)].micro_f1

    fig, ax = plt.subplots(figsize=(4.2, 3.6))
    masked = np.ma.masked_invalid(matrix)
    image = ax.imshow(masked, cmap="viridis", vmin=0.0, vmax=1.0)
    labels = [a.value.replace("_", " ") for a in _ORDER]
    ax.set_xticks(range(3), labels=labels)
    ax.set_yticks(range(3), labels=labels)
    ax.set_xlabel("target alphabet")
    ax.set_ylabel("source alphabet")
    ax.set_title("word-level micro-F1 by direction")
    for i in range(3):
        for j in range(3):
            text = "-" if i == j else f"{matrix[i, j]:.2f}"
            color = "white" if i != j and matrix[i, j] < 0.6 else "black"
            ax.text(j, i, text, ha="center", va="center", color=color)
    fig.colorbar(image, ax=ax, fraction=0.046, pad=0.04)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
