"""Sentiment intervention: sweep the description sentiment of bidding
loans through the success classifier and locate the funding-maximizing
value.

The sweep never mutates its input; each grid step classifies a copy
with the sentiment column overwritten. Loans that were actually funded
are never downgraded by the uplift report: the intervention only
targets non-funded loans.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encoding import SENTIMENT_FEATURE
from .evaluation import EvaluationError, welch_ttest
from .ingest import Dataset

GRID_STEP = 0.01


class SweepError(ValueError):
    """Raised when the loans dataset cannot be swept."""


@dataclass(frozen=True)
class SweepCurve:
    grid: list[float]
    funded_counts: list[int]
    n_loans: int

    def __post_init__(self):
        if len(self.grid) != len(self.funded_counts):
            raise ValueError("grid and funded_counts lengths differ")
        if any(c < 0 or c > self.n_loans for c in self.funded_counts):
            raise ValueError("funded counts outside [0, n_loans]")

    def to_csv_text(self) -> str:
        lines = ["sentiment,funded_count"]
        lines += [f"{g!r},{c}" for g, c in zip(self.grid, self.funded_counts)]
        return "\n".join(lines) + "\n"


def _grid(step: float) -> np.ndarray:
    if not 0.0 < step <= 2.0:
        raise SweepError("grid step must lie in (0, 2]")
    steps = max(1, int(round(2.0 / step)))
    # rounding keeps grid values like 0.68 exact
    return np.round(np.linspace(-1.0, 1.0, steps + 1), 10)


def sweep_sentiment(m, loans: Dataset, grid_step: float = GRID_STEP) -> SweepCurve:
    """Predicted-funded count per overridden sentiment value.

    The loans table must carry the sentiment column. A model whose
    selected features exclude sentiment yields a flat curve: the
    override never reaches it.
    """
    if loans.n_rows == 0:
        raise SweepError("no loans to sweep")
    if SENTIMENT_FEATURE not in loans.feature_names:
        raise SweepError(f"loans dataset lacks the {SENTIMENT_FEATURE} feature")
    grid = _grid(grid_step)
    X = loans.restrict(m.feature_names).X.copy()
    if SENTIMENT_FEATURE not in m.feature_names:
        count = int(np.sum(m.predict(X) >= 0.5))
        return SweepCurve(grid.tolist(), [count] * grid.size, loans.n_rows)
    col = m.feature_names.index(SENTIMENT_FEATURE)
    counts = []
    for g in grid:
        X[:, col] = g
        counts.append(int(np.sum(m.predict(X) >= 0.5)))
    return SweepCurve(grid.tolist(), counts, loans.n_rows)


def optimal_sentiment(curve: SweepCurve) -> tuple[float, int]:
    """Funding-maximizing grid value; ties favor the least exaggerated |g|."""
    if not curve.grid:
        raise SweepError("empty sweep curve")
    counts = np.asarray(curve.funded_counts)
    best = counts.max()
    candidates = np.flatnonzero(counts == best)
    winner = candidates[np.argmin(np.abs(np.asarray(curve.grid)[candidates]))]
    return float(curve.grid[winner]), int(best)


def _funded_labels(loans: Dataset) -> np.ndarray:
    if loans.labels is not None:
        return loans.labels
    if loans.task == "classification":
        return loans.y
    raise SweepError("loans dataset carries no funded/non-funded labels")


def uplift_report(m, loans: Dataset, grid_step: float = GRID_STEP) -> tuple[int, int, float]:
    """(before, after, p): funded counts around the sentiment intervention.

    g* is found by sweeping the non-funded loans; `after` counts every
    originally-funded loan plus the non-funded ones the classifier
    predicts funded at g*. p compares the binary outcome vectors.
    """
    labels = _funded_labels(loans)
    before = int(labels.sum())
    nonfunded_idx = np.flatnonzero(labels == 0.0)
    if nonfunded_idx.size == 0:
        return before, before, 1.0
    nonfunded = loans.subset_rows(nonfunded_idx)
    g_star, _ = optimal_sentiment(sweep_sentiment(m, nonfunded, grid_step))

    X = nonfunded.restrict(m.feature_names).X.copy()
    if SENTIMENT_FEATURE in m.feature_names:
        X[:, m.feature_names.index(SENTIMENT_FEATURE)] = g_star
    predicted = (m.predict(X) >= 0.5).astype(float)

    outcome = labels.copy()
    outcome[nonfunded_idx] = predicted
    after = int(outcome.sum())
    try:
        _, p = welch_ttest(labels, outcome)
    except EvaluationError:
        p = 1.0  # nothing changed and nothing varies
    return before, after, p
