"""Wrapper feature selection: forward, backward, recursive, exhaustive.

All methods share one inner scorer (3-run 80:20 Monte-Carlo CV with a
seed derived from the outer plan) so reported scores are reproducible
by re-running the scorer on the selected subset. The outer plan's test
folds are never touched during selection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .evaluation import montecarlo_cv
from .ingest import Dataset, SplitPlan, derive_seed

EPSILON = 1e-4
INNER_RUNS = 3
INNER_RATIO = 0.8
_INNER_SALT = 31
_IMPORTANCE_SALT = 47
MAX_EXHAUSTIVE_FEATURES = 12

# Feature set of the prior-art bidding success model, used as the
# comparison baseline. The length feature is the character count of the
# raw description text (the encoder derives it as DescriptionLength).
BASELINE_PRESET = (
    "BorrowerMaximumRate",
    "DebtToIncomeRatio",
    "LoanAmount",
    "Homeownership",
    "DescriptionLength",
)


@dataclass(frozen=True)
class SelectionReport:
    method: str
    selected: list[str]
    trajectory: list[tuple[int, float]]
    final_score: float

    def __post_init__(self):
        if not self.selected:
            raise ValueError("selection produced an empty feature set")

    def to_text(self) -> str:
        lines = [f"method: {self.method}",
                 f"selected: {', '.join(self.selected)}",
                 f"final_score: {self.final_score!r}",
                 "trajectory (n_features,score):"]
        lines += [f"{size},{score!r}" for size, score in self.trajectory]
        return "\n".join(lines) + "\n"


def inner_scorer(spec, d: Dataset, plan: SplitPlan):
    """Subset -> mean inner-CV score; identical seed for every subset."""
    inner_plan = SplitPlan(
        ratio=INNER_RATIO, runs=INNER_RUNS, seed=derive_seed(plan.seed, _INNER_SALT)
    )

    def score(features) -> float:
        return montecarlo_cv(spec, d, inner_plan, features=list(features)).mean

    return score


def baseline_preset() -> list[str]:
    return list(BASELINE_PRESET)


def forward_select(spec, d: Dataset, plan: SplitPlan) -> SelectionReport:
    """Greedy add-one; stops when the best addition improves <= EPSILON."""
    score = inner_scorer(spec, d, plan)
    selected: list[str] = []
    current = -np.inf
    trajectory = []
    remaining = list(d.feature_names)
    while remaining:
        best_name, best_score = None, -np.inf
        for name in remaining:  # column order breaks ties
            s = score(selected + [name])
            if s > best_score:
                best_name, best_score = name, s
        if best_score - current <= EPSILON and selected:
            break
        selected.append(best_name)
        remaining.remove(best_name)
        current = best_score
        trajectory.append((len(selected), current))
    return SelectionReport("forward", selected, trajectory, current)


def backward_select(spec, d: Dataset, plan: SplitPlan) -> SelectionReport:
    """Greedy drop-one from the full set.

    A removal is kept while the best candidate's score stays within
    EPSILON of the current score (otherwise dropping an exact duplicate
    of a kept feature, a zero-gain move, could never happen). The best
    subset seen along the way is returned; ties go to the smaller one.
    """
    score = inner_scorer(spec, d, plan)
    subset = list(d.feature_names)
    current = score(subset)
    trajectory = [(len(subset), current)]
    best_subset, best_score = list(subset), current
    while len(subset) > 1:
        best_name, best_removal = None, -np.inf
        for name in subset:  # column order breaks ties
            s = score([f for f in subset if f != name])
            if s > best_removal:
                best_name, best_removal = name, s
        if best_removal < current - EPSILON:
            break
        subset.remove(best_name)
        current = best_removal
        trajectory.append((len(subset), current))
        if current >= best_score:
            best_subset, best_score = list(subset), current
    return SelectionReport("backward", best_subset, trajectory, best_score)


def recursive_select(spec, d: Dataset, plan: SplitPlan) -> SelectionReport:
    """Drop the least important feature per round; keep the best subset seen.

    Importances come from a fit on a deterministic inner 80:20 split of
    the data restricted to the current subset.
    """
    from .models import feature_importance, fit

    score = inner_scorer(spec, d, plan)
    rng = np.random.default_rng([derive_seed(plan.seed, _IMPORTANCE_SALT)])
    perm = rng.permutation(d.n_rows)
    cut = max(1, int(round(0.8 * d.n_rows)))
    if cut >= d.n_rows:
        cut = d.n_rows - 1
    fit_idx, val_idx = np.sort(perm[:cut]), np.sort(perm[cut:])

    subset = list(d.feature_names)
    current = score(subset)
    trajectory = [(len(subset), current)]
    best_subset, best_score = list(subset), current
    while len(subset) > 1:
        restricted = d.restrict(subset)
        m = fit(spec, restricted.subset_rows(fit_idx))
        imp = feature_importance(m, restricted.subset_rows(val_idx))
        subset.pop(int(np.argmin(imp)))  # ties drop the earliest column
        current = score(subset)
        trajectory.append((len(subset), current))
        if current >= best_score:
            best_subset, best_score = list(subset), current
    return SelectionReport("recursive", best_subset, trajectory, best_score)


def exhaustive_oracle(
    spec, d: Dataset, plan: SplitPlan, max_features: int = MAX_EXHAUSTIVE_FEATURES
) -> SelectionReport:
    """Score every nonempty subset; ties favor smaller, then column order."""
    if d.n_features > max_features:
        raise ValueError(
            f"exhaustive search over {d.n_features} features exceeds cap {max_features}"
        )
    score = inner_scorer(spec, d, plan)
    best_subset, best_score = None, -np.inf
    trajectory = []
    for size in range(1, d.n_features + 1):
        for combo in itertools.combinations(d.feature_names, size):
            s = score(combo)
            if s > best_score:  # first max wins: smallest size, column order
                best_subset, best_score = list(combo), s
    trajectory.append((len(best_subset), best_score))
    return SelectionReport("exhaustive", best_subset, trajectory, best_score)
