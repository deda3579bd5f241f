"""Per-feature importances for every model family.

Forests report mean impurity decrease accumulated at fit time. Linear
and logit models report |coefficient| scaled by the fit-time feature
sd. Linear-kernel SVMs expose |weight| directly. Everything else falls
back to seeded permutation importance on a validation set.
"""

from __future__ import annotations

import numpy as np

from ..evaluation import accuracy, r_squared
from ..ingest import Dataset
from .base import TrainedModel
from .forest import ForestModel
from .knn import KNNModel
from .linear import LinearModel
from .logit import LogitModel
from .svm import SVMModel

PERMUTATION_REPEATS = 5


def _score(m: TrainedModel, X, y) -> float:
    if m.spec.task == "classification":
        return accuracy(y, m.predict_labels(X))
    return r_squared(y, m.predict(X))


def permutation_importance(m: TrainedModel, validation: Dataset) -> np.ndarray:
    """Mean metric drop over seeded column permutations, floored at zero."""
    X, y = validation.X, validation.y
    baseline = _score(m, X, y)
    out = np.zeros(len(m.feature_names))
    for j in range(X.shape[1]):
        drops = []
        for rep in range(PERMUTATION_REPEATS):
            rng = np.random.default_rng([m.spec.seed, 9000 + j, rep])
            shuffled = X.copy()
            shuffled[:, j] = shuffled[rng.permutation(X.shape[0]), j]
            drops.append(baseline - _score(m, shuffled, y))
        out[j] = np.mean(drops)
    return np.maximum(out, 0.0)


def feature_importance(m: TrainedModel, validation: Dataset) -> np.ndarray:
    """Nonnegative importance per fit-time feature, higher = more used."""
    if isinstance(m, ForestModel):
        return m.importances.copy()
    if isinstance(m, (LinearModel, LogitModel)):
        return np.abs(m.weights) * m.standardizer.sd
    if isinstance(m, SVMModel) and m.kernel == "linear":
        return np.abs(m.linear_weights())
    if isinstance(m, (SVMModel, KNNModel)):
        return permutation_importance(m, validation)
    raise TypeError(f"no importance rule for {type(m).__name__}")
