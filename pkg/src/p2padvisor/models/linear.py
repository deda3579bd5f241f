"""Ordinary least squares via normal equations."""

from __future__ import annotations

import numpy as np

from .base import ModelSpec, Standardizer, TrainedModel

RIDGE_JITTER = 1e-10


class LinearModel(TrainedModel):
    def __init__(self, spec, feature_names, standardizer, weights, intercept):
        super().__init__(spec, feature_names, standardizer)
        self.weights = np.asarray(weights, dtype=float)
        self.intercept = float(intercept)

    def _predict_core(self, X):
        return X @ self.weights + self.intercept

    def params_to_dict(self):
        return {"weights": self.weights.tolist(), "intercept": self.intercept}


def solve_least_squares(X: np.ndarray, y: np.ndarray, ridge: float = RIDGE_JITTER):
    """Normal equations with a tiny ridge on the non-intercept block so
    rank-deficient designs stay solvable. Returns (weights, intercept)."""
    n, p = X.shape
    Xb = np.column_stack([X, np.ones(n)])
    gram = Xb.T @ Xb
    gram[np.arange(p), np.arange(p)] += ridge
    beta = np.linalg.solve(gram, Xb.T @ y)
    return beta[:p], float(beta[p])


def fit_linear(spec: ModelSpec, feature_names, standardizer: Standardizer, X, y) -> LinearModel:
    ridge = float(spec.param("ridge", RIDGE_JITTER))
    weights, intercept = solve_least_squares(X, y, ridge)
    return LinearModel(spec, feature_names, standardizer, weights, intercept)
