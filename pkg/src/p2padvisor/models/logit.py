"""Logistic regression fitted by iteratively reweighted least squares.

The solver tracks the ridge-regularized negative log-likelihood and
halves the IRLS step until each iteration decreases it, so the descent
invariant holds by construction and is asserted per iteration.
"""

from __future__ import annotations

import numpy as np

from .base import ModelSpec, Standardizer, TrainedModel

RIDGE = 1e-4
MAX_ITER = 100
TOL = 1e-8


def sigmoid(x):
    out = np.empty_like(x, dtype=float)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def regularized_nll(beta: np.ndarray, Xb: np.ndarray, y: np.ndarray, ridge: float) -> float:
    """NLL + (ridge/2)·||w||²; the intercept (last entry) is unpenalized."""
    eta = Xb @ beta
    # log(1 + exp(eta)) - y*eta, computed stably
    nll = float(np.sum(np.logaddexp(0.0, eta) - y * eta))
    return nll + 0.5 * ridge * float(beta[:-1] @ beta[:-1])


def regularized_grad(beta: np.ndarray, Xb: np.ndarray, y: np.ndarray, ridge: float) -> np.ndarray:
    mu = sigmoid(Xb @ beta)
    grad = Xb.T @ (mu - y)
    grad[:-1] += ridge * beta[:-1]
    return grad


class LogitModel(TrainedModel):
    def __init__(self, spec, feature_names, standardizer, weights, intercept, n_iter):
        super().__init__(spec, feature_names, standardizer)
        self.weights = np.asarray(weights, dtype=float)
        self.intercept = float(intercept)
        self.n_iter = int(n_iter)

    def _predict_core(self, X):
        return sigmoid(X @ self.weights + self.intercept)

    def params_to_dict(self):
        return {
            "weights": self.weights.tolist(),
            "intercept": self.intercept,
            "n_iter": self.n_iter,
        }


def fit_logit(spec: ModelSpec, feature_names, standardizer: Standardizer, X, y) -> LogitModel:
    ridge = float(spec.param("ridge", RIDGE))
    max_iter = int(spec.param("max_iter", MAX_ITER))
    tol = float(spec.param("tol", TOL))

    n, p = X.shape
    Xb = np.column_stack([X, np.ones(n)])
    beta = np.zeros(p + 1)
    penalty = np.full(p + 1, ridge)
    penalty[p] = 0.0  # intercept unpenalized

    objective = regularized_nll(beta, Xb, y, ridge)
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        mu = sigmoid(Xb @ beta)
        w = np.maximum(mu * (1.0 - mu), 1e-10)
        hess = (Xb * w[:, None]).T @ Xb + np.diag(penalty)
        grad = regularized_grad(beta, Xb, y, ridge)
        step = np.linalg.solve(hess, grad)

        # Halve the Newton step until the objective does not increase.
        scale, proposed, candidate = 1.0, objective, beta
        for _ in range(50):
            candidate = beta - scale * step
            proposed = regularized_nll(candidate, Xb, y, ridge)
            if proposed <= objective:
                break
            scale *= 0.5
        assert proposed <= objective, "objective increased within an IRLS iteration"
        delta = np.max(np.abs(candidate - beta))
        beta, objective = candidate, proposed
        if delta < tol:
            break

    return LogitModel(spec, feature_names, standardizer, beta[:p], beta[p], n_iter)
