"""Support vector machines trained by sequential minimal optimization.

Classification and ε-regression share one dual solver for

    min ½ βᵀQβ + pᵀβ   s.t.   zᵀβ = 0,  0 ≤ β ≤ C

using maximal-violating-pair working-set selection, so the exit
condition *is* the KKT gap dropping below tolerance. The solver raises
instead of returning a solution that still violates the KKT conditions.
"""

from __future__ import annotations

import numpy as np

from .base import ConvergenceError, ModelError, ModelSpec, Standardizer, TrainedModel

C_DEFAULT = 1.0
TOL = 1e-3
MAX_PASSES = 200
EPSILON = 0.01  # ε-tube; rates live in [0,1] so the tube must be narrow
_BOUND_SLACK = 1e-12


def kernel_matrix(A: np.ndarray, B: np.ndarray, kernel: str, gamma: float) -> np.ndarray:
    if kernel == "linear":
        return A @ B.T
    if kernel == "rbf":
        sq = (
            np.sum(A * A, axis=1)[:, None]
            + np.sum(B * B, axis=1)[None, :]
            - 2.0 * (A @ B.T)
        )
        return np.exp(-gamma * np.maximum(sq, 0.0))
    raise ModelError(f"unknown kernel {kernel!r}")


def kkt_gap(beta, grad, z, C):
    """max violating-pair gap; ≤ tol at a solved point, 0 when sets empty."""
    vals = -z * grad
    up = np.where(z > 0, beta < C - _BOUND_SLACK, beta > _BOUND_SLACK)
    low = np.where(z > 0, beta > _BOUND_SLACK, beta < C - _BOUND_SLACK)
    if not up.any() or not low.any():
        return 0.0
    return float(vals[up].max() - vals[low].min())


def smo_solve(qcol, p, z, C, tol, max_updates):
    """Returns (beta, grad, bias) at a point with KKT gap ≤ tol."""
    m = p.size
    beta = np.zeros(m)
    grad = p.copy()
    for _ in range(max_updates):
        vals = -z * grad
        up = np.where(z > 0, beta < C - _BOUND_SLACK, beta > _BOUND_SLACK)
        low = np.where(z > 0, beta > _BOUND_SLACK, beta < C - _BOUND_SLACK)
        if not up.any() or not low.any():
            break
        i = int(np.flatnonzero(up)[np.argmax(vals[up])])
        j = int(np.flatnonzero(low)[np.argmin(vals[low])])
        gap = vals[i] - vals[j]
        if gap <= tol:
            break
        Qi, Qj = qcol(i), qcol(j)
        curvature = Qi[i] + Qj[j] - 2.0 * z[i] * z[j] * Qi[j]
        step = gap / max(curvature, 1e-12)
        step = min(step, C[i] - beta[i] if z[i] > 0 else beta[i])
        step = min(step, beta[j] if z[j] > 0 else C[j] - beta[j])
        beta[i] += z[i] * step
        beta[j] -= z[j] * step
        grad += step * (z[i] * Qi - z[j] * Qj)
    else:
        raise ConvergenceError("SMO hit its update cap before reaching tolerance")

    assert kkt_gap(beta, grad, z, C) <= tol, "SMO exited with a KKT violation"

    vals = -z * grad
    free = (beta > _BOUND_SLACK) & (beta < C - _BOUND_SLACK)
    if free.any():
        bias = float(vals[free].mean())
    else:
        up = np.where(z > 0, beta < C - _BOUND_SLACK, beta > _BOUND_SLACK)
        low = np.where(z > 0, beta > _BOUND_SLACK, beta < C - _BOUND_SLACK)
        if up.any() and low.any():
            bias = 0.5 * (float(vals[up].max()) + float(vals[low].min()))
        else:
            bias = 0.0
    return beta, grad, bias


class SVMModel(TrainedModel):
    def __init__(self, spec, feature_names, standardizer, sv_X, sv_coef, bias, kernel, gamma):
        super().__init__(spec, feature_names, standardizer)
        self.sv_X = np.asarray(sv_X, dtype=float)
        self.sv_coef = np.asarray(sv_coef, dtype=float)
        self.bias = float(bias)
        self.kernel = kernel
        self.gamma = float(gamma)

    def decision(self, X: np.ndarray) -> np.ndarray:
        X = self._inputs(X)
        if self.sv_X.shape[0] == 0:
            return np.full(X.shape[0], self.bias)
        K = kernel_matrix(X, self.sv_X, self.kernel, self.gamma)
        return K @ self.sv_coef + self.bias

    def _predict_core(self, X):
        if self.sv_X.shape[0] == 0:
            raw = np.full(X.shape[0], self.bias)
        else:
            K = kernel_matrix(X, self.sv_X, self.kernel, self.gamma)
            raw = K @ self.sv_coef + self.bias
        if self.spec.task == "classification":
            return 1.0 / (1.0 + np.exp(-raw))  # distance-to-margin squashing
        return raw

    def linear_weights(self) -> np.ndarray:
        if self.kernel != "linear":
            raise ModelError("weights are only defined for the linear kernel")
        if self.sv_X.shape[0] == 0:
            return np.zeros(len(self.feature_names))
        return self.sv_X.T @ self.sv_coef

    def params_to_dict(self):
        return {
            "sv_X": self.sv_X.tolist(),
            "sv_coef": self.sv_coef.tolist(),
            "bias": self.bias,
            "kernel": self.kernel,
            "gamma": self.gamma,
        }


def _solve_classification(K, y01, C, tol, max_updates):
    z = np.where(y01 > 0.5, 1.0, -1.0)
    Cvec = np.full(y01.size, C)
    p = -np.ones(y01.size)
    cache = {}

    def qcol(i):
        if i not in cache:
            cache[i] = z * (z[i] * K[:, i])
        return cache[i]

    beta, _, bias = smo_solve(qcol, p, z, Cvec, tol, max_updates)
    return beta * z, bias


def _solve_regression(K, y, C, eps, tol, max_updates):
    n = y.size
    z = np.concatenate([np.ones(n), -np.ones(n)])
    p = np.concatenate([eps - y, eps + y])
    Cvec = np.full(2 * n, C)
    cache = {}

    def qcol(i):
        if i not in cache:
            base = K[:, i % n]
            sign = 1.0 if i < n else -1.0
            cache[i] = sign * np.concatenate([base, -base])
        return cache[i]

    beta, _, bias = smo_solve(qcol, p, z, Cvec, tol, max_updates)
    return beta[:n] - beta[n:], bias


def fit_svm(spec: ModelSpec, feature_names, standardizer: Standardizer, X, y) -> SVMModel:
    n, p_features = X.shape
    C = float(spec.param("C", C_DEFAULT))
    tol = float(spec.param("tol", TOL))
    max_passes = int(spec.param("max_passes", MAX_PASSES))
    kernel = spec.param("kernel", "linear")
    gamma = float(spec.param("gamma", 1.0 / max(p_features, 1)))
    eps = float(spec.param("epsilon", EPSILON))

    K = kernel_matrix(X, X, kernel, gamma)
    if spec.task == "classification":
        coef, bias = _solve_classification(K, y, C, tol, max_passes * n)
    else:
        coef, bias = _solve_regression(K, y, C, eps, tol, max_passes * 2 * n)

    keep = np.abs(coef) > _BOUND_SLACK
    return SVMModel(
        spec, feature_names, standardizer,
        X[keep], coef[keep], bias, kernel, gamma,
    )
