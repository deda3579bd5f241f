"""Shared model plumbing: specs, standardization, fit/predict dispatch.

Every model is deterministic given (spec, training data): randomness
only enters through numpy generators seeded from spec.seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..ingest import Dataset

MODEL_KINDS = ("linear", "logit", "random_forest", "svm", "knn")
TASKS = ("regression", "classification")

# Kinds that operate on z-scored features.
STANDARDIZED_KINDS = ("svm", "knn")


class ModelError(ValueError):
    """Raised for invalid specs or degenerate training inputs."""


class ConvergenceError(RuntimeError):
    """Raised when an iterative solver hits its cap before tolerance."""


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    task: str
    hyperparameters: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ModelError(f"unknown model kind {self.kind!r}")
        if self.task not in TASKS:
            raise ModelError(f"unknown task {self.task!r}")
        if self.kind == "linear" and self.task != "regression":
            raise ModelError("linear model supports regression only")
        if self.kind == "logit" and self.task != "classification":
            raise ModelError("logit model supports classification only")

    def param(self, name, default):
        return self.hyperparameters.get(name, default)


@dataclass(frozen=True)
class Standardizer:
    mean: np.ndarray
    sd: np.ndarray

    @classmethod
    def from_data(cls, X: np.ndarray) -> "Standardizer":
        mean = X.mean(axis=0)
        sd = X.std(axis=0)
        sd = np.where(sd == 0.0, 1.0, sd)  # zero-variance guard
        return cls(mean=mean, sd=sd)

    def transform(self, X: np.ndarray) -> np.ndarray:
        return (X - self.mean) / self.sd


class TrainedModel:
    """A fitted model: immutable parameters plus fit-time feature order."""

    def __init__(self, spec: ModelSpec, feature_names: list[str], standardizer: Standardizer):
        self.spec = spec
        self.feature_names = list(feature_names)
        self.standardizer = standardizer

    def _inputs(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.shape[1] != len(self.feature_names):
            raise ModelError(
                f"expected {len(self.feature_names)} feature columns, got {X.shape[1]}"
            )
        if self.spec.kind in STANDARDIZED_KINDS:
            X = self.standardizer.transform(X)
        return X

    def predict(self, X: np.ndarray) -> np.ndarray:
        """Regression: real values. Classification: P(funded) in [0,1]."""
        return self._predict_core(self._inputs(X))

    def predict_labels(self, X: np.ndarray) -> np.ndarray:
        """Hard 0/1 labels, thresholding the probability at 0.5."""
        if self.spec.task != "classification":
            raise ModelError("labels are only defined for classification")
        return (self.predict(X) >= 0.5).astype(float)

    def _predict_core(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def params_to_dict(self) -> dict:
        raise NotImplementedError


def _check_train(spec: ModelSpec, train: Dataset) -> None:
    if train.n_rows == 0:
        raise ModelError("training set is empty")
    if spec.task == "classification":
        classes = np.unique(train.y)
        if not np.isin(classes, (0.0, 1.0)).all():
            raise ModelError("classification labels must be 0/1")
        if classes.size < 2:
            raise ModelError("training labels are all identical")


def fit(spec: ModelSpec, train: Dataset) -> TrainedModel:
    """Fit spec.kind on the training set; deterministic per spec.seed."""
    from . import forest, knn, linear, logit, svm

    _check_train(spec, train)
    standardizer = Standardizer.from_data(train.X)
    builders = {
        "linear": linear.fit_linear,
        "logit": logit.fit_logit,
        "random_forest": forest.fit_forest,
        "svm": svm.fit_svm,
        "knn": knn.fit_knn,
    }
    X = train.X
    if spec.kind in STANDARDIZED_KINDS:
        X = standardizer.transform(X)
    return builders[spec.kind](spec, train.feature_names, standardizer, X, train.y)


def predict(m: TrainedModel, X: np.ndarray) -> np.ndarray:
    return m.predict(X)


def predict_labels(m: TrainedModel, X: np.ndarray) -> np.ndarray:
    return m.predict_labels(X)
