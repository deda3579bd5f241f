"""From-scratch regressors and classifiers behind one fit/predict API."""

from .base import (
    MODEL_KINDS,
    ConvergenceError,
    ModelError,
    ModelSpec,
    Standardizer,
    TrainedModel,
    fit,
    predict,
    predict_labels,
)
from .importance import feature_importance
from .io import load_model, save_model

__all__ = [
    "MODEL_KINDS",
    "ConvergenceError",
    "ModelError",
    "ModelSpec",
    "Standardizer",
    "TrainedModel",
    "feature_importance",
    "fit",
    "load_model",
    "predict",
    "predict_labels",
    "save_model",
]
