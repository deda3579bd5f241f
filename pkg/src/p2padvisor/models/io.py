"""Model artifact serialization.

Artifacts are versioned JSON documents carrying the ModelSpec, fit-time
feature order, standardization stats and learned parameters. Floats
round-trip exactly (shortest-repr encoding), so a reloaded model
predicts bit-identically.
"""

from __future__ import annotations

import json

import numpy as np

from .base import ModelSpec, Standardizer, TrainedModel
from .forest import ForestModel
from .knn import KNNModel
from .linear import LinearModel
from .logit import LogitModel
from .svm import SVMModel

FORMAT_NAME = "p2padvisor-model"
FORMAT_VERSION = 1


class ModelIOError(ValueError):
    """Raised for unreadable or incompatible model artifacts."""


def model_to_dict(m: TrainedModel) -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "spec": {
            "kind": m.spec.kind,
            "task": m.spec.task,
            "hyperparameters": m.spec.hyperparameters,
            "seed": m.spec.seed,
        },
        "feature_names": m.feature_names,
        "standardizer": {
            "mean": m.standardizer.mean.tolist(),
            "sd": m.standardizer.sd.tolist(),
        },
        "params": m.params_to_dict(),
    }


def model_from_dict(doc: dict) -> TrainedModel:
    if doc.get("format") != FORMAT_NAME:
        raise ModelIOError("not a model artifact")
    if doc.get("version") != FORMAT_VERSION:
        raise ModelIOError(f"unsupported artifact version {doc.get('version')!r}")
    spec = ModelSpec(**doc["spec"])
    names = doc["feature_names"]
    std = Standardizer(
        mean=np.asarray(doc["standardizer"]["mean"], dtype=float),
        sd=np.asarray(doc["standardizer"]["sd"], dtype=float),
    )
    params = doc["params"]
    if spec.kind == "linear":
        return LinearModel(spec, names, std, params["weights"], params["intercept"])
    if spec.kind == "logit":
        return LogitModel(
            spec, names, std, params["weights"], params["intercept"], params["n_iter"]
        )
    if spec.kind == "random_forest":
        trees = [
            {
                "feature": np.asarray(t["feature"], dtype=np.int64),
                "threshold": np.asarray(t["threshold"], dtype=float),
                "left": np.asarray(t["left"], dtype=np.int64),
                "right": np.asarray(t["right"], dtype=np.int64),
                "value": np.asarray(t["value"], dtype=float),
            }
            for t in params["trees"]
        ]
        return ForestModel(spec, names, std, trees, params["importances"])
    if spec.kind == "svm":
        return SVMModel(
            spec, names, std,
            np.asarray(params["sv_X"], dtype=float).reshape(-1, len(names)),
            params["sv_coef"], params["bias"], params["kernel"], params["gamma"],
        )
    if spec.kind == "knn":
        return KNNModel(
            spec, names, std,
            np.asarray(params["train_X"], dtype=float).reshape(-1, len(names)),
            params["train_y"], params["k"],
        )
    raise ModelIOError(f"unknown model kind {spec.kind!r}")


def save_model(m: TrainedModel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(m), fh, indent=None, separators=(",", ":"))
        fh.write("\n")


def load_model(path) -> TrainedModel:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelIOError(f"unreadable model artifact: {exc}") from None
    return model_from_dict(doc)
