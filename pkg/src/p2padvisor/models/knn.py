"""k-nearest-neighbour prediction on z-scored features.

Distance ties resolve to the lower training-row index (stable argsort);
classification vote ties resolve to non-funded, the conservative call
for a borrower deciding whether to auction a loan.
"""

from __future__ import annotations

import numpy as np

from .base import ModelSpec, Standardizer, TrainedModel

K_NEIGHBOURS = 5
_CHUNK = 256


class KNNModel(TrainedModel):
    def __init__(self, spec, feature_names, standardizer, train_X, train_y, k):
        super().__init__(spec, feature_names, standardizer)
        self.train_X = np.asarray(train_X, dtype=float)  # standardized space
        self.train_y = np.asarray(train_y, dtype=float)
        self.k = int(k)

    def _predict_core(self, X):
        out = np.empty(X.shape[0])
        for start in range(0, X.shape[0], _CHUNK):
            chunk = X[start:start + _CHUNK]
            d2 = (
                np.sum(chunk * chunk, axis=1)[:, None]
                + np.sum(self.train_X * self.train_X, axis=1)[None, :]
                - 2.0 * (chunk @ self.train_X.T)
            )
            order = np.argsort(d2, axis=1, kind="stable")[:, : self.k]
            out[start:start + _CHUNK] = self.train_y[order].mean(axis=1)
        return out

    def predict_labels(self, X):
        if self.spec.task != "classification":
            return super().predict_labels(X)
        return (self.predict(X) > 0.5).astype(float)  # exact tie → non-funded

    def params_to_dict(self):
        return {
            "train_X": self.train_X.tolist(),
            "train_y": self.train_y.tolist(),
            "k": self.k,
        }


def fit_knn(spec: ModelSpec, feature_names, standardizer: Standardizer, X, y) -> KNNModel:
    k = int(spec.param("k", K_NEIGHBOURS))
    k = min(max(k, 1), X.shape[0])
    return KNNModel(spec, feature_names, standardizer, X, y, k)
