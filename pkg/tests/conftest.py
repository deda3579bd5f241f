"""Shared fixtures: small calibrated datasets and a quick linear bundle.

Session scope keeps the synthetic generation and bundle training cost
paid once; every test treats these objects as read-only.
"""

import numpy as np
import pytest

from p2padvisor.encoding import load_lexicon, load_schema
from p2padvisor.synth import SynthConfig, synth_generate
from p2padvisor.workflows import train_bundle


@pytest.fixture(scope="session")
def small_config():
    return SynthConfig(n_traditional=400, n_bidding=3000)


@pytest.fixture(scope="session")
def small_data(small_config):
    """(traditional, bidding) datasets sized for fast model fits."""
    return synth_generate(small_config, seed=11)


@pytest.fixture(scope="session")
def trad_small(small_data):
    return small_data[0]


@pytest.fixture(scope="session")
def bid_small(small_data):
    return small_data[1]


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon()


@pytest.fixture(scope="session")
def traditional_schema():
    return load_schema("traditional")


@pytest.fixture(scope="session")
def bidding_schema():
    return load_schema("bidding")


@pytest.fixture(scope="session")
def linear_bundle(small_data):
    """Bundle trained with the fast linear/logit twins, no selection."""
    trad, bid = small_data
    bundle, report = train_bundle(trad, bid, seed=11, model="linear", select="none")
    return bundle, report


@pytest.fixture()
def rng():
    return np.random.default_rng(123)


class StubModel:
    """Duck-typed predictor: named inputs, row-wise prediction function."""

    def __init__(self, feature_names, fn):
        self.feature_names = list(feature_names)
        self._fn = fn

    def predict(self, X):
        X = np.asarray(X, dtype=float).reshape(-1, len(self.feature_names))
        return np.asarray([self._fn(row) for row in X], dtype=float)
