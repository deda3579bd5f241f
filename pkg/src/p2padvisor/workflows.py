"""End-to-end orchestration: sampling policy, bundle training, bundle IO.

A trained bundle holds the three predictors (traditional rate, bidding
rate, bidding success), the resolved encoding schemas, the lexicon and
the funding-optimal sentiment value. Bundles are directories of JSON
and plain-text artifacts; loading one reproduces predictions exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .encoding import (
    EncodingSchema,
    SentimentLexicon,
    load_lexicon,
    load_schema,
    parse_schema,
    schema_to_text,
)
from .ingest import Dataset, SplitPlan, derive_seed
from .models import ModelSpec, TrainedModel, fit, load_model, save_model
from .recommend import ModelTrio
from .selection import (
    SelectionReport,
    backward_select,
    baseline_preset,
    forward_select,
    inner_scorer,
    recursive_select,
)
from .sentiment_sweep import optimal_sentiment, sweep_sentiment

BUNDLE_FORMAT = "p2padvisor-bundle"
BUNDLE_VERSION = 1

# Paper-scale sampling defaults; shrunk automatically on smaller data.
TRADITIONAL_SAMPLE = 10_000
BIDDING_RATE_SAMPLE = 908
SUCCESS_PER_CLASS = 908

_SALT_TRAD_SAMPLE = 11
_SALT_BID_SAMPLE = 12
_SALT_BALANCED = 13

MODEL_NAME_MAP = {"rf": "random_forest"}
SELECT_METHODS = ("forward", "backward", "recursive", "none", "baseline")


class WorkflowError(ValueError):
    """Raised for invalid pipeline configuration."""


def resolve_spec(model: str, task: str, seed: int, hyperparameters: dict | None = None) -> ModelSpec:
    """CLI model name -> ModelSpec; linear/logit are twins across tasks."""
    kind = MODEL_NAME_MAP.get(model, model)
    if kind in ("linear", "logit"):
        kind = "linear" if task == "regression" else "logit"
    return ModelSpec(kind=kind, task=task, hyperparameters=hyperparameters or {}, seed=seed)


def sample_rows(d: Dataset, n: int, seed: int, salt: int) -> Dataset:
    if d.n_rows <= n:
        return d
    rng = np.random.default_rng([seed, salt])
    idx = np.sort(rng.choice(d.n_rows, size=n, replace=False))
    return d.subset_rows(idx)


def funded_subset(bidding: Dataset) -> Dataset:
    if bidding.labels is None:
        raise WorkflowError("bidding dataset carries no funded labels")
    return bidding.subset_rows(np.flatnonzero(bidding.labels == 1.0))


def balanced_success_sample(bidding: Dataset, per_class: int, seed: int) -> Dataset:
    """Funded plus equally many sampled non-funded loans, as a
    classification dataset."""
    if bidding.labels is None:
        raise WorkflowError("bidding dataset carries no funded labels")
    funded = np.flatnonzero(bidding.labels == 1.0)
    nonfunded = np.flatnonzero(bidding.labels == 0.0)
    if funded.size == 0 or nonfunded.size == 0:
        raise WorkflowError("need both funded and non-funded loans for the classifier")
    k = min(per_class, funded.size, nonfunded.size)
    rng = np.random.default_rng([seed, _SALT_BALANCED])
    pick_f = np.sort(rng.choice(funded, size=k, replace=False))
    pick_n = np.sort(rng.choice(nonfunded, size=k, replace=False))
    idx = np.sort(np.concatenate([pick_f, pick_n]))
    return bidding.subset_rows(idx).success_view()


def select_features(spec: ModelSpec, d: Dataset, plan: SplitPlan, method: str) -> SelectionReport:
    """Run the requested wrapper method; `none` keeps every feature and
    `baseline` pins the prior-art preset (bidding features only)."""
    if method == "forward":
        return forward_select(spec, d, plan)
    if method == "backward":
        return backward_select(spec, d, plan)
    if method == "recursive":
        return recursive_select(spec, d, plan)
    if method in ("none", "baseline"):
        features = list(d.feature_names) if method == "none" else baseline_preset()
        missing = [f for f in features if f not in d.feature_names]
        if missing:
            raise WorkflowError(f"baseline preset features absent from data: {missing}")
        score = inner_scorer(spec, d, plan)(features)
        return SelectionReport(method, features, [(len(features), score)], score)
    raise WorkflowError(f"unknown selection method {method!r}")


@dataclass
class ModelBundle:
    trio: ModelTrio
    lexicon: SentimentLexicon
    g_star: float
    seed: int

    @property
    def traditional_rate(self) -> TrainedModel:
        return self.trio.traditional_rate

    @property
    def bidding_rate(self) -> TrainedModel:
        return self.trio.bidding_rate

    @property
    def bidding_success(self) -> TrainedModel:
        return self.trio.bidding_success


@dataclass
class TrainReport:
    selection: dict[str, SelectionReport]
    g_star: float
    sample_sizes: dict[str, int]

    def to_text(self) -> str:
        lines = []
        for name, report in self.selection.items():
            lines.append(f"[{name}]")
            lines.append(report.to_text().rstrip())
            lines.append("")
        lines.append(f"optimal sentiment g*: {self.g_star!r}")
        for name, size in self.sample_sizes.items():
            lines.append(f"sample size {name}: {size}")
        return "\n".join(lines) + "\n"


def train_bundle(
    traditional: Dataset,
    bidding: Dataset,
    seed: int,
    model: str = "rf",
    select: str = "recursive",
    plan: SplitPlan | None = None,
    traditional_schema: EncodingSchema | None = None,
    bidding_schema: EncodingSchema | None = None,
    lexicon: SentimentLexicon | None = None,
    sample_sizes: dict | None = None,
) -> tuple[ModelBundle, TrainReport]:
    """Train the three predictors with the configured selection method.

    The selection method applies per model; the baseline preset only
    exists in bidding feature space, so traditional falls back to the
    full feature set under `baseline`.
    """
    if select not in SELECT_METHODS:
        raise WorkflowError(f"unknown selection method {select!r}")
    plan = plan or SplitPlan(seed=seed)
    lexicon = lexicon or load_lexicon()
    traditional_schema = traditional_schema or load_schema("traditional")
    bidding_schema = bidding_schema or load_schema("bidding")
    sizes = {
        "traditional": TRADITIONAL_SAMPLE,
        "bidding_rate": BIDDING_RATE_SAMPLE,
        "success_per_class": SUCCESS_PER_CLASS,
    }
    sizes.update(sample_sizes or {})

    trad = sample_rows(traditional, sizes["traditional"], seed, _SALT_TRAD_SAMPLE)
    bid_funded = sample_rows(
        funded_subset(bidding), sizes["bidding_rate"], seed, _SALT_BID_SAMPLE
    )
    balanced = balanced_success_sample(bidding, sizes["success_per_class"], seed)

    reports: dict[str, SelectionReport] = {}
    models: dict[str, TrainedModel] = {}
    jobs = (
        ("traditional_rate", 1, trad, "regression", "none" if select == "baseline" else select),
        ("bidding_rate", 2, bid_funded, "regression", select),
        ("bidding_success", 3, balanced, "classification", select),
    )
    for name, salt, data, task, method in jobs:
        spec = resolve_spec(model, task, derive_seed(seed, salt))
        report = select_features(spec, data, plan, method)
        reports[name] = report
        models[name] = fit(spec, data.restrict(report.selected))

    nonfunded = bidding.subset_rows(np.flatnonzero(bidding.labels == 0.0))
    if nonfunded.n_rows > 0:
        curve = sweep_sentiment(models["bidding_success"], nonfunded)
        g_star, _ = optimal_sentiment(curve)
    else:
        g_star = 0.0

    trio = ModelTrio(
        traditional_rate=models["traditional_rate"],
        bidding_rate=models["bidding_rate"],
        bidding_success=models["bidding_success"],
        traditional_schema=traditional_schema,
        bidding_schema=bidding_schema,
    )
    bundle = ModelBundle(trio=trio, lexicon=lexicon, g_star=g_star, seed=seed)
    report = TrainReport(
        selection=reports,
        g_star=g_star,
        sample_sizes={
            "traditional": trad.n_rows,
            "bidding_rate": bid_funded.n_rows,
            "bidding_success": balanced.n_rows,
        },
    )
    return bundle, report


def save_bundle(bundle: ModelBundle, out_dir) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    save_model(bundle.trio.traditional_rate, out / "traditional_rate.json")
    save_model(bundle.trio.bidding_rate, out / "bidding_rate.json")
    save_model(bundle.trio.bidding_success, out / "bidding_success.json")
    (out / "traditional_schema.txt").write_text(
        schema_to_text(bundle.trio.traditional_schema), encoding="utf-8"
    )
    (out / "bidding_schema.txt").write_text(
        schema_to_text(bundle.trio.bidding_schema), encoding="utf-8"
    )
    lex_lines = [f"{token}\t{valence!r}" for token, valence in sorted(bundle.lexicon.entries.items())]
    (out / "lexicon.txt").write_text("\n".join(lex_lines) + "\n", encoding="utf-8")
    meta = {
        "format": BUNDLE_FORMAT,
        "version": BUNDLE_VERSION,
        "seed": bundle.seed,
        "g_star": bundle.g_star,
    }
    (out / "meta.json").write_text(
        json.dumps(meta, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )


def load_bundle(bundle_dir) -> ModelBundle:
    path = Path(bundle_dir)
    meta = json.loads((path / "meta.json").read_text(encoding="utf-8"))
    if meta.get("format") != BUNDLE_FORMAT or meta.get("version") != BUNDLE_VERSION:
        raise WorkflowError(f"unsupported bundle at {path}")
    trio = ModelTrio(
        traditional_rate=load_model(path / "traditional_rate.json"),
        bidding_rate=load_model(path / "bidding_rate.json"),
        bidding_success=load_model(path / "bidding_success.json"),
        traditional_schema=parse_schema(
            (path / "traditional_schema.txt").read_text(encoding="utf-8"), "traditional"
        ),
        bidding_schema=parse_schema(
            (path / "bidding_schema.txt").read_text(encoding="utf-8"), "bidding"
        ),
    )
    lexicon = load_lexicon(path / "lexicon.txt")
    return ModelBundle(
        trio=trio, lexicon=lexicon,
        g_star=float(meta["g_star"]), seed=int(meta["seed"]),
    )
