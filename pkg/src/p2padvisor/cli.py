"""Command-line entry point: thin orchestration over the library modules.

Every command honors --seed and writes byte-identical artifacts for
identical invocations. Reports are CSV (machine-diffable) with a
plain-text sidecar; nothing here plots.

Exit codes: 0 success, 1 data error (one-line diagnostic on stderr),
2 usage error (argparse).
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .encoding import encode_dataset, load_lexicon, load_schema, schema_to_text
from .evaluation import CVReport, analyze_grades, montecarlo_cv
from .ingest import (
    SplitPlan,
    default_filter_policy,
    derive_seed,
    filter_table,
    load_table,
    read_dataset_csv,
    write_dataset_csv,
)
from .recommend import BorrowerRecord, decide, estimate_tuples, portfolio_eval
from .recommend import SentimentAdvice
from .sentiment_sweep import GRID_STEP, optimal_sentiment, sweep_sentiment, uplift_report
from .synth import SynthConfig, synth_generate
from .workflows import (
    balanced_success_sample,
    funded_subset,
    load_bundle,
    resolve_spec,
    sample_rows,
    save_bundle,
    select_features,
    train_bundle,
)
from .workflows import BIDDING_RATE_SAMPLE, SUCCESS_PER_CLASS, TRADITIONAL_SAMPLE

DEFAULT_SEED = 7

# task name -> (dataset kind, model task, per-model seed salt)
TASKS = {
    "trad-rate": ("traditional", "regression", 1),
    "bid-rate": ("bidding", "regression", 2),
    "bid-success": ("bidding", "classification", 3),
}


@dataclass
class RunConfig:
    """Everything a command run can depend on; flags and the config file
    both land here, flags winning."""

    seed: int = DEFAULT_SEED
    model: str = "rf"
    select: str = "recursive"
    ratio: float = 0.8
    runs: int = 5
    out: str = "out"
    grid_step: float = GRID_STEP
    n_traditional: int = 2000
    n_bidding: int = 2000
    traditional: str | None = None
    bidding: str | None = None
    data: str | None = None
    input: str | None = None
    bundle: str | None = None
    bind: str = "127.0.0.1:8000"
    task: str | None = None
    kind: str | None = None
    non_funded_only: bool = False

    def plan(self) -> SplitPlan:
        return SplitPlan(ratio=self.ratio, runs=self.runs, seed=self.seed)


_CONFIG_TYPES = {f.name: f.type for f in fields(RunConfig)}


class ConfigError(ValueError):
    pass


def read_config(path) -> dict:
    """key = value lines; '#' starts a comment; keys mirror RunConfig."""
    values = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CONFIG_TYPES:
            raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
        values[key] = _coerce(key, raw)
    return values


def _coerce(key: str, raw: str):
    kind = _CONFIG_TYPES[key]
    if kind.startswith("int"):
        return int(raw)
    if kind.startswith("float"):
        return float(raw)
    if kind.startswith("bool"):
        if raw.lower() in ("1", "true", "yes"):
            return True
        if raw.lower() in ("0", "false", "no"):
            return False
        raise ConfigError(f"config key {key!r}: expected a boolean, got {raw!r}")
    return raw


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _out_dir(cfg: RunConfig) -> Path:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


# --------------------------------------------------------- borrower CSVs

_RESERVED = ("BorrowerID", "Description", "HistoricalType", "HistoricalRate", "HistoricalFunded")


def _parse_bool(raw: str) -> bool:
    if raw.lower() in ("1", "1.0", "true", "yes"):
        return True
    if raw.lower() in ("0", "0.0", "false", "no"):
        return False
    raise ValueError(f"expected a boolean cell, got {raw!r}")


def read_borrowers(path) -> list[BorrowerRecord]:
    """Borrower rows: feature columns plus the reserved ID/Description/
    Historical* columns. Numeric-looking cells become floats, everything
    else stays a raw class string for the encoder."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"empty borrower file: {path}")
        records = []
        for row in reader:
            features = {}
            reserved = dict.fromkeys(_RESERVED, "")
            for key, raw in row.items():
                if key is None or raw is None:
                    raise ValueError(f"{path}: ragged row {len(records) + 1}")
                raw = raw.strip()
                if key in reserved:
                    reserved[key] = raw
                elif raw != "":
                    try:
                        features[key] = float(raw)
                    except ValueError:
                        features[key] = raw
            records.append(BorrowerRecord(
                features=features,
                borrower_id=reserved["BorrowerID"],
                description=reserved["Description"] or None,
                historical_type=reserved["HistoricalType"] or None,
                historical_rate=(
                    float(reserved["HistoricalRate"]) if reserved["HistoricalRate"] else None
                ),
                historical_funded=(
                    _parse_bool(reserved["HistoricalFunded"])
                    if reserved["HistoricalFunded"] else None
                ),
            ))
    return records


# ------------------------------------------------------------- commands


def cmd_synth(cfg: RunConfig) -> int:
    out = _out_dir(cfg)
    synth_cfg = SynthConfig(n_traditional=cfg.n_traditional, n_bidding=cfg.n_bidding)
    trad, bid = synth_generate(synth_cfg, cfg.seed)
    write_dataset_csv(trad, out / "traditional.csv")
    write_dataset_csv(bid, out / "bidding.csv")
    print(f"wrote {out / 'traditional.csv'} ({trad.n_rows} rows)")
    print(f"wrote {out / 'bidding.csv'} ({bid.n_rows} rows)")
    return 0


def cmd_ingest(cfg: RunConfig) -> int:
    if not cfg.input or not cfg.kind:
        raise ConfigError("ingest needs --input <raw csv> and --kind {traditional,bidding}")
    out = _out_dir(cfg)
    schema = load_schema(cfg.kind)
    table = load_table(cfg.input, cfg.kind, schema.column_kinds())
    table = filter_table(table, default_filter_policy())
    resolved = schema.resolve(table)
    d = encode_dataset(table, resolved, load_lexicon())
    write_dataset_csv(d, out / f"{cfg.kind}.csv")
    _write(out / f"{cfg.kind}_filter_report.txt", table.filter_report.to_text())
    _write(out / f"{cfg.kind}_schema.txt", schema_to_text(resolved))
    print(f"wrote {out / (cfg.kind + '.csv')} ({d.n_rows} rows, {d.n_features} features)")
    return 0


def cmd_analyze_grades(cfg: RunConfig) -> int:
    if not cfg.traditional or not cfg.bidding:
        raise ConfigError("analyze-grades needs --traditional and --bidding dataset CSVs")
    out = _out_dir(cfg)
    trad = read_dataset_csv(cfg.traditional, "traditional")
    bid = read_dataset_csv(cfg.bidding, "bidding")
    report = analyze_grades(trad, bid)
    _write(out / "grades.csv", report.to_csv_text())
    lines = []
    for e in report.entries:
        if not e.computed:
            lines.append(f"{e.grade}: too few loans to compare")
            continue
        verdict = "different" if e.reject else "not distinguishable"
        lines.append(
            f"{e.grade}: traditional {e.mean_traditional:.4f} vs bidding "
            f"{e.mean_bidding:.4f}, p={e.p:.4g}, {verdict}"
        )
    _write(out / "grades.txt", "\n".join(lines) + "\n")
    print(f"wrote {out / 'grades.csv'}")
    return 0


def _task_view(cfg: RunConfig):
    """Dataset view + model spec for a named prediction task, applying
    the same sampling policy the trainer uses."""
    if cfg.task not in TASKS:
        raise ConfigError(f"unknown task {cfg.task!r} (expected one of {', '.join(TASKS)})")
    if not cfg.data:
        raise ConfigError("this command needs --data <dataset csv>")
    kind, model_task, salt = TASKS[cfg.task]
    d = read_dataset_csv(cfg.data, kind)
    if cfg.task == "trad-rate":
        view = sample_rows(d, TRADITIONAL_SAMPLE, cfg.seed, 11)
    elif cfg.task == "bid-rate":
        view = sample_rows(funded_subset(d), BIDDING_RATE_SAMPLE, cfg.seed, 12)
    else:
        view = balanced_success_sample(d, SUCCESS_PER_CLASS, cfg.seed)
    spec = resolve_spec(cfg.model, model_task, derive_seed(cfg.seed, salt))
    return view, spec


def cmd_cv(cfg: RunConfig) -> int:
    out = _out_dir(cfg)
    view, spec = _task_view(cfg)
    plan = cfg.plan()
    features = None
    selection_text = ""
    if cfg.select != "none":
        report = select_features(spec, view, plan, cfg.select)
        features = report.selected
        selection_text = report.to_text()
    cv = montecarlo_cv(spec, view, plan, features=features)
    _write(out / "cv.csv", cv.to_csv_text())
    sidecar = [
        f"task: {cfg.task}",
        f"model: {spec.kind}",
        f"metric: {cv.metric}",
        f"mean: {cv.mean!r}",
        f"features: {', '.join(cv.features)}",
    ]
    if selection_text:
        sidecar += ["", selection_text.rstrip()]
    _write(out / "cv.txt", "\n".join(sidecar) + "\n")
    print(f"{cfg.task} {spec.kind} mean {cv.metric}: {cv.mean!r}")
    return 0


def cmd_select(cfg: RunConfig) -> int:
    out = _out_dir(cfg)
    view, spec = _task_view(cfg)
    report = select_features(spec, view, cfg.plan(), cfg.select)
    _write(out / "selection.txt", report.to_text())
    rows = [f"{size},{score!r}" for size, score in report.trajectory]
    _write(out / "selection.csv", "n_features,score\n" + "\n".join(rows) + "\n")
    print(f"selected {len(report.selected)} features, score {report.final_score!r}")
    return 0


def cmd_train(cfg: RunConfig) -> int:
    if not cfg.traditional or not cfg.bidding:
        raise ConfigError("train needs --traditional and --bidding dataset CSVs")
    out = _out_dir(cfg)
    trad = read_dataset_csv(cfg.traditional, "traditional")
    bid = read_dataset_csv(cfg.bidding, "bidding")
    bundle, report = train_bundle(
        trad, bid, cfg.seed, model=cfg.model, select=cfg.select, plan=cfg.plan()
    )
    save_bundle(bundle, out / "bundle")
    _write(out / "train_report.txt", report.to_text())
    print(f"wrote {out / 'bundle'} (g* = {bundle.g_star!r})")
    return 0


def cmd_sweep_sentiment(cfg: RunConfig) -> int:
    if not cfg.bundle or not cfg.data:
        raise ConfigError("sweep-sentiment needs --bundle and --data")
    out = _out_dir(cfg)
    bundle = load_bundle(cfg.bundle)
    d = read_dataset_csv(cfg.data, "bidding")
    swept = d
    if cfg.non_funded_only:
        if d.labels is None:
            raise ConfigError("--non-funded-only needs funded labels in the data")
        swept = d.subset_rows(np.flatnonzero(d.labels == 0.0))
    curve = sweep_sentiment(bundle.bidding_success, swept, cfg.grid_step)
    g_star, count = optimal_sentiment(curve)
    _write(out / "sweep.csv", curve.to_csv_text())
    lines = [
        f"loans swept: {swept.n_rows}",
        f"optimal sentiment: {g_star!r}",
        f"predicted funded at optimum: {count}",
    ]
    if d.labels is not None or d.task == "classification":
        before, after, p = uplift_report(bundle.bidding_success, d, cfg.grid_step)
        lines += [
            f"funded before: {before}",
            f"funded after rewriting to optimum: {after}",
            f"uplift p-value: {p!r}",
        ]
    _write(out / "sweep.txt", "\n".join(lines) + "\n")
    print(f"optimal sentiment {g_star!r} ({count} predicted funded)")
    return 0


def cmd_recommend(cfg: RunConfig) -> int:
    if not cfg.bundle or not cfg.input:
        raise ConfigError("recommend needs --bundle and --input <borrowers csv>")
    out = _out_dir(cfg)
    bundle = load_bundle(cfg.bundle)
    records = read_borrowers(cfg.input)
    rows = []
    texts = []
    for b in records:
        trad, bid = estimate_tuples(b, bundle.trio, bundle.lexicon)
        _, bid_at_star = estimate_tuples(
            b, bundle.trio, bundle.lexicon, sentiment_override=bundle.g_star
        )
        advice = SentimentAdvice(bundle.g_star, bid_at_star.success)
        rec = decide(trad, bid, borrower_id=b.borrower_id, sentiment_advice=advice)
        texts.append(rec.to_text())
        rows.append(",".join([
            rec.borrower_id,
            repr(trad.interest), repr(trad.success), repr(trad.distance),
            repr(bid.interest), repr(bid.success), repr(bid.distance),
            rec.chosen, str(rec.tie_broken),
            repr(advice.optimal_sentiment), repr(advice.predicted_success),
        ]))
    header = ("borrower_id,traditional_interest,traditional_success,traditional_distance,"
              "bidding_interest,bidding_success,bidding_distance,chosen,tie_broken,"
              "optimal_sentiment,success_at_optimal")
    _write(out / "recommendations.csv", header + "\n" + "\n".join(rows) + "\n")
    _write(out / "recommendations.txt", "\n".join(texts))
    print(f"wrote {out / 'recommendations.csv'} ({len(rows)} borrowers)")
    return 0


def cmd_portfolio(cfg: RunConfig) -> int:
    if not cfg.bundle or not cfg.input:
        raise ConfigError("portfolio needs --bundle and --input <loans csv>")
    out = _out_dir(cfg)
    bundle = load_bundle(cfg.bundle)
    records = read_borrowers(cfg.input)
    summary = portfolio_eval(records, bundle.trio, bundle.lexicon, bundle.g_star)
    _write(out / "portfolio.txt", summary.to_text())
    blank = ""
    row = ",".join([
        str(summary.n_loans),
        str(summary.recommended_traditional),
        str(summary.recommended_bidding),
        repr(summary.expected_funded),
        repr(summary.mean_predicted_rate_funded)
        if summary.mean_predicted_rate_funded is not None else blank,
        str(summary.historical_funded) if summary.historical_funded is not None else blank,
        repr(summary.historical_mean_rate_funded)
        if summary.historical_mean_rate_funded is not None else blank,
    ])
    header = ("n_loans,recommended_traditional,recommended_bidding,expected_funded,"
              "mean_predicted_rate_funded,historical_funded,historical_mean_rate_funded")
    _write(out / "portfolio.csv", header + "\n" + row + "\n")
    print(summary.to_text(), end="")
    return 0


def cmd_serve(cfg: RunConfig) -> int:
    if not cfg.bundle:
        raise ConfigError("serve needs --bundle")
    from .service import serve

    serve(cfg.bundle, cfg.bind)
    return 0


COMMANDS = {
    "ingest": cmd_ingest,
    "analyze-grades": cmd_analyze_grades,
    "cv": cmd_cv,
    "select": cmd_select,
    "sweep-sentiment": cmd_sweep_sentiment,
    "train": cmd_train,
    "recommend": cmd_recommend,
    "portfolio": cmd_portfolio,
    "synth": cmd_synth,
    "serve": cmd_serve,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p2padvisor",
        description="Borrower-side advisor for peer-to-peer lending.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str, *flags):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="key = value config file")
        p.add_argument("--seed", type=int, help="master random seed")
        p.add_argument("--out", help="output directory")
        if "model" in flags:
            p.add_argument("--model", choices=["linear", "logit", "rf", "svm", "knn"])
            p.add_argument("--select",
                           choices=["forward", "backward", "recursive", "none", "baseline"])
            p.add_argument("--ratio", type=float, help="train share per split")
            p.add_argument("--runs", type=int, help="number of random splits")
        if "task" in flags:
            p.add_argument("--task", choices=list(TASKS))
            p.add_argument("--data", help="encoded dataset CSV")
        if "bundle" in flags:
            p.add_argument("--bundle", help="trained bundle directory")
        if "input" in flags:
            p.add_argument("--input", help="borrower/loan CSV")
        return p

    p = add("ingest", "clean and encode a raw platform CSV")
    p.add_argument("--input", help="raw platform CSV")
    p.add_argument("--kind", choices=["traditional", "bidding"])

    p = add("analyze-grades", "compare rates per credit grade across loan types")
    p.add_argument("--traditional", help="encoded traditional dataset CSV")
    p.add_argument("--bidding", help="encoded bidding dataset CSV")

    add("cv", "cross-validate one prediction task", "model", "task")
    add("select", "run wrapper feature selection for one task", "model", "task")

    p = add("sweep-sentiment", "sweep description sentiment through the classifier",
            "bundle", "task")
    p.add_argument("--grid-step", type=float, dest="grid_step")
    p.add_argument("--non-funded-only", action="store_true", dest="non_funded_only",
                   default=None)

    p = add("train", "train the three predictors and save a bundle", "model")
    p.add_argument("--traditional", help="encoded traditional dataset CSV")
    p.add_argument("--bidding", help="encoded bidding dataset CSV")

    add("recommend", "recommend a loan type per borrower row", "bundle", "input")
    add("portfolio", "evaluate a whole loan portfolio", "bundle", "input")

    p = add("synth", "generate calibrated synthetic datasets")
    p.add_argument("--n-traditional", type=int, dest="n_traditional")
    p.add_argument("--n-bidding", type=int, dest="n_bidding")

    p = add("serve", "serve the HTTP API over a trained bundle", "bundle")
    p.add_argument("--bind", help="host:port to listen on")

    return parser


def _merge_config(args: argparse.Namespace) -> RunConfig:
    """Config file fills the gaps, explicit flags win, dataclass defaults
    backstop everything."""
    values = {}
    if getattr(args, "config", None):
        values.update(read_config(args.config))
    for f in fields(RunConfig):
        given = getattr(args, f.name, None)
        if given is not None:
            values[f.name] = given
    return RunConfig(**values)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _merge_config(args)
    try:
        return COMMANDS[args.command](cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
