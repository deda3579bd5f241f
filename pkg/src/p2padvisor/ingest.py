"""Loading, cleaning and splitting of loan tables.

Raw platform exports arrive as CSV with a header row. Cleaning drops
post-origination columns, blank/near-constant columns and rows with
missing values, in that order, which makes the filter idempotent.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace

import numpy as np

DATASET_KINDS = ("traditional", "bidding")
MISSING_MARKERS = ("", "NA")

# Response columns a platform export must carry.
REQUIRED_RESPONSES = {
    "traditional": ("BorrowerRate",),
    "bidding": ("BorrowerRate", "LoanStatus"),
}


class IngestError(ValueError):
    """Raised for unreadable or structurally invalid input tables."""


@dataclass
class Column:
    name: str
    kind: str  # categorical | numerical | text


@dataclass
class RawTable:
    """A parsed loan table: typed columns plus row-major raw values.

    Values are floats for numerical columns, strings otherwise; missing
    entries are None.
    """

    columns: list[Column]
    rows: list[list]
    dataset_kind: str
    unknown_columns: list[str] = field(default_factory=list)
    filter_report: "FilterReport | None" = None

    def __post_init__(self):
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise IngestError("duplicate column names in table")
        for i, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise IngestError(f"row {i} has {len(row)} values, expected {len(self.columns)}")

    @property
    def column_names(self) -> list[str]:
        return [c.name for c in self.columns]

    def column_values(self, name: str) -> list:
        j = self.column_names.index(name)
        return [row[j] for row in self.rows]

    @property
    def n_rows(self) -> int:
        return len(self.rows)


@dataclass
class FilterPolicy:
    """Cleaning rules applied to a raw table.

    The post-origination blacklist is an explicit, versioned list shipped
    with the package (see data/post_origination.txt).
    """

    drop_constant_or_blank_columns: bool = True
    post_origination_feature_names: frozenset[str] = frozenset()
    drop_rows_with_missing: bool = True
    # A column counts as constant when at least this share of its
    # non-missing values are identical.
    constant_share: float = 0.995


@dataclass
class FilterReport:
    dropped_post_origination: list[str] = field(default_factory=list)
    dropped_blank: list[str] = field(default_factory=list)
    dropped_constant: list[str] = field(default_factory=list)
    rows_before: int = 0
    rows_after: int = 0

    @property
    def rows_dropped(self) -> int:
        return self.rows_before - self.rows_after

    def to_text(self) -> str:
        lines = [
            "filter report",
            f"rows before: {self.rows_before}",
            f"rows after:  {self.rows_after}",
            f"rows dropped (missing values): {self.rows_dropped}",
            f"post-origination columns dropped: {', '.join(self.dropped_post_origination) or '(none)'}",
            f"blank columns dropped: {', '.join(self.dropped_blank) or '(none)'}",
            f"constant columns dropped: {', '.join(self.dropped_constant) or '(none)'}",
        ]
        return "\n".join(lines) + "\n"


@dataclass
class Dataset:
    """Fully numeric feature matrix with one response vector.

    For bidding tables the funded/non-funded flags ride along in
    ``labels`` so both the rate-regression and the success-classification
    task can be derived from one object.
    """

    feature_names: list[str]
    X: np.ndarray
    y: np.ndarray
    dataset_kind: str
    task: str = "regression"  # regression | classification
    response_name: str = "BorrowerRate"
    labels: np.ndarray | None = None

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=float)
        self.y = np.asarray(self.y, dtype=float)
        if self.X.ndim != 2:
            raise ValueError("X must be a 2-d matrix")
        if self.X.shape[0] != self.y.shape[0]:
            raise ValueError("X and y row counts differ")
        if self.X.shape[1] != len(self.feature_names):
            raise ValueError("feature_names do not match X columns")
        if np.isnan(self.X).any() or np.isnan(self.y).any():
            raise ValueError("dataset contains missing entries")
        if self.labels is not None:
            self.labels = np.asarray(self.labels, dtype=float)
            if self.labels.shape[0] != self.X.shape[0]:
                raise ValueError("labels length mismatch")

    @property
    def n_rows(self) -> int:
        return self.X.shape[0]

    @property
    def n_features(self) -> int:
        return self.X.shape[1]

    def subset_rows(self, idx) -> "Dataset":
        idx = np.asarray(idx)
        return replace(
            self,
            X=self.X[idx],
            y=self.y[idx],
            labels=None if self.labels is None else self.labels[idx],
        )

    def restrict(self, features: list[str]) -> "Dataset":
        missing = [f for f in features if f not in self.feature_names]
        if missing:
            raise ValueError(f"unknown features: {missing}")
        cols = [self.feature_names.index(f) for f in features]
        return replace(self, feature_names=list(features), X=self.X[:, cols])

    def column(self, name: str) -> np.ndarray:
        return self.X[:, self.feature_names.index(name)]

    def success_view(self) -> "Dataset":
        """Classification view of a bidding table: funded flag as response."""
        if self.labels is None:
            raise ValueError("dataset has no funded/non-funded labels")
        return replace(
            self, y=self.labels, labels=None,
            task="classification", response_name="LoanStatus",
        )


@dataclass
class SplitPlan:
    ratio: float = 0.8
    runs: int = 5
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.ratio < 1.0:
            raise ValueError("split ratio must lie in (0, 1)")
        if self.runs < 1:
            raise ValueError("runs must be positive")


def load_post_origination(path=None) -> frozenset[str]:
    """Read the post-origination column blacklist (one name per line)."""
    if path is None:
        from importlib import resources

        text = resources.files("p2padvisor.data").joinpath("post_origination.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    names = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            names.add(line)
    return frozenset(names)


def default_filter_policy() -> FilterPolicy:
    return FilterPolicy(post_origination_feature_names=load_post_origination())


def derive_seed(seed: int, salt: int) -> int:
    """Stable derived seed for independent sub-streams."""
    return int(np.random.SeedSequence([seed, salt]).generate_state(1)[0])


def _parse_value(raw: str, kind: str, column: str):
    raw = raw.strip()
    if raw in MISSING_MARKERS:
        return None
    if kind == "numerical":
        try:
            return float(raw)
        except ValueError:
            raise IngestError(f"non-numeric value {raw!r} in numerical column {column!r}") from None
    return raw


def _sniff_kind(values: list[str]) -> str:
    for v in values:
        v = v.strip()
        if v in MISSING_MARKERS:
            continue
        try:
            float(v)
            return "numerical"
        except ValueError:
            return "categorical"
    return "categorical"


def load_table(path, dataset_kind: str, column_kinds: dict[str, str]) -> RawTable:
    """Parse a CSV export into a RawTable.

    ``column_kinds`` maps the schema's column names to their kind; columns
    not in the map are accepted but flagged as unknown (their kind is
    sniffed from the data).
    """
    if dataset_kind not in DATASET_KINDS:
        raise IngestError(f"unknown dataset kind {dataset_kind!r}")
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise IngestError(f"{path}: empty file, no header row") from None
            raw_rows = list(reader)
    except OSError as exc:
        raise IngestError(f"cannot read {path}: {exc}") from None

    header = [h.strip() for h in header]
    for required in REQUIRED_RESPONSES[dataset_kind]:
        if required not in header:
            raise IngestError(f"{path}: header is missing response column {required!r}")

    unknown = [name for name in header if name not in column_kinds]
    columns = []
    for j, name in enumerate(header):
        if name in column_kinds:
            kind = column_kinds[name]
        else:
            kind = _sniff_kind([r[j] for r in raw_rows if j < len(r)])
        columns.append(Column(name, kind))

    rows = []
    for r in raw_rows:
        if len(r) != len(header):
            raise IngestError(f"{path}: row with {len(r)} fields, expected {len(header)}")
        rows.append([_parse_value(v, c.kind, c.name) for v, c in zip(r, columns)])
    return RawTable(columns=columns, rows=rows, dataset_kind=dataset_kind, unknown_columns=unknown)


def _drop_columns(table: RawTable, names: set[str]) -> RawTable:
    keep = [j for j, c in enumerate(table.columns) if c.name not in names]
    return RawTable(
        columns=[table.columns[j] for j in keep],
        rows=[[row[j] for j in keep] for row in table.rows],
        dataset_kind=table.dataset_kind,
        unknown_columns=[n for n in table.unknown_columns if n not in names],
    )


def filter_table(table: RawTable, policy: FilterPolicy) -> RawTable:
    """Apply the cleaning rules; the returned table carries a FilterReport.

    Order matters for idempotence: blacklist, then entirely-blank columns,
    then rows with missing values, then near-constant columns. Applying
    the filter twice equals applying it once.
    """
    report = FilterReport(rows_before=table.n_rows)

    blacklisted = set(policy.post_origination_feature_names) & set(table.column_names)
    report.dropped_post_origination = sorted(blacklisted)
    out = _drop_columns(table, blacklisted)

    if policy.drop_constant_or_blank_columns:
        blank = {
            c.name for c in out.columns
            if all(v is None for v in out.column_values(c.name))
        }
        report.dropped_blank = sorted(blank)
        out = _drop_columns(out, blank)

    if policy.drop_rows_with_missing:
        out = RawTable(
            columns=out.columns,
            rows=[row for row in out.rows if all(v is not None for v in row)],
            dataset_kind=out.dataset_kind,
            unknown_columns=out.unknown_columns,
        )

    if policy.drop_constant_or_blank_columns:
        constant = set()
        for c in out.columns:
            values = [v for v in out.column_values(c.name) if v is not None]
            if not values:
                constant.add(c.name)
                continue
            top = max(values.count(v) for v in set(values))
            if top / len(values) >= policy.constant_share:
                constant.add(c.name)
        report.dropped_constant = sorted(constant)
        out = _drop_columns(out, constant)

    report.rows_after = out.n_rows
    out.filter_report = report
    return out


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def split_montecarlo(d: Dataset, plan: SplitPlan) -> list[tuple[Dataset, Dataset]]:
    """Repeated random train/test splits, reproducible from the plan seed.

    Classification datasets are split class-stratified so balanced samples
    stay balanced across runs. Train and test index sets are disjoint and
    cover all rows.
    """
    if d.n_rows < 5:
        raise ValueError(f"dataset too small to split ({d.n_rows} rows)")
    pairs = []
    for run in range(plan.runs):
        rng = np.random.default_rng([plan.seed, run])
        if d.task == "classification":
            train_idx = []
            for cls in np.unique(d.y):
                cls_idx = np.flatnonzero(d.y == cls)
                perm = rng.permutation(cls_idx)
                train_idx.append(perm[: _round_half_up(plan.ratio * len(cls_idx))])
            train_idx = np.sort(np.concatenate(train_idx))
        else:
            perm = rng.permutation(d.n_rows)
            train_idx = np.sort(perm[: _round_half_up(plan.ratio * d.n_rows)])
        mask = np.zeros(d.n_rows, dtype=bool)
        mask[train_idx] = True
        test_idx = np.flatnonzero(~mask)
        pairs.append((d.subset_rows(train_idx), d.subset_rows(test_idx)))
    return pairs


def write_table_csv(table: RawTable, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(table.column_names)
        for row in table.rows:
            writer.writerow(["" if v is None else v for v in row])


def write_dataset_csv(d: Dataset, path) -> None:
    """Re-emit an encoded dataset as CSV (features, then response columns)."""
    header = list(d.feature_names) + [d.response_name]
    if d.labels is not None:
        header.append("LoanStatus")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for i in range(d.n_rows):
            row = [repr(float(v)) for v in d.X[i]] + [repr(float(d.y[i]))]
            if d.labels is not None:
                row.append(repr(float(d.labels[i])))
            writer.writerow(row)


def read_dataset_csv(path, dataset_kind: str) -> Dataset:
    """Read back a dataset written by write_dataset_csv."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[float(v) for v in r] for r in reader]
    matrix = np.asarray(rows, dtype=float) if rows else np.zeros((0, len(header)))
    has_labels = header and header[-1] == "LoanStatus" and dataset_kind == "bidding"
    n_resp = 2 if has_labels else 1
    features = header[:-n_resp]
    return Dataset(
        feature_names=features,
        X=matrix[:, : len(features)],
        y=matrix[:, len(features)],
        dataset_kind=dataset_kind,
        labels=matrix[:, len(features) + 1] if has_labels else None,
    )
