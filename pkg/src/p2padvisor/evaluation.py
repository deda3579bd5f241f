"""Metrics, Monte-Carlo cross-validation and grade-level rate analysis.

The Welch t-test p-value comes from a self-contained Student-t CDF
built on the regularized incomplete beta function (continued-fraction
evaluation), so no statistics package is required at runtime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .ingest import Dataset, SplitPlan

SIGNIFICANCE = 0.05
GRADE_LABELS = ("AA", "A", "B", "C", "D", "E", "HR")


class EvaluationError(ValueError):
    """Raised for metric preconditions that do not hold."""


def r_squared(y, yhat) -> float:
    """Conventional coefficient of determination, 1 - RSS/TSS."""
    y = np.asarray(y, dtype=float)
    yhat = np.asarray(yhat, dtype=float)
    if y.shape != yhat.shape or y.size < 2:
        raise EvaluationError("r_squared needs two equal-length vectors of size >= 2")
    tss = float(np.sum((y - y.mean()) ** 2))
    if tss == 0.0:
        raise EvaluationError("r_squared undefined for a constant response")
    rss = float(np.sum((y - yhat) ** 2))
    return 1.0 - rss / tss


def accuracy(labels, predicted) -> float:
    labels = np.asarray(labels, dtype=float)
    predicted = np.asarray(predicted, dtype=float)
    if labels.shape != predicted.shape or labels.size == 0:
        raise EvaluationError("accuracy needs two equal-length nonempty vectors")
    return float(np.mean(labels == predicted))


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    @property
    def tpr(self) -> float:
        return self.tp / (self.tp + self.fn)

    @property
    def tnr(self) -> float:
        return self.tn / (self.tn + self.fp)

    @property
    def accuracy(self) -> float:
        return (self.tp + self.tn) / self.total


def confusion(labels, predicted) -> ConfusionMatrix:
    labels = np.asarray(labels, dtype=float)
    predicted = np.asarray(predicted, dtype=float)
    values = set(np.unique(np.concatenate([labels, predicted])))
    if not values <= {0.0, 1.0}:
        raise EvaluationError("confusion expects binary 0/1 vectors")
    return ConfusionMatrix(
        tp=int(np.sum((labels == 1) & (predicted == 1))),
        fp=int(np.sum((labels == 0) & (predicted == 1))),
        fn=int(np.sum((labels == 1) & (predicted == 0))),
        tn=int(np.sum((labels == 0) & (predicted == 0))),
    )


# ---------------------------------------------------------------- t-test

_BETA_MAX_ITER = 300
_BETA_EPS = 3e-14
_BETA_FPMIN = 1e-300


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _BETA_FPMIN:
        d = _BETA_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        c = 1.0 + aa / c
        d = _BETA_FPMIN if abs(d) < _BETA_FPMIN else d
        c = _BETA_FPMIN if abs(c) < _BETA_FPMIN else c
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        c = 1.0 + aa / c
        d = _BETA_FPMIN if abs(d) < _BETA_FPMIN else d
        c = _BETA_FPMIN if abs(c) < _BETA_FPMIN else c
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    raise EvaluationError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) via the continued fraction on whichever tail converges fast."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def student_t_sf2(t: float, df: float) -> float:
    """Two-sided tail probability P(|T| >= |t|) for Student's t."""
    if df <= 0.0:
        raise EvaluationError("degrees of freedom must be positive")
    if t == 0.0:
        return 1.0
    x = df / (df + t * t)
    return regularized_incomplete_beta(0.5 * df, 0.5, x)


def welch_ttest(a, b) -> tuple[float, float]:
    """Two-sided Welch unequal-variance t-test; returns (t, p)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size < 2 or b.size < 2:
        raise EvaluationError("welch_ttest needs at least two values per sample")
    va = float(a.var(ddof=1))
    vb = float(b.var(ddof=1))
    if va == 0.0 and vb == 0.0:
        raise EvaluationError("welch_ttest degenerate: both samples have zero variance")
    sa, sb = va / a.size, vb / b.size
    t = (float(a.mean()) - float(b.mean())) / math.sqrt(sa + sb)
    df = (sa + sb) ** 2 / (sa**2 / (a.size - 1) + sb**2 / (b.size - 1))
    return t, student_t_sf2(t, df)


# ------------------------------------------------------ cross-validation


@dataclass(frozen=True)
class CVReport:
    runs: list[float]
    spec: object
    features: list[str]
    metric: str

    @property
    def mean(self) -> float:
        return float(np.mean(self.runs))

    def to_csv_text(self) -> str:
        header = ",".join(f"run{i + 1}" for i in range(len(self.runs))) + ",mean\n"
        row = ",".join(repr(v) for v in self.runs) + f",{self.mean!r}\n"
        return header + row


def montecarlo_cv(spec, d: Dataset, plan: SplitPlan, features=None) -> CVReport:
    """Fit/score over the plan's random splits; R² or accuracy per task."""
    from .ingest import split_montecarlo
    from .models import fit

    if features is not None:
        d = d.restrict(list(features))
    scores = []
    for train, test in split_montecarlo(d, plan):
        m = fit(spec, train)
        if spec.task == "classification":
            scores.append(accuracy(test.y, m.predict_labels(test.X)))
        else:
            scores.append(r_squared(test.y, m.predict(test.X)))
    return CVReport(
        runs=scores, spec=spec, features=list(d.feature_names),
        metric="accuracy" if spec.task == "classification" else "r_squared",
    )


# ------------------------------------------------------- grade analysis


@dataclass(frozen=True)
class GradeEntry:
    grade: str
    n_traditional: int
    n_bidding: int
    mean_traditional: float | None
    mean_bidding: float | None
    difference: float | None
    t: float | None
    p: float | None
    reject: bool | None
    computed: bool


@dataclass(frozen=True)
class GradeReport:
    entries: list[GradeEntry] = field(default_factory=list)

    def entry(self, grade: str) -> GradeEntry:
        for e in self.entries:
            if e.grade == grade:
                return e
        raise KeyError(grade)

    def to_csv_text(self) -> str:
        lines = ["grade,n_traditional,n_bidding,mean_traditional,mean_bidding,"
                 "difference,t,p,reject"]
        for e in self.entries:
            if not e.computed:
                lines.append(f"{e.grade},{e.n_traditional},{e.n_bidding},,,,,,")
                continue
            lines.append(
                f"{e.grade},{e.n_traditional},{e.n_bidding},{e.mean_traditional!r},"
                f"{e.mean_bidding!r},{e.difference!r},{e.t!r},{e.p!r},{e.reject}"
            )
        return "\n".join(lines) + "\n"


def analyze_grades(traditional: Dataset, bidding: Dataset, grade_column: str = "ProsperGrade") -> GradeReport:
    """Per-grade rate means and Welch tests, traditional minus bidding."""
    for d in (traditional, bidding):
        if grade_column not in d.feature_names:
            raise EvaluationError(f"{d.dataset_kind} dataset lacks {grade_column}")
    entries = []
    for code, label in enumerate(GRADE_LABELS, start=1):
        rates_t = traditional.y[traditional.column(grade_column) == code]
        rates_b = bidding.y[bidding.column(grade_column) == code]
        nt, nb = rates_t.size, rates_b.size
        if nt < 2 or nb < 2:
            entries.append(GradeEntry(label, nt, nb, None, None, None,
                                      None, None, None, computed=False))
            continue
        mt, mb = float(rates_t.mean()), float(rates_b.mean())
        try:
            t, p = welch_ttest(rates_t, rates_b)
        except EvaluationError:
            # zero variance on both sides: equal means cannot reject
            if mt == mb:
                t, p = 0.0, 1.0
            else:
                t, p = math.copysign(math.inf, mt - mb), 0.0
        entries.append(GradeEntry(
            label, nt, nb, mt, mb, mt - mb, t, p,
            reject=p < SIGNIFICANCE, computed=True,
        ))
    return GradeReport(entries=entries)
