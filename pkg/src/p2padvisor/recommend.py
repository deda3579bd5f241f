"""Loan-type recommendation: the minimum-distance rule over predicted
(interest, success) tuples.

Both loan types map to a point in the unit square; the borrower is sent
to whichever lies closer to the ideal corner (0% interest, 100% funding
chance). Exact ties go to the traditional loan: platform-priced loans
fund with a known probability and involve no auction mechanics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .encoding import SENTIMENT_FEATURE, EncodingSchema, SentimentLexicon, encode_record

S_TRAD = 0.81
IDEAL = (0.0, 1.0)


class MissingFeatureError(ValueError):
    """A borrower record lacks a feature some model needs."""

    def __init__(self, feature: str):
        super().__init__(f"missing required feature: {feature}")
        self.feature = feature


def distance_to_ideal(interest: float, success: float) -> float:
    return math.sqrt(interest**2 + (1.0 - success) ** 2)


@dataclass(frozen=True)
class LoanTypeEstimate:
    loan_type: str  # traditional | bidding
    interest: float
    success: float
    distance: float = field(init=False)

    def __post_init__(self):
        if not 0.0 <= self.interest <= 1.0:
            raise ValueError("interest must lie in [0, 1]")
        if not 0.0 <= self.success <= 1.0:
            raise ValueError("success must lie in [0, 1]")
        object.__setattr__(self, "distance", distance_to_ideal(self.interest, self.success))


@dataclass(frozen=True)
class SentimentAdvice:
    optimal_sentiment: float
    predicted_success: float


@dataclass(frozen=True)
class Recommendation:
    borrower_id: str
    traditional: LoanTypeEstimate
    bidding: LoanTypeEstimate
    chosen: str
    tie_broken: bool
    sentiment_advice: SentimentAdvice | None = None

    def to_text(self) -> str:
        lines = [
            f"borrower: {self.borrower_id or '(unnamed)'}",
            f"traditional: interest {self.traditional.interest:.4f}, "
            f"success {self.traditional.success:.4f}, distance {self.traditional.distance:.4f}",
            f"bidding:     interest {self.bidding.interest:.4f}, "
            f"success {self.bidding.success:.4f}, distance {self.bidding.distance:.4f}",
            f"chosen: {self.chosen}" + (" (tie)" if self.tie_broken else ""),
        ]
        if self.sentiment_advice is not None:
            lines.append(
                f"sentiment advice: aim for {self.sentiment_advice.optimal_sentiment:+.2f} "
                f"(predicted funding chance {self.sentiment_advice.predicted_success:.4f})"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BorrowerRecord:
    """Raw borrower input: feature map plus optional description text.

    Historical fields are only used by portfolio evaluation.
    """

    features: dict
    borrower_id: str = ""
    description: str | None = None
    historical_type: str | None = None
    historical_rate: float | None = None
    historical_funded: bool | None = None


@dataclass(frozen=True)
class ModelTrio:
    """The three predictors plus the schemas their inputs come from."""

    traditional_rate: object
    bidding_rate: object
    bidding_success: object
    traditional_schema: EncodingSchema
    bidding_schema: EncodingSchema


def _vector(encoded: dict, feature_names) -> np.ndarray:
    values = []
    for name in feature_names:
        if name not in encoded:
            raise MissingFeatureError(name)
        values.append(encoded[name])
    return np.asarray(values, dtype=float)


def _clamp01(x: float) -> float:
    return min(1.0, max(0.0, float(x)))


def encode_borrower(b: BorrowerRecord, schema: EncodingSchema, lex: SentimentLexicon) -> dict:
    values = dict(b.features)
    if b.description is not None:
        values["Description"] = b.description
    return encode_record(values, schema, lex)


def estimate_tuples(
    b: BorrowerRecord, models: ModelTrio, lex: SentimentLexicon,
    sentiment_override: float | None = None,
) -> tuple[LoanTypeEstimate, LoanTypeEstimate]:
    """(traditional, bidding) estimates for one borrower.

    Rate predictions are clamped to [0, 1] before the distance rule;
    regressors may extrapolate outside the unit interval.
    """
    enc_t = encode_borrower(b, models.traditional_schema, lex)
    enc_b = encode_borrower(b, models.bidding_schema, lex)
    if sentiment_override is not None:
        enc_t[SENTIMENT_FEATURE] = float(sentiment_override)
        enc_b[SENTIMENT_FEATURE] = float(sentiment_override)

    i_trad = _clamp01(models.traditional_rate.predict(
        _vector(enc_t, models.traditional_rate.feature_names))[0])
    i_bid = _clamp01(models.bidding_rate.predict(
        _vector(enc_b, models.bidding_rate.feature_names))[0])
    s_bid = _clamp01(models.bidding_success.predict(
        _vector(enc_b, models.bidding_success.feature_names))[0])

    return (
        LoanTypeEstimate("traditional", i_trad, S_TRAD),
        LoanTypeEstimate("bidding", i_bid, s_bid),
    )


def decide(
    trad: LoanTypeEstimate, bid: LoanTypeEstimate,
    borrower_id: str = "", sentiment_advice: SentimentAdvice | None = None,
) -> Recommendation:
    """Pick the tuple closer to the ideal corner; ties go traditional."""
    tie = trad.distance == bid.distance
    chosen = "bidding" if bid.distance < trad.distance else "traditional"
    return Recommendation(
        borrower_id=borrower_id,
        traditional=trad,
        bidding=bid,
        chosen=chosen,
        tie_broken=tie,
        sentiment_advice=sentiment_advice,
    )


@dataclass(frozen=True)
class PortfolioSummary:
    n_loans: int
    recommended_traditional: int
    recommended_bidding: int
    expected_funded: float
    mean_predicted_rate_funded: float | None
    historical_funded: int | None
    historical_mean_rate_funded: float | None

    def to_text(self) -> str:
        lines = [
            f"loans evaluated: {self.n_loans}",
            f"recommended traditional: {self.recommended_traditional}",
            f"recommended bidding: {self.recommended_bidding}",
            f"expected funded: {self.expected_funded:.2f}",
        ]
        if self.mean_predicted_rate_funded is not None:
            lines.append(f"mean predicted rate (funded): {self.mean_predicted_rate_funded:.4f}")
        if self.historical_funded is not None:
            lines.append(f"historical funded: {self.historical_funded}")
        if self.historical_mean_rate_funded is not None:
            lines.append(f"historical mean rate (funded): {self.historical_mean_rate_funded:.4f}")
        return "\n".join(lines) + "\n"


def portfolio_eval(
    loans: list[BorrowerRecord], models: ModelTrio, lex: SentimentLexicon,
    g_star: float,
) -> PortfolioSummary:
    """Recommend every loan with sentiment set to g*, then summarize.

    Traditional recommendations count toward funding as the expected
    0.81·n rather than sampled outcomes, keeping reports deterministic.
    """
    n_trad = n_bid = 0
    funded_bid = 0.0
    rate_mass = 0.0
    funded_mass = 0.0
    hist_funded = 0
    hist_rates = []
    has_history = False
    for b in loans:
        trad, bid = estimate_tuples(b, models, lex, sentiment_override=g_star)
        rec = decide(trad, bid, borrower_id=b.borrower_id)
        if rec.chosen == "traditional":
            n_trad += 1
            funded_mass += S_TRAD
            rate_mass += S_TRAD * trad.interest
        else:
            n_bid += 1
            if bid.success >= 0.5:
                funded_bid += 1.0
                funded_mass += 1.0
                rate_mass += bid.interest
        if b.historical_funded is not None:
            has_history = True
            if b.historical_funded:
                hist_funded += 1
                if b.historical_rate is not None:
                    hist_rates.append(b.historical_rate)
    expected_funded = S_TRAD * n_trad + funded_bid
    return PortfolioSummary(
        n_loans=len(loans),
        recommended_traditional=n_trad,
        recommended_bidding=n_bid,
        expected_funded=expected_funded,
        mean_predicted_rate_funded=(rate_mass / funded_mass) if funded_mass > 0 else None,
        historical_funded=hist_funded if has_history else None,
        historical_mean_rate_funded=(
            float(np.mean(hist_rates)) if hist_rates else None
        ),
    )
