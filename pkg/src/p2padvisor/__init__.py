"""Borrower-side advisor for peer-to-peer lending.

Predicts the interest rate a borrower would pay on a platform-priced
("traditional") loan and on an auction ("bidding") loan, predicts the
bidding loan's funding chance, suggests the description sentiment that
maximizes that chance, and recommends whichever loan type lies closer
to the ideal of zero interest and certain funding.
"""

__version__ = "0.1.0"

from .encoding import load_lexicon, load_schema, sentiment_score
from .ingest import Dataset, SplitPlan, derive_seed
from .models import ModelSpec, fit, predict
from .recommend import BorrowerRecord, Recommendation, decide, estimate_tuples
from .workflows import load_bundle, save_bundle, train_bundle

__all__ = [
    "BorrowerRecord",
    "Dataset",
    "ModelSpec",
    "Recommendation",
    "SplitPlan",
    "decide",
    "derive_seed",
    "estimate_tuples",
    "fit",
    "load_bundle",
    "load_lexicon",
    "load_schema",
    "predict",
    "save_bundle",
    "sentiment_score",
    "train_bundle",
]
