"""Numeric encoding of categorical and textual loan features.

Three rule families: binary (two-class indicator, one column kept),
ordinal (1-based class index) and sentiment (lexicon-scored description
text). Rules are declared in a plain-text schema file shipped with the
package and are resolved against concrete data before use.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace
from importlib import resources

import numpy as np

from .ingest import Dataset, RawTable

GRADE_ORDER = ["AA", "A", "B", "C", "D", "E", "HR"]
SENTIMENT_FEATURE = "SentimentScore"

# Compound normalization constant: score = s / sqrt(s^2 + ALPHA).
ALPHA = 15.0
NEGATION_FACTOR = -0.74
NEGATION_WINDOW = 3

NEGATION_TOKENS = frozenset("""
    aint arent cannot cant couldnt darent didnt doesnt dont hasnt havent
    isnt mightnt mustnt neither never no nobody none nope nor not nothing
    nowhere oughtnt shant shouldnt wasnt werent wont wouldnt without
""".split())

_INC = 0.293
BOOSTER_TOKENS = {
    "absolutely": _INC, "amazingly": _INC, "completely": _INC,
    "considerably": _INC, "decidedly": _INC, "deeply": _INC,
    "enormously": _INC, "entirely": _INC, "especially": _INC,
    "exceptionally": _INC, "extremely": _INC, "fully": _INC,
    "greatly": _INC, "highly": _INC, "hugely": _INC, "incredibly": _INC,
    "intensely": _INC, "majorly": _INC, "more": _INC, "most": _INC,
    "particularly": _INC, "purely": _INC, "quite": _INC, "really": _INC,
    "remarkably": _INC, "so": _INC, "substantially": _INC,
    "thoroughly": _INC, "totally": _INC, "tremendously": _INC,
    "unbelievably": _INC, "unusually": _INC, "utterly": _INC,
    "very": _INC,
    "almost": -_INC, "barely": -_INC, "hardly": -_INC, "kinda": -_INC,
    "kindof": -_INC, "less": -_INC, "little": -_INC, "marginally": -_INC,
    "occasionally": -_INC, "partly": -_INC, "scarcely": -_INC,
    "slightly": -_INC, "somewhat": -_INC, "sortof": -_INC,
}

_TOKEN_RE = re.compile(r"[a-z0-9]+")


class EncodingError(ValueError):
    """Raised when a value cannot be encoded under the active schema."""


@dataclass(frozen=True)
class SentimentLexicon:
    entries: dict[str, float]
    negations: frozenset[str] = NEGATION_TOKENS
    boosters: dict[str, float] = field(default_factory=lambda: dict(BOOSTER_TOKENS))

    def __post_init__(self):
        if not self.entries:
            raise ValueError("lexicon is empty")
        for token, valence in self.entries.items():
            if not math.isfinite(valence):
                raise ValueError(f"non-finite valence for {token!r}")


def load_lexicon(path=None) -> SentimentLexicon:
    """Load a token<TAB>valence lexicon file; '#' starts a comment line."""
    if path is None:
        text = resources.files("p2padvisor.data").joinpath("lexicon.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    entries = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        token, valence = line.split("\t")[:2]
        entries[token.lower()] = float(valence)
    return SentimentLexicon(entries=entries)


def tokenize(text: str) -> list[str]:
    # Apostrophes are dropped so "don't" matches the negation token "dont".
    return _TOKEN_RE.findall(text.lower().replace("'", ""))


def sentiment_score(text: str, lex: SentimentLexicon) -> float:
    """Compound sentiment of ``text``, in [-1, 1].

    Token valences are summed; a booster within the three preceding
    tokens shifts the valence towards its own sign, a negation token in
    the same window flips it by the damping factor -0.74. The sum is
    squashed through s / sqrt(s^2 + alpha).
    """
    tokens = tokenize(text)
    total = 0.0
    for i, token in enumerate(tokens):
        valence = lex.entries.get(token)
        if valence is None:
            continue
        window = tokens[max(0, i - NEGATION_WINDOW): i]
        for prior in window:
            boost = lex.boosters.get(prior)
            if boost is not None:
                valence += boost if valence > 0 else -boost
        if any(prior in lex.negations for prior in window):
            valence *= NEGATION_FACTOR
        total += valence
    return compound(total)


def compound(s: float) -> float:
    score = s / math.sqrt(s * s + ALPHA)
    return max(-1.0, min(1.0, score))


def encode_binary(values, class0: str, class1: str, column: str = "?") -> np.ndarray:
    out = np.empty(len(values), dtype=float)
    for i, v in enumerate(values):
        if v == class0:
            out[i] = 0.0
        elif v == class1:
            out[i] = 1.0
        else:
            raise EncodingError(f"unseen class {v!r} in binary column {column!r}")
    return out


def encode_ordinal(values, ordered_classes: list[str], column: str = "?") -> np.ndarray:
    if len(set(ordered_classes)) != len(ordered_classes):
        raise EncodingError(f"duplicate classes in ordinal rule for {column!r}")
    index = {c: i + 1.0 for i, c in enumerate(ordered_classes)}
    out = np.empty(len(values), dtype=float)
    for i, v in enumerate(values):
        try:
            out[i] = index[v]
        except KeyError:
            raise EncodingError(f"unseen class {v!r} in ordinal column {column!r}") from None
    return out


def decode_ordinal(code: float, ordered_classes: list[str]) -> str:
    return ordered_classes[int(code) - 1]


@dataclass(frozen=True)
class Rule:
    """One encoding rule. kind is one of: numeric, binary, ordinal,
    ordinal-lex, sentiment, length, response-rate, response-status."""

    kind: str
    classes: tuple[str, ...] = ()       # binary: (class0, class1); ordinal: order
    source: str | None = None           # length: source text column

    def column_kind(self) -> str:
        if self.kind in ("numeric", "response-rate"):
            return "numerical"
        if self.kind == "sentiment":
            return "text"
        return "categorical"


@dataclass(frozen=True)
class EncodingSchema:
    dataset_kind: str
    rules: dict[str, Rule]

    def column_kinds(self) -> dict[str, str]:
        """Input column -> kind map for load_table (derived columns excluded)."""
        return {
            name: rule.column_kind()
            for name, rule in self.rules.items()
            if rule.kind != "length"
        }

    def response_columns(self) -> list[str]:
        return [n for n, r in self.rules.items() if r.kind.startswith("response")]

    def resolve(self, table: RawTable) -> "EncodingSchema":
        """Fix ordinal-lex class lists from the data so the schema becomes
        self-contained (needed to encode single borrowers later)."""
        resolved = {}
        present = set(table.column_names)
        for name, rule in self.rules.items():
            if rule.kind == "ordinal-lex" and name in present:
                classes = sorted({v for v in table.column_values(name) if v is not None})
                resolved[name] = Rule(kind="ordinal", classes=tuple(classes))
            else:
                resolved[name] = rule
        return replace(self, rules=resolved)


def parse_schema(text: str, dataset_kind: str) -> EncodingSchema:
    rules = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, _, spec = line.partition("=")
        name, spec = name.strip(), spec.strip()
        kind, _, arg = spec.partition(":")
        if kind == "binary":
            class0, _, class1 = arg.partition("|")
            rules[name] = Rule(kind="binary", classes=(class0, class1))
        elif kind == "ordinal":
            rules[name] = Rule(kind="ordinal", classes=tuple(a.strip() for a in arg.split(",")))
        elif kind == "length":
            rules[name] = Rule(kind="length", source=arg)
        elif kind in ("numeric", "ordinal-lex", "sentiment", "response-rate", "response-status"):
            rules[name] = Rule(kind=kind)
        else:
            raise EncodingError(f"unknown rule {spec!r} for column {name!r}")
    return EncodingSchema(dataset_kind=dataset_kind, rules=rules)


def schema_to_text(schema: EncodingSchema) -> str:
    lines = []
    for name, rule in schema.rules.items():
        if rule.kind == "binary":
            lines.append(f"{name} = binary:{rule.classes[0]}|{rule.classes[1]}")
        elif rule.kind == "ordinal":
            lines.append(f"{name} = ordinal:{','.join(rule.classes)}")
        elif rule.kind == "length":
            lines.append(f"{name} = length:{rule.source}")
        else:
            lines.append(f"{name} = {rule.kind}")
    return "\n".join(lines) + "\n"


def load_schema(dataset_kind: str, path=None) -> EncodingSchema:
    if path is None:
        name = f"{dataset_kind}_schema.txt"
        text = resources.files("p2padvisor.data").joinpath(name).read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_schema(text, dataset_kind)


def load_status_map(path=None) -> dict[str, float]:
    """LoanStatus string -> funded flag fixture."""
    if path is None:
        text = resources.files("p2padvisor.data").joinpath("status_map.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        status, _, flag = line.partition("=")
        out[status.strip()] = float(flag)
    return out


def encode_value(value, rule: Rule, lex: SentimentLexicon, column: str = "?") -> float:
    """Encode one raw value. Numeric inputs pass through unchanged, which
    lets already-encoded rows re-enter the pipeline."""
    if isinstance(value, (int, float)) and rule.kind != "length":
        return float(value)
    if rule.kind in ("numeric", "response-rate"):
        try:
            return float(value)
        except (TypeError, ValueError):
            raise EncodingError(f"column {column!r} expects a number, got {value!r}") from None
    if rule.kind == "binary":
        return float(encode_binary([value], *rule.classes, column=column)[0])
    if rule.kind == "ordinal":
        return float(encode_ordinal([value], list(rule.classes), column=column)[0])
    if rule.kind == "sentiment":
        return sentiment_score(value, lex)
    if rule.kind == "length":
        return float(len(value)) if isinstance(value, str) else float(value)
    if rule.kind == "ordinal-lex":
        raise EncodingError(f"ordinal-lex rule for {column!r} must be resolved before encoding")
    raise EncodingError(f"cannot encode column {column!r} with rule {rule.kind!r}")


def encode_dataset(
    table: RawTable,
    schema: EncodingSchema,
    lex: SentimentLexicon,
    status_map: dict[str, float] | None = None,
) -> Dataset:
    """Encode a filtered raw table into a numeric Dataset.

    Column order is preserved; the Description column becomes the
    SentimentScore feature in place. Derived length columns are appended
    after the original features. Response columns never enter X.
    """
    schema = schema.resolve(table)
    if status_map is None and schema.dataset_kind == "bidding":
        status_map = load_status_map()

    feature_names, feature_cols = [], []
    y = labels = None
    uncovered = [
        c.name for c in table.columns
        if c.kind != "numerical" and c.name not in schema.rules
    ]
    if uncovered:
        raise EncodingError(f"schema does not cover non-numeric columns: {uncovered}")

    for col in table.columns:
        rule = schema.rules.get(col.name, Rule(kind="numeric"))
        values = table.column_values(col.name)
        if rule.kind == "response-rate":
            y = np.asarray([float(v) for v in values], dtype=float)
            if y.size and (y.min() < 0.0 or y.max() > 1.0):
                raise EncodingError("rate response outside [0, 1]")
            continue
        if rule.kind == "response-status":
            labels = np.empty(len(values), dtype=float)
            for i, v in enumerate(values):
                if v not in status_map:
                    raise EncodingError(f"unknown LoanStatus {v!r}")
                labels[i] = status_map[v]
            continue
        if rule.kind == "length":
            continue  # derived, appended below
        name = SENTIMENT_FEATURE if rule.kind == "sentiment" else col.name
        feature_names.append(name)
        feature_cols.append(
            np.asarray([encode_value(v, rule, lex, column=col.name) for v in values], dtype=float)
        )

    for name, rule in schema.rules.items():
        if rule.kind != "length" or rule.source not in table.column_names:
            continue
        values = table.column_values(rule.source)
        feature_names.append(name)
        feature_cols.append(
            np.asarray([encode_value(v, rule, lex, column=name) for v in values], dtype=float)
        )

    if y is None:
        raise EncodingError("table has no rate response column")
    n = table.n_rows
    X = np.column_stack(feature_cols) if feature_cols else np.zeros((n, 0))
    return Dataset(
        feature_names=feature_names,
        X=X,
        y=y,
        dataset_kind=schema.dataset_kind,
        labels=labels,
    )


def encode_record(
    values: dict,
    schema: EncodingSchema,
    lex: SentimentLexicon,
) -> dict[str, float]:
    """Encode one borrower's raw feature map into named numeric features."""
    out = {}
    for name, rule in schema.rules.items():
        if rule.kind.startswith("response"):
            continue
        if rule.kind == "length":
            if rule.source in values:
                out[name] = encode_value(values[rule.source], rule, lex, column=name)
            elif name in values and isinstance(values[name], (int, float)):
                out[name] = float(values[name])  # pre-computed length accepted
            continue
        if name not in values:
            continue
        target = SENTIMENT_FEATURE if rule.kind == "sentiment" else name
        out[target] = encode_value(values[name], rule, lex, column=name)
    for name, value in values.items():
        if name not in schema.rules and isinstance(value, (int, float)):
            out.setdefault(name, float(value))
    return out
