"""FastAPI application over a trained bundle.

Handlers add no model logic: every number in a response comes from the
recommend module called with the request's inputs. Responses carry no
timestamps or generated ids, so identical requests produce identical
bodies.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..encoding import SENTIMENT_FEATURE, EncodingError, sentiment_score
from ..models.io import FORMAT_VERSION
from ..recommend import (
    BorrowerRecord,
    MissingFeatureError,
    SentimentAdvice,
    decide,
    estimate_tuples,
)
from ..workflows import ModelBundle, load_bundle
from .schemas import (
    WHATIF_FIELDS,
    AdviceOut,
    EstimateOut,
    HealthResponse,
    RecommendRequest,
    RecommendResponse,
    SchemaField,
    SchemaResponse,
    WhatifPoint,
    WhatifRequest,
    WhatifResponse,
)


def _estimate_out(est) -> EstimateOut:
    return EstimateOut(
        loan_type=est.loan_type, interest=est.interest,
        success=est.success, distance=est.distance,
    )


def _raw_field(feature: str, schema) -> tuple[str, str, list[str] | None]:
    """Encoded feature -> (form field name, input type, classes)."""
    if feature == SENTIMENT_FEATURE:
        for name, rule in schema.rules.items():
            if rule.kind == "sentiment":
                return name, "text", None
        return feature, "number", None
    rule = schema.rules.get(feature)
    if rule is None or rule.kind == "numeric":
        return feature, "number", None
    if rule.kind == "length":
        return rule.source, "text", None
    if rule.kind == "binary":
        return feature, "select", list(rule.classes)
    if rule.kind == "ordinal":
        return feature, "select", list(rule.classes)
    return feature, "number", None  # unresolved ordinal-lex: numeric codes


def _form_fields(bundle: ModelBundle) -> list[SchemaField]:
    trio = bundle.trio
    sources = (
        ("traditional_rate", trio.traditional_rate, trio.traditional_schema),
        ("bidding_rate", trio.bidding_rate, trio.bidding_schema),
        ("bidding_success", trio.bidding_success, trio.bidding_schema),
    )
    fields: dict[str, SchemaField] = {}
    for model_name, model, schema in sources:
        for feature in model.feature_names:
            name, input_type, classes = _raw_field(feature, schema)
            if name not in fields:
                domain = [0.0, 1.0] if name.endswith("Rate") or name.endswith("Ratio") else None
                fields[name] = SchemaField(
                    name=name, input=input_type, classes=classes,
                    domain=domain, used_by=[],
                )
            if model_name not in fields[name].used_by:
                fields[name].used_by.append(model_name)
    return list(fields.values())


def make_app(bundle: ModelBundle) -> FastAPI:
    app = FastAPI(title="p2padvisor", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        errors = [
            {
                "field": ".".join(str(part) for part in err["loc"] if part != "body"),
                "message": err["msg"],
            }
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"errors": errors})

    @app.exception_handler(MissingFeatureError)
    async def missing_feature(request: Request, exc: MissingFeatureError):
        return JSONResponse(
            status_code=422, content={"error": str(exc), "feature": exc.feature}
        )

    @app.exception_handler(EncodingError)
    async def bad_value(request: Request, exc: EncodingError):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    def _record(req: RecommendRequest) -> BorrowerRecord:
        features = dict(req.features)
        if req.max_rate is not None:
            features["BorrowerMaximumRate"] = req.max_rate
        return BorrowerRecord(
            features=features,
            borrower_id=req.request_id,
            description=req.description,
        )

    def _recommend(req: RecommendRequest) -> RecommendResponse:
        record = _record(req)
        trad, bid = estimate_tuples(record, bundle.trio, bundle.lexicon)
        _, bid_at_star = estimate_tuples(
            record, bundle.trio, bundle.lexicon, sentiment_override=bundle.g_star
        )
        advice = SentimentAdvice(
            optimal_sentiment=bundle.g_star, predicted_success=bid_at_star.success
        )
        rec = decide(trad, bid, borrower_id=req.request_id, sentiment_advice=advice)
        if req.description is not None:
            score = sentiment_score(req.description, bundle.lexicon)
        else:
            raw = req.features.get(SENTIMENT_FEATURE)
            score = float(raw) if isinstance(raw, (int, float)) else None
        return RecommendResponse(
            request_id=req.request_id,
            sentiment_score=score,
            traditional=_estimate_out(rec.traditional),
            bidding=_estimate_out(rec.bidding),
            chosen=rec.chosen,
            tie_broken=rec.tie_broken,
            sentiment_advice=AdviceOut(
                optimal_sentiment=advice.optimal_sentiment,
                predicted_success=advice.predicted_success,
            ),
        )

    @app.get("/health", response_model=HealthResponse)
    async def health():
        trio = bundle.trio
        models = {
            name: {
                "kind": m.spec.kind,
                "task": m.spec.task,
                "n_features": len(m.feature_names),
                "artifact_version": FORMAT_VERSION,
            }
            for name, m in (
                ("traditional_rate", trio.traditional_rate),
                ("bidding_rate", trio.bidding_rate),
                ("bidding_success", trio.bidding_success),
            )
        }
        return HealthResponse(
            status="ok", seed=bundle.seed, g_star=bundle.g_star, models=models
        )

    @app.get("/api/schema", response_model=SchemaResponse)
    async def form_schema():
        return SchemaResponse(
            fields=_form_fields(bundle), whatif_fields=list(WHATIF_FIELDS)
        )

    @app.post("/api/recommend", response_model=RecommendResponse)
    async def recommend(req: RecommendRequest):
        return _recommend(req)

    @app.post("/api/whatif", response_model=WhatifResponse)
    async def whatif(req: WhatifRequest):
        record = _record(req)
        points = []
        for value in req.grid:
            if req.field == SENTIMENT_FEATURE:
                trad, bid = estimate_tuples(
                    record, bundle.trio, bundle.lexicon, sentiment_override=value
                )
            else:
                features = dict(record.features)
                features[req.field] = value
                varied = BorrowerRecord(
                    features=features,
                    borrower_id=record.borrower_id,
                    description=record.description,
                )
                trad, bid = estimate_tuples(varied, bundle.trio, bundle.lexicon)
            rec = decide(trad, bid, borrower_id=req.request_id)
            points.append(WhatifPoint(
                value=value,
                traditional=_estimate_out(rec.traditional),
                bidding=_estimate_out(rec.bidding),
                chosen=rec.chosen,
                tie_broken=rec.tie_broken,
            ))
        return WhatifResponse(request_id=req.request_id, field=req.field, points=points)

    return app


def serve(bundle_dir, bind: str = "127.0.0.1:8000") -> None:
    """Blocking entry point used by the CLI serve command."""
    import uvicorn

    bundle = load_bundle(bundle_dir)
    host, _, port = bind.partition(":")
    uvicorn.run(make_app(bundle), host=host or "127.0.0.1", port=int(port or 8000))
