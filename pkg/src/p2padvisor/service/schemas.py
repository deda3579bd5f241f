"""Request/response bodies for the advisor service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

WHATIF_FIELDS = ("BorrowerMaximumRate", "SentimentScore", "LoanAmount")


class RecommendRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    request_id: str = ""
    features: dict[str, Union[float, str]] = Field(default_factory=dict)
    description: Optional[str] = None
    max_rate: Optional[float] = Field(default=None, ge=0.0, le=1.0)


class WhatifRequest(RecommendRequest):
    field: Literal["BorrowerMaximumRate", "SentimentScore", "LoanAmount"]
    grid: list[float] = Field(min_length=1)


class EstimateOut(BaseModel):
    loan_type: str
    interest: float
    success: float
    distance: float


class AdviceOut(BaseModel):
    optimal_sentiment: float
    predicted_success: float


class RecommendResponse(BaseModel):
    request_id: str
    sentiment_score: Optional[float]
    traditional: EstimateOut
    bidding: EstimateOut
    chosen: str
    tie_broken: bool
    sentiment_advice: Optional[AdviceOut]


class WhatifPoint(BaseModel):
    value: float
    traditional: EstimateOut
    bidding: EstimateOut
    chosen: str
    tie_broken: bool


class WhatifResponse(BaseModel):
    request_id: str
    field: str
    points: list[WhatifPoint]


class SchemaField(BaseModel):
    name: str
    input: Literal["number", "select", "text"]
    classes: Optional[list[str]] = None
    domain: Optional[list[float]] = None
    used_by: list[str]


class SchemaResponse(BaseModel):
    fields: list[SchemaField]
    whatif_fields: list[str]


class HealthResponse(BaseModel):
    status: str
    seed: int
    g_star: float
    models: dict[str, dict]
