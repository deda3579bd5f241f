// Wire types for the advisor HTTP API. Keys stay snake_case because they
// mirror the JSON bodies exactly; the UI never reshapes server payloads.

export type FieldInput = "number" | "select" | "text";

export interface SchemaField {
  name: string;
  input: FieldInput;
  classes: string[] | null;
  domain: number[] | null;
  used_by: string[];
}

export interface SchemaResponse {
  fields: SchemaField[];
  whatif_fields: string[];
}

export interface HealthResponse {
  status: string;
  seed: number;
  g_star: number;
  models: Record<string, Record<string, unknown>>;
}

export type FeatureValue = number | string;

export interface RecommendRequest {
  request_id?: string;
  features: Record<string, FeatureValue>;
  description?: string;
  max_rate?: number;
}

export interface WhatifRequest extends RecommendRequest {
  field: string;
  grid: number[];
}

export interface EstimateOut {
  loan_type: string;
  interest: number;
  success: number;
  distance: number;
}

export interface AdviceOut {
  optimal_sentiment: number;
  predicted_success: number;
}

export interface RecommendResponse {
  request_id: string;
  sentiment_score: number | null;
  traditional: EstimateOut;
  bidding: EstimateOut;
  chosen: string;
  tie_broken: boolean;
  sentiment_advice: AdviceOut | null;
}

export interface WhatifPoint {
  value: number;
  traditional: EstimateOut;
  bidding: EstimateOut;
  chosen: string;
  tie_broken: boolean;
}

export interface WhatifResponse {
  request_id: string;
  field: string;
  points: WhatifPoint[];
}

export interface FieldErrorDetail {
  field: string;
  message: string;
}

export interface ErrorBody {
  error?: string;
  feature?: string;
  errors?: FieldErrorDetail[];
}
