// Thin fetch wrappers around the advisor API. Every call is appended to a
// request/response log so the UI (and its tests) can trace each rendered
// number back to a server payload; the client never computes model math.

import type {
  ErrorBody,
  HealthResponse,
  RecommendRequest,
  RecommendResponse,
  SchemaResponse,
  WhatifRequest,
  WhatifResponse,
} from "./types";

export interface ApiLogEntry {
  method: string;
  url: string;
  body: unknown;
  status: number;
  response: unknown;
}

export class ApiError extends Error {
  status: number;
  payload: ErrorBody;

  constructor(status: number, payload: ErrorBody) {
    super(payload.error ?? `request failed with status ${status}`);
    this.name = "ApiError";
    this.status = status;
    this.payload = payload;
  }
}

let baseUrl = "";
const log: ApiLogEntry[] = [];

export function configureApi(url: string): void {
  baseUrl = url.replace(/\/+$/, "");
}

export function apiBase(): string {
  return baseUrl;
}

export function requestLog(): readonly ApiLogEntry[] {
  return log;
}

export function clearRequestLog(): void {
  log.length = 0;
}

async function request<T>(
  method: string,
  path: string,
  body?: unknown,
  signal?: AbortSignal,
): Promise<T> {
  const url = `${baseUrl}${path}`;
  const response = await fetch(url, {
    method,
    headers: body === undefined ? undefined : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
    signal,
  });
  let payload: unknown = null;
  try {
    payload = await response.json();
  } catch {
    payload = null;
  }
  log.push({ method, url, body: body ?? null, status: response.status, response: payload });
  if (!response.ok) {
    throw new ApiError(response.status, (payload ?? {}) as ErrorBody);
  }
  return payload as T;
}

export function getSchema(): Promise<SchemaResponse> {
  return request("GET", "/api/schema");
}

export function getHealth(): Promise<HealthResponse> {
  return request("GET", "/health");
}

export function postRecommend(req: RecommendRequest): Promise<RecommendResponse> {
  return request("POST", "/api/recommend", req);
}

export function postWhatif(req: WhatifRequest, signal?: AbortSignal): Promise<WhatifResponse> {
  return request("POST", "/api/whatif", req, signal);
}
