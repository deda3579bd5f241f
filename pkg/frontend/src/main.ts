// App wiring: schema-driven form, recommendation view, live what-if panel.
// All model math happens server-side; this module only moves payloads
// between the API client and the render helpers on the one UI thread.

import { ApiError, configureApi, getSchema, postRecommend } from "./api";
import { renderWhatifChart } from "./chart";
import { buildForm, formFieldForFeature, type FormController } from "./form";
import { renderRecommendation } from "./scatter";
import type {
  RecommendRequest,
  RecommendResponse,
  SchemaResponse,
  WhatifRequest,
} from "./types";
import { WhatifController } from "./whatif";

export interface AppOptions {
  apiBase?: string;
  debounceMs?: number;
}

export interface App {
  schema: SchemaResponse;
  form: FormController;
  submit: HTMLButtonElement;
  banner: HTMLElement;
  result: HTMLElement;
  whatifField: HTMLSelectElement;
  chart: HTMLElement;
  staleBanner: HTMLElement;
  controller: WhatifController;
}

export function sweepGrid(field: string, domain: number[] | null, current: number | null): number[] {
  if (field === "SentimentScore") {
    return gridOver(-1, 1, 21);
  }
  if (domain !== null && domain.length === 2) {
    return gridOver(domain[0], domain[1], 21);
  }
  const center = current !== null && current > 0 ? current : 10000;
  return gridOver(center * 0.5, center * 1.5, 11);
}

function gridOver(lo: number, hi: number, n: number): number[] {
  const grid: number[] = [];
  for (let i = 0; i < n; i += 1) {
    grid.push(Number((lo + ((hi - lo) * i) / (n - 1)).toFixed(6)));
  }
  return grid;
}

function section(title: string, className: string): HTMLElement {
  const el = document.createElement("section");
  el.className = className;
  const heading = document.createElement("h2");
  heading.textContent = title;
  el.appendChild(heading);
  return el;
}

export async function init(root: HTMLElement, options: AppOptions = {}): Promise<App> {
  configureApi(options.apiBase ?? (globalThis as { ADVISOR_API_BASE?: string }).ADVISOR_API_BASE ?? "");

  const banner = document.createElement("div");
  banner.className = "banner";
  banner.hidden = true;
  root.appendChild(banner);

  const formSection = section("Borrower profile", "form-section");
  root.appendChild(formSection);

  const resultSection = section("Recommendation", "result-section");
  const result = document.createElement("div");
  result.className = "result";
  resultSection.appendChild(result);
  root.appendChild(resultSection);

  const whatifSection = section("What if?", "whatif-section");
  const whatifField = document.createElement("select");
  whatifField.className = "whatif-field";
  whatifSection.appendChild(whatifField);
  const staleBanner = document.createElement("div");
  staleBanner.className = "stale-banner";
  staleBanner.hidden = true;
  whatifSection.appendChild(staleBanner);
  const chart = document.createElement("div");
  chart.className = "chart";
  whatifSection.appendChild(chart);
  root.appendChild(whatifSection);

  const schema = await getSchema();
  const form = buildForm(formSection, schema.fields);

  const submit = document.createElement("button");
  submit.type = "button";
  submit.className = "submit";
  submit.textContent = "Recommend a loan type";
  submit.disabled = !form.isComplete();
  formSection.appendChild(submit);

  form.onChange(() => {
    submit.disabled = !form.isComplete();
  });

  for (const field of schema.whatif_fields) {
    const option = document.createElement("option");
    option.value = field;
    option.textContent = field;
    whatifField.appendChild(option);
  }

  let lastRecommend: RecommendResponse | null = null;

  function showBanner(message: string): void {
    banner.textContent = message;
    banner.hidden = false;
  }

  function baseRequest(): RecommendRequest {
    const reading = form.read();
    const req: RecommendRequest = { features: reading.features };
    if (reading.description.trim() !== "") {
      req.description = reading.description;
    } else if (reading.sentimentOverride !== null) {
      req.features = { ...req.features, SentimentScore: reading.sentimentOverride };
    }
    return req;
  }

  submit.addEventListener("click", async () => {
    form.clearInvalid();
    banner.hidden = true;
    try {
      const resp = await postRecommend(baseRequest());
      lastRecommend = resp;
      renderRecommendation(result, resp);
    } catch (err) {
      if (err instanceof ApiError) {
        const payload = err.payload;
        let marked = false;
        if (payload.feature) {
          const field = formFieldForFeature(schema.fields, payload.feature);
          if (field !== null) {
            marked = form.markInvalid(field, payload.error ?? "invalid value");
          }
        }
        for (const detail of payload.errors ?? []) {
          marked = form.markInvalid(detail.field, detail.message) || marked;
        }
        if (!marked) {
          showBanner(payload.error ?? `request rejected (status ${err.status})`);
        }
      } else {
        showBanner("The advisor service is unreachable; your inputs are untouched.");
      }
    }
  });

  const controller = new WhatifController(
    {
      onResult(resp) {
        staleBanner.hidden = true;
        const gStar =
          resp.field === "SentimentScore"
            ? lastRecommend?.sentiment_advice?.optimal_sentiment ?? null
            : null;
        renderWhatifChart(chart, resp, { gStar });
      },
      onStale(message) {
        staleBanner.textContent = message;
        staleBanner.hidden = false;
      },
    },
    options.debounceMs ?? 150,
  );

  function explore(): void {
    if (!form.isComplete()) {
      return;
    }
    const field = whatifField.value;
    const schemaField = schema.fields.find((f) => f.name === field) ?? null;
    const reading = form.read();
    const current = typeof reading.features[field] === "number"
      ? (reading.features[field] as number)
      : null;
    const req: WhatifRequest = {
      ...baseRequest(),
      field,
      grid: sweepGrid(field, schemaField?.domain ?? null, current),
    };
    controller.explore(req);
  }

  whatifField.addEventListener("change", explore);
  form.root.addEventListener("input", (event) => {
    const target = event.target as HTMLElement;
    if (!(target instanceof HTMLInputElement) || target.type !== "range") {
      return;
    }
    const overrideRow = target.closest(".sentiment-override");
    if (overrideRow !== null && schema.whatif_fields.includes("SentimentScore")) {
      whatifField.value = "SentimentScore";
    }
    explore();
  });

  return {
    schema,
    form,
    submit,
    banner,
    result,
    whatifField,
    chart,
    staleBanner,
    controller,
  };
}
