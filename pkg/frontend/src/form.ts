// Schema-driven borrower form. One control per /api/schema field, plus a
// sentiment override slider; the layout is dictated entirely by the server's
// field list so the form never hardcodes feature names.

import type { FeatureValue, SchemaField } from "./types";

export const SENTIMENT_MIN = -1;
export const SENTIMENT_MAX = 1;

export interface FormReading {
  features: Record<string, FeatureValue>;
  description: string;
  sentimentOverride: number | null;
}

export interface FormController {
  root: HTMLElement;
  fields: SchemaField[];
  read(): FormReading;
  isComplete(): boolean;
  markInvalid(field: string, message: string): boolean;
  clearInvalid(): void;
  setValue(field: string, value: FeatureValue): void;
  onChange(handler: () => void): void;
}

/** Map a model feature named in an API error back to the form field that
 * supplies it. Description-derived features point at the textarea. */
export function formFieldForFeature(fields: SchemaField[], feature: string): string | null {
  if (fields.some((f) => f.name === feature)) {
    return feature;
  }
  const description = fields.find((f) => f.input === "text");
  if (description && (feature === "SentimentScore" || feature === "DescriptionLength")) {
    return description.name;
  }
  return null;
}

function sliderFor(field: SchemaField): boolean {
  return field.input === "number" && field.domain !== null && field.domain.length === 2;
}

function controlFor(field: SchemaField): HTMLElement {
  if (field.input === "select") {
    const select = document.createElement("select");
    const placeholder = document.createElement("option");
    placeholder.value = "";
    placeholder.textContent = "choose...";
    select.appendChild(placeholder);
    for (const cls of field.classes ?? []) {
      const option = document.createElement("option");
      option.value = cls;
      option.textContent = cls;
      select.appendChild(option);
    }
    return select;
  }
  if (field.input === "text") {
    const area = document.createElement("textarea");
    area.rows = 3;
    return area;
  }
  const input = document.createElement("input");
  if (sliderFor(field)) {
    const [lo, hi] = field.domain as number[];
    input.type = "range";
    input.min = String(lo);
    input.max = String(hi);
    input.step = "0.01";
    input.value = String((lo + hi) / 2);
  } else {
    input.type = "number";
    input.step = "any";
  }
  return input;
}

function fieldRow(field: SchemaField): HTMLElement {
  const row = document.createElement("div");
  row.className = "field";
  row.dataset.field = field.name;

  const label = document.createElement("label");
  label.textContent = field.name;
  row.appendChild(label);

  const control = controlFor(field);
  control.setAttribute("name", field.name);
  row.appendChild(control);

  if (control instanceof HTMLInputElement && control.type === "range") {
    const readout = document.createElement("output");
    readout.className = "slider-value";
    readout.textContent = control.value;
    control.addEventListener("input", () => {
      readout.textContent = control.value;
    });
    row.appendChild(readout);
  }

  const error = document.createElement("span");
  error.className = "field-error";
  row.appendChild(error);
  return row;
}

function overrideRow(): HTMLElement {
  const row = document.createElement("div");
  row.className = "field sentiment-override";
  row.dataset.field = "SentimentOverride";

  const label = document.createElement("label");
  label.textContent = "Sentiment override";
  row.appendChild(label);

  const toggle = document.createElement("input");
  toggle.type = "checkbox";
  toggle.className = "override-enabled";
  row.appendChild(toggle);

  const slider = document.createElement("input");
  slider.type = "range";
  slider.min = String(SENTIMENT_MIN);
  slider.max = String(SENTIMENT_MAX);
  slider.step = "0.01";
  slider.value = "0";
  slider.disabled = true;
  row.appendChild(slider);

  const readout = document.createElement("output");
  readout.className = "slider-value";
  readout.textContent = slider.value;
  row.appendChild(readout);

  toggle.addEventListener("change", () => {
    slider.disabled = !toggle.checked;
  });
  slider.addEventListener("input", () => {
    readout.textContent = slider.value;
  });
  return row;
}

function controlOf(row: HTMLElement): HTMLInputElement | HTMLSelectElement | HTMLTextAreaElement {
  const el = row.querySelector("input, select, textarea");
  if (!el) {
    throw new Error(`form row ${row.dataset.field} has no control`);
  }
  return el as HTMLInputElement | HTMLSelectElement | HTMLTextAreaElement;
}

export function buildForm(container: HTMLElement, fields: SchemaField[]): FormController {
  const root = document.createElement("form");
  root.className = "borrower-form";
  root.addEventListener("submit", (event) => event.preventDefault());

  const rows = new Map<string, HTMLElement>();
  for (const field of fields) {
    const row = fieldRow(field);
    rows.set(field.name, row);
    root.appendChild(row);
  }
  const override = overrideRow();
  root.appendChild(override);
  container.appendChild(root);

  const descriptionField = fields.find((f) => f.input === "text")?.name ?? null;

  function rowValue(field: SchemaField): string {
    const row = rows.get(field.name);
    return row ? controlOf(row).value : "";
  }

  return {
    root,
    fields,

    read(): FormReading {
      const features: Record<string, FeatureValue> = {};
      let description = "";
      for (const field of fields) {
        const raw = rowValue(field);
        if (field.name === descriptionField) {
          description = raw;
        } else if (field.input === "number") {
          if (raw !== "") {
            features[field.name] = Number(raw);
          }
        } else if (raw !== "") {
          features[field.name] = raw;
        }
      }
      const toggle = override.querySelector<HTMLInputElement>(".override-enabled");
      const slider = override.querySelector<HTMLInputElement>("input[type=range]");
      const sentimentOverride =
        toggle && slider && toggle.checked ? Number(slider.value) : null;
      return { features, description, sentimentOverride };
    },

    isComplete(): boolean {
      for (const field of fields) {
        const raw = rowValue(field);
        if (raw.trim() === "") {
          return false;
        }
        if (field.input === "number" && Number.isNaN(Number(raw))) {
          return false;
        }
      }
      return true;
    },

    markInvalid(field: string, message: string): boolean {
      const row = rows.get(field);
      if (!row) {
        return false;
      }
      row.classList.add("invalid");
      const error = row.querySelector<HTMLElement>(".field-error");
      if (error) {
        error.textContent = message;
      }
      return true;
    },

    clearInvalid(): void {
      for (const row of rows.values()) {
        row.classList.remove("invalid");
        const error = row.querySelector<HTMLElement>(".field-error");
        if (error) {
          error.textContent = "";
        }
      }
    },

    setValue(field: string, value: FeatureValue): void {
      const row = rows.get(field);
      if (!row) {
        throw new Error(`no form field named ${field}`);
      }
      const control = controlOf(row);
      control.value = String(value);
      control.dispatchEvent(new Event("input", { bubbles: true }));
    },

    onChange(handler: () => void): void {
      root.addEventListener("input", handler);
      root.addEventListener("change", handler);
    },
  };
}
