// Recommendation view: both loan-type estimates plotted on the
// (interest, funding success) plane with the ideal corner at (0, 1).
// Every rendered number is copied from the API response; exact values are
// kept in data attributes, display text only rounds them.

import type { EstimateOut, RecommendResponse } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

const WIDTH = 360;
const HEIGHT = 300;
const PLOT = { x: 40, y: 20, w: 300, h: 240 };

function xPos(interest: number): number {
  return PLOT.x + interest * PLOT.w;
}

function yPos(success: number): number {
  return PLOT.y + (1 - success) * PLOT.h;
}

function pct(value: number): string {
  return `${(value * 100).toFixed(1)}%`;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

function loanPoint(estimate: EstimateOut, chosen: string): SVGElement {
  const point = svgEl("circle", {
    cx: String(xPos(estimate.interest)),
    cy: String(yPos(estimate.success)),
    r: "7",
    class: `loan loan-${estimate.loan_type}${estimate.loan_type === chosen ? " chosen" : ""}`,
  });
  point.setAttribute("data-interest", String(estimate.interest));
  point.setAttribute("data-success", String(estimate.success));
  point.setAttribute("data-distance", String(estimate.distance));
  return point;
}

function estimateLine(estimate: EstimateOut, chosen: string): HTMLElement {
  const line = document.createElement("p");
  line.className = `estimate estimate-${estimate.loan_type}${
    estimate.loan_type === chosen ? " chosen" : ""
  }`;
  line.dataset.distance = String(estimate.distance);
  line.textContent =
    `${estimate.loan_type}: interest ${pct(estimate.interest)}, ` +
    `funding chance ${pct(estimate.success)}, ` +
    `distance to ideal ${estimate.distance.toFixed(4)}`;
  return line;
}

export function renderRecommendation(container: HTMLElement, resp: RecommendResponse): void {
  const view = document.createElement("div");
  view.className = "recommendation";

  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "loan-plane",
    role: "img",
  });
  svg.appendChild(
    svgEl("rect", {
      x: String(PLOT.x),
      y: String(PLOT.y),
      width: String(PLOT.w),
      height: String(PLOT.h),
      class: "plane-frame",
    }),
  );

  const ideal = svgEl("circle", {
    cx: String(xPos(0)),
    cy: String(yPos(1)),
    r: "5",
    class: "ideal",
  });
  ideal.setAttribute("data-interest", "0");
  ideal.setAttribute("data-success", "1");
  svg.appendChild(ideal);
  const idealLabel = svgEl("text", {
    x: String(xPos(0) + 8),
    y: String(yPos(1) + 4),
    class: "ideal-label",
  });
  idealLabel.textContent = "ideal (0% interest, 100% funded)";
  svg.appendChild(idealLabel);

  svg.appendChild(loanPoint(resp.traditional, resp.chosen));
  svg.appendChild(loanPoint(resp.bidding, resp.chosen));
  view.appendChild(svg);

  const verdict = document.createElement("p");
  verdict.className = "verdict";
  verdict.dataset.chosen = resp.chosen;
  verdict.textContent = `Recommended loan type: ${resp.chosen}`;
  if (resp.tie_broken) {
    verdict.textContent += " (tie, traditional preferred)";
  }
  view.appendChild(verdict);

  view.appendChild(estimateLine(resp.traditional, resp.chosen));
  view.appendChild(estimateLine(resp.bidding, resp.chosen));

  if (resp.sentiment_score !== null) {
    const sentiment = document.createElement("p");
    sentiment.className = "sentiment";
    sentiment.dataset.score = String(resp.sentiment_score);
    sentiment.textContent = `Description sentiment score: ${resp.sentiment_score.toFixed(4)}`;
    view.appendChild(sentiment);
  }

  if (resp.sentiment_advice !== null) {
    const advice = document.createElement("p");
    advice.className = "advice";
    advice.dataset.optimal = String(resp.sentiment_advice.optimal_sentiment);
    advice.dataset.predicted = String(resp.sentiment_advice.predicted_success);
    advice.textContent =
      `Rewriting the description toward sentiment ` +
      `${resp.sentiment_advice.optimal_sentiment.toFixed(2)} raises the predicted ` +
      `funding chance to ${pct(resp.sentiment_advice.predicted_success)}`;
    view.appendChild(advice);
  }

  container.replaceChildren(view);
}
