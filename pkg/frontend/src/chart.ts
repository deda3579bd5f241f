// What-if chart: distance-to-ideal curves and the decision strip across a
// swept input grid. The geometry is pure presentation; the plotted numbers
// are lifted verbatim from the /api/whatif payload into data attributes.

import type { WhatifResponse } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

const WIDTH = 420;
const HEIGHT = 280;
const PLOT = { x: 50, y: 20, w: 340, h: 190 };
const STRIP = { y: 230, h: 16 };

export interface ChartOptions {
  gStar?: number | null;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function renderWhatifChart(
  container: HTMLElement,
  resp: WhatifResponse,
  opts: ChartOptions = {},
): void {
  const points = resp.points;
  const values = points.map((p) => p.value);
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  const span = hi - lo;
  const xPos = (v: number): number =>
    span === 0 ? PLOT.x + PLOT.w / 2 : PLOT.x + ((v - lo) / span) * PLOT.w;

  const distances = points.flatMap((p) => [p.traditional.distance, p.bidding.distance]);
  const dMax = Math.max(...distances, 1e-12);
  const yPos = (d: number): number => PLOT.y + PLOT.h - (d / dMax) * PLOT.h;

  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "whatif-chart",
    role: "img",
  });
  svg.setAttribute("data-field", resp.field);
  svg.appendChild(
    svgEl("rect", {
      x: String(PLOT.x),
      y: String(PLOT.y),
      width: String(PLOT.w),
      height: String(PLOT.h),
      class: "plane-frame",
    }),
  );

  for (const loanType of ["traditional", "bidding"] as const) {
    const path = points
      .map((p) => `${xPos(p.value)},${yPos(p[loanType].distance)}`)
      .join(" ");
    svg.appendChild(
      svgEl("polyline", { points: path, class: `curve curve-${loanType}` }),
    );
  }

  for (const p of points) {
    const marker = svgEl("circle", {
      cx: String(xPos(p.value)),
      cy: String(yPos(p[p.chosen === "bidding" ? "bidding" : "traditional"].distance)),
      r: "4",
      class: `pt pt-${p.chosen}`,
    });
    marker.setAttribute("data-value", String(p.value));
    marker.setAttribute("data-traditional-distance", String(p.traditional.distance));
    marker.setAttribute("data-bidding-distance", String(p.bidding.distance));
    marker.setAttribute("data-chosen", p.chosen);
    svg.appendChild(marker);

    const cellWidth = span === 0 ? PLOT.w : Math.max(PLOT.w / points.length, 2);
    const strip = svgEl("rect", {
      x: String(xPos(p.value) - cellWidth / 2),
      y: String(STRIP.y),
      width: String(cellWidth),
      height: String(STRIP.h),
      class: `decision decision-${p.chosen}`,
    });
    strip.setAttribute("data-value", String(p.value));
    strip.setAttribute("data-chosen", p.chosen);
    svg.appendChild(strip);
  }

  const gStar = opts.gStar;
  if (gStar !== undefined && gStar !== null && gStar >= lo && gStar <= hi) {
    const marker = svgEl("line", {
      x1: String(xPos(gStar)),
      y1: String(PLOT.y),
      x2: String(xPos(gStar)),
      y2: String(PLOT.y + PLOT.h),
      class: "gstar-marker",
    });
    marker.setAttribute("data-value", String(gStar));
    svg.appendChild(marker);
    const label = svgEl("text", {
      x: String(xPos(gStar) + 4),
      y: String(PLOT.y + 12),
      class: "gstar-label",
    });
    label.textContent = "g*";
    svg.appendChild(label);
  }

  const axis = svgEl("text", {
    x: String(PLOT.x + PLOT.w / 2),
    y: String(HEIGHT - 6),
    class: "axis-label",
    "text-anchor": "middle",
  });
  axis.textContent = `${resp.field} (${lo} to ${hi})`;
  svg.appendChild(axis);

  container.replaceChildren(svg);
}
