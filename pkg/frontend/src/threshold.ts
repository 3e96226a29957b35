import { clear, emptyState, htmlEl, svgEl } from "./dom.js";
import type { ThresholdPayload } from "./types.js";

export interface ThresholdRenderOptions {
  width?: number;
  height?: number;
}

const LEFT = 46;
const RIGHT = 56;
const ROW = 22;

/**
 * One row per hit: the extremal window drawn as a horizontal span on a
 * shared time axis, the reference point as a filled tick just after it,
 * and the count printed at the right edge.
 */
export function renderThreshold(
  container: HTMLElement,
  payload: ThresholdPayload,
  opts: ThresholdRenderOptions = {},
): void {
  clear(container);
  if (payload.hits.length === 0) {
    emptyState(container, "no reference point meets this threshold");
    return;
  }

  const width = opts.width ?? 640;
  const height = Math.max(opts.height ?? 0, payload.hits.length * ROW + 40);

  const tMin = Math.min(...payload.hits.map((h) => h.interval[0]));
  const tMax = Math.max(...payload.hits.map((h) => h.t_r));
  const span = Math.max(tMax - tMin, 1);
  const x = (t: number) => LEFT + ((t - tMin) / span) * (width - LEFT - RIGHT);

  const svg = svgEl("svg", {
    class: "threshold-plot",
    width: String(width),
    height: String(height),
    viewBox: `0 0 ${width} ${height}`,
  });

  for (let t = tMin; t <= tMax; t++) {
    const tick = svgEl("text", {
      class: "tick",
      x: x(t).toFixed(1),
      y: String(height - 6),
      "text-anchor": "middle",
    });
    tick.textContent = String(t);
    svg.appendChild(tick);
  }

  payload.hits.forEach((hit, row) => {
    const yMid = 16 + row * ROW;
    const group = svgEl("g", {
      class: "hit",
      "data-t-r": String(hit.t_r),
      "data-start": String(hit.interval[0]),
      "data-end": String(hit.interval[1]),
      "data-count": String(hit.count),
    });
    group.appendChild(
      svgEl("rect", {
        class: "window-span",
        x: x(hit.interval[0]).toFixed(1),
        y: String(yMid - 4),
        width: Math.max(x(hit.interval[1]) - x(hit.interval[0]), 2).toFixed(1),
        height: "8",
      }),
    );
    group.appendChild(
      svgEl("circle", {
        class: "reference-tick",
        cx: x(hit.t_r).toFixed(1),
        cy: String(yMid),
        r: "4",
      }),
    );
    const label = svgEl("text", {
      class: "count-label",
      x: String(width - RIGHT + 8),
      y: String(yMid + 4),
    });
    label.textContent = String(hit.count);
    group.appendChild(label);
    const tip = svgEl("title");
    tip.textContent =
      `t_r ${hit.t_r}, window [${hit.interval[0]}, ${hit.interval[1]}], count ${hit.count}`;
    group.appendChild(tip);
    svg.appendChild(group);
  });

  container.appendChild(svg);
  container.appendChild(
    htmlEl(
      "div",
      "plot-caption",
      `${payload.hits.length} reference points meet the threshold`,
    ),
  );
}
