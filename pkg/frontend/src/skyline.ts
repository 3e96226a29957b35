import { clear, emptyState, htmlEl, svgEl } from "./dom.js";
import type { SkylinePayload, SkylineTuple } from "./types.js";

export interface SkylineRenderOptions {
  width?: number;
  height?: number;
  onSelect?: (tuple: SkylineTuple) => void;
}

export function tupleKey(t: { t_r: number; interval: [number, number] }): string {
  return `${t.t_r}:${t.interval[0]}:${t.interval[1]}`;
}

const PAD = 40;

function scaleOf(domainMin: number, domainMax: number, rangeMin: number, rangeMax: number) {
  const span = domainMax - domainMin;
  if (span === 0) {
    return () => (rangeMin + rangeMax) / 2;
  }
  return (v: number) => rangeMin + ((v - domainMin) / span) * (rangeMax - rangeMin);
}

/**
 * Scatter of the skyline: reference point on x, count on y, window length
 * encoded by mark radius.  Exactly one mark per returned tuple; the marks
 * the service ranked into top_k get the highlight class.  Numbers shown
 * anywhere come straight from the payload.
 */
export function renderSkyline(
  container: HTMLElement,
  payload: SkylinePayload,
  opts: SkylineRenderOptions = {},
): void {
  clear(container);
  if (payload.skyline.length === 0) {
    emptyState(container, "no skyline results for this combination");
    return;
  }

  const width = opts.width ?? 640;
  const height = opts.height ?? 360;

  const refs = payload.skyline.map((t) => t.t_r);
  const counts = payload.skyline.map((t) => t.count);
  const lengths = payload.skyline.map((t) => t.interval[1] - t.interval[0] + 1);
  const x = scaleOf(Math.min(...refs), Math.max(...refs), PAD, width - PAD);
  const y = scaleOf(Math.min(...counts), Math.max(...counts), height - PAD, PAD);
  const minLen = Math.min(...lengths);
  const maxLen = Math.max(...lengths);
  const radius = (len: number) =>
    maxLen === minLen ? 6 : 4 + (8 * (len - minLen)) / (maxLen - minLen);

  const topKeys = new Set(payload.top_k.map(tupleKey));

  const svg = svgEl("svg", {
    class: "skyline-plot",
    width: String(width),
    height: String(height),
    viewBox: `0 0 ${width} ${height}`,
  });

  svg.appendChild(
    svgEl("line", {
      class: "axis",
      x1: String(PAD), y1: String(height - PAD),
      x2: String(width - PAD), y2: String(height - PAD),
    }),
  );
  svg.appendChild(
    svgEl("line", {
      class: "axis",
      x1: String(PAD), y1: String(PAD),
      x2: String(PAD), y2: String(height - PAD),
    }),
  );
  for (const ref of new Set(refs)) {
    const tick = svgEl("text", {
      class: "tick",
      x: x(ref).toFixed(1),
      y: String(height - PAD + 16),
      "text-anchor": "middle",
    });
    tick.textContent = String(ref);
    svg.appendChild(tick);
  }

  for (const tuple of payload.skyline) {
    const key = tupleKey(tuple);
    const highlighted = topKeys.has(key);
    const len = tuple.interval[1] - tuple.interval[0] + 1;
    const mark = svgEl("g", {
      class: highlighted ? "mark top-k" : "mark",
      "data-t-r": String(tuple.t_r),
      "data-start": String(tuple.interval[0]),
      "data-end": String(tuple.interval[1]),
      "data-count": String(tuple.count),
      "data-dod": String(tuple.dod),
    });
    mark.appendChild(
      svgEl("circle", {
        cx: x(tuple.t_r).toFixed(1),
        cy: y(tuple.count).toFixed(1),
        r: radius(len).toFixed(1),
      }),
    );
    const tip = svgEl("title");
    tip.textContent =
      `t_r ${tuple.t_r}, window [${tuple.interval[0]}, ${tuple.interval[1]}], ` +
      `count ${tuple.count}, dod ${tuple.dod}`;
    mark.appendChild(tip);
    mark.addEventListener("click", () => {
      for (const other of svg.querySelectorAll(".mark.selected")) {
        other.classList.remove("selected");
      }
      mark.classList.add("selected");
      opts.onSelect?.(tuple);
    });
    svg.appendChild(mark);
  }

  container.appendChild(svg);
  container.appendChild(
    htmlEl(
      "div",
      "plot-caption",
      `${payload.skyline.length} skyline tuples, ${payload.top_k.length} highlighted; ` +
        "mark size follows window length; click a mark to reuse its count",
    ),
  );
}
