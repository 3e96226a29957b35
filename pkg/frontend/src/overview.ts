import { clear, colorScale, emptyState, htmlEl, svgEl } from "./dom.js";
import { forceLayout } from "./layout.js";
import type { OverviewPayload } from "./types.js";

export interface OverviewRenderOptions {
  width?: number;
  height?: number;
  seed?: number;
}

/**
 * Draw the overview payload: the sampled largest component at one instant,
 * nodes colored by attribute value, with a stats banner and a legend.
 * Every circle carries a tooltip with the node id.
 */
export function renderOverview(
  container: HTMLElement,
  payload: OverviewPayload,
  opts: OverviewRenderOptions = {},
): void {
  clear(container);
  if (payload.nodes.length === 0) {
    emptyState(container, "no data for this selection");
    return;
  }

  const width = opts.width ?? 720;
  const height = opts.height ?? 520;

  const banner = htmlEl(
    "div",
    "stats-banner",
    `${payload.stats.nodes} nodes in the largest component, ` +
      `${payload.stats.values} attribute values`,
  );
  container.appendChild(banner);

  const ids = payload.nodes.map((n) => n.id);
  const positions = forceLayout(ids, payload.edges, width, height, opts.seed ?? 1);
  const scale = colorScale(payload.nodes.map((n) => n.value));

  const svg = svgEl("svg", {
    class: "overview-plot",
    width: String(width),
    height: String(height),
    viewBox: `0 0 ${width} ${height}`,
  });

  for (const [a, b] of payload.edges) {
    const pa = positions.get(a);
    const pb = positions.get(b);
    if (!pa || !pb) continue;
    svg.appendChild(
      svgEl("line", {
        class: "edge",
        x1: pa.x.toFixed(1),
        y1: pa.y.toFixed(1),
        x2: pb.x.toFixed(1),
        y2: pb.y.toFixed(1),
      }),
    );
  }

  for (const node of payload.nodes) {
    const pos = positions.get(node.id)!;
    const circle = svgEl("circle", {
      class: "node",
      cx: pos.x.toFixed(1),
      cy: pos.y.toFixed(1),
      r: "5",
      fill: scale.get(node.value)!,
      "data-id": node.id,
      "data-value": node.value,
    });
    const tip = svgEl("title");
    tip.textContent = `${node.id} (${node.value})`;
    circle.appendChild(tip);
    svg.appendChild(circle);
  }
  container.appendChild(svg);

  const legend = htmlEl("div", "legend");
  for (const [value, color] of scale) {
    const item = htmlEl("span", "legend-item", value);
    const swatch = htmlEl("span", "swatch");
    swatch.style.backgroundColor = color;
    item.prepend(swatch);
    legend.appendChild(item);
  }
  container.appendChild(legend);
}

/**
 * Repaint node colors for a new attribute without touching the layout or
 * the edge elements.  `values` maps node id to the new attribute value;
 * nodes missing from the map keep their current color.
 */
export function recolorOverview(container: HTMLElement, values: Map<string, string>): void {
  const scale = colorScale(values.values());
  const circles = container.querySelectorAll<SVGCircleElement>("circle.node");
  circles.forEach((circle) => {
    const id = circle.getAttribute("data-id");
    if (id === null) return;
    const value = values.get(id);
    if (value === undefined) return;
    circle.setAttribute("fill", scale.get(value)!);
    circle.setAttribute("data-value", value);
    const tip = circle.querySelector("title");
    if (tip) tip.textContent = `${id} (${value})`;
  });

  const legend = container.querySelector(".legend");
  if (legend instanceof HTMLElement) {
    clear(legend);
    for (const [value, color] of scale) {
      const item = htmlEl("span", "legend-item", value);
      const swatch = htmlEl("span", "swatch");
      swatch.style.backgroundColor = color;
      item.prepend(swatch);
      legend.appendChild(item);
    }
  }
}
