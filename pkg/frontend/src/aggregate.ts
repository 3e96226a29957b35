import { clear, colorScale, emptyState, htmlEl, svgEl } from "./dom.js";
import type { AggregatePayload } from "./types.js";

export interface AggregateRenderOptions {
  width?: number;
  height?: number;
  title?: string;
}

function comboKey(combo: string[]): string {
  return combo.join("|");
}

/**
 * Draw the weighted quotient graph of an aggregation: one node per
 * attribute value combination, labeled with its weight, edges labeled
 * with theirs.  Self-pairs render as a loop above the node.
 */
export function renderAggregate(
  container: HTMLElement,
  payload: AggregatePayload,
  opts: AggregateRenderOptions = {},
): void {
  clear(container);
  if (opts.title) {
    container.appendChild(htmlEl("div", "panel-title", opts.title));
  }
  if (payload.nodes.length === 0) {
    emptyState(container, "the view is empty");
    return;
  }

  const width = opts.width ?? 420;
  const height = opts.height ?? 360;
  const cx = width / 2;
  const cy = height / 2;
  const ring = Math.min(width, height) / 2 - 70;

  // ring placement in sorted combo order keeps renders stable
  const ordered = [...payload.nodes].sort((a, b) =>
    comboKey(a.combo) < comboKey(b.combo) ? -1 : 1,
  );
  const positions = new Map<string, { x: number; y: number }>();
  ordered.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / ordered.length - Math.PI / 2;
    positions.set(comboKey(node.combo), {
      x: cx + (ordered.length === 1 ? 0 : ring * Math.cos(angle)),
      y: cy + (ordered.length === 1 ? 0 : ring * Math.sin(angle)),
    });
  });

  const svg = svgEl("svg", {
    class: "aggregate-plot",
    width: String(width),
    height: String(height),
    viewBox: `0 0 ${width} ${height}`,
  });

  for (const edge of payload.edges) {
    const sKey = comboKey(edge.source);
    const tKey = comboKey(edge.target);
    const ps = positions.get(sKey);
    const pt = positions.get(tKey);
    if (!ps || !pt) continue;

    const group = svgEl("g", {
      class: "combo-edge",
      "data-source": sKey,
      "data-target": tKey,
      "data-weight": String(edge.weight),
    });
    let labelX: number;
    let labelY: number;
    if (sKey === tKey) {
      group.appendChild(
        svgEl("circle", {
          class: "loop",
          cx: ps.x.toFixed(1),
          cy: (ps.y - 26).toFixed(1),
          r: "14",
          fill: "none",
        }),
      );
      labelX = ps.x;
      labelY = ps.y - 44;
    } else {
      group.appendChild(
        svgEl("line", {
          x1: ps.x.toFixed(1),
          y1: ps.y.toFixed(1),
          x2: pt.x.toFixed(1),
          y2: pt.y.toFixed(1),
        }),
      );
      labelX = (ps.x + pt.x) / 2;
      labelY = (ps.y + pt.y) / 2 - 4;
    }
    const label = svgEl("text", {
      class: "weight-label",
      x: labelX.toFixed(1),
      y: labelY.toFixed(1),
      "text-anchor": "middle",
    });
    label.textContent = String(edge.weight);
    group.appendChild(label);
    const tip = svgEl("title");
    tip.textContent = `${sKey} to ${tKey}, weight ${edge.weight}`;
    group.appendChild(tip);
    svg.appendChild(group);
  }

  const scale = colorScale(ordered.map((n) => comboKey(n.combo)));
  for (const node of ordered) {
    const key = comboKey(node.combo);
    const pos = positions.get(key)!;
    const group = svgEl("g", {
      class: "combo-node",
      "data-combo": key,
      "data-weight": String(node.weight),
    });
    group.appendChild(
      svgEl("circle", {
        cx: pos.x.toFixed(1),
        cy: pos.y.toFixed(1),
        r: "16",
        fill: scale.get(key)!,
      }),
    );
    const label = svgEl("text", {
      class: "combo-label",
      x: pos.x.toFixed(1),
      y: (pos.y + 32).toFixed(1),
      "text-anchor": "middle",
    });
    label.textContent = `${key} (${node.weight})`;
    group.appendChild(label);
    const tip = svgEl("title");
    tip.textContent = `combo ${key}, weight ${node.weight}`;
    group.appendChild(tip);
    svg.appendChild(group);
  }

  container.appendChild(svg);
}
