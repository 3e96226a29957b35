export const SVG_NS = "http://www.w3.org/2000/svg";

export function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attrs)) {
    el.setAttribute(name, value);
  }
  return el;
}

export function htmlEl(tag: string, className?: string, text?: string): HTMLElement {
  const el = document.createElement(tag);
  if (className) el.className = className;
  if (text !== undefined) el.textContent = text;
  return el;
}

export function clear(el: HTMLElement): void {
  el.textContent = "";
}

export function emptyState(container: HTMLElement, message: string): void {
  clear(container);
  container.appendChild(htmlEl("div", "empty-state", message));
}

// categorical palette; repeats past 12 distinct values
export const PALETTE = [
  "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
  "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
];

/** Stable value-to-color assignment: sorted distinct values walk the palette. */
export function colorScale(values: Iterable<string>): Map<string, string> {
  const distinct = Array.from(new Set(values)).sort();
  const scale = new Map<string, string>();
  distinct.forEach((value, i) => {
    scale.set(value, PALETTE[i % PALETTE.length]);
  });
  return scale;
}
