import { clear, htmlEl } from "./dom.js";
import type { ApiErrorBody } from "./types.js";

/** Inline error banner: the wire code plus the human message. */
export function showBanner(container: HTMLElement, body: ApiErrorBody): void {
  clear(container);
  const banner = htmlEl("div", "error-banner");
  banner.appendChild(htmlEl("span", "error-code", body.code));
  banner.appendChild(htmlEl("span", "error-message", body.message));
  container.appendChild(banner);
  container.hidden = false;
}

export function clearBanner(container: HTMLElement): void {
  clear(container);
  container.hidden = true;
}
