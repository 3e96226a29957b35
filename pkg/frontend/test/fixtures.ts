import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));

/** Responses recorded from the running service; see fixtures/. */
export function loadFixture<T>(name: string): T {
  const raw = readFileSync(join(here, "fixtures", name), "utf8");
  return JSON.parse(raw) as T;
}

export function mount(): HTMLElement {
  const host = document.createElement("div");
  document.body.appendChild(host);
  return host;
}
