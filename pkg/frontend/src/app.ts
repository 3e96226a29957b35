import { ApiClient, ApiFault } from "./api.js";
import type { AggregateRequest, ExploreRequest, OverviewQuery } from "./api.js";
import { renderAggregate } from "./aggregate.js";
import { clearBanner, showBanner } from "./banner.js";
import { clear, htmlEl } from "./dom.js";
import { recolorOverview, renderOverview } from "./overview.js";
import { renderSkyline } from "./skyline.js";
import { decodeSession, encodeSession } from "./state.js";
import type { ExplorerSession } from "./state.js";
import { renderThreshold } from "./threshold.js";
import type {
  AggregatePayload,
  DatasetDescriptor,
  EvolutionPayload,
  OverviewPayload,
  SkylinePayload,
  SkylineTuple,
  StatsRow,
  ThresholdPayload,
} from "./types.js";
import { isEvolution } from "./types.js";

/** What the app needs from the service; ApiClient satisfies it. */
export interface ExplorerClient {
  listDatasets(): Promise<DatasetDescriptor[]>;
  stats(dataset: string): Promise<StatsRow[]>;
  overview(dataset: string, q: OverviewQuery): Promise<OverviewPayload>;
  aggregate(dataset: string, req: AggregateRequest): Promise<AggregatePayload | EvolutionPayload>;
  skyline(dataset: string, req: ExploreRequest & { top_k: number }): Promise<SkylinePayload>;
  threshold(dataset: string, req: ExploreRequest & { k: number }): Promise<ThresholdPayload>;
}

export function parseIntervalsInput(raw: string): Array<[number, number]> {
  const parts = raw.split(",").map((p) => p.trim()).filter((p) => p !== "");
  return parts.map((part) => {
    const pieces = part.split(":");
    const a = Number(pieces[0]);
    const b = pieces.length > 1 ? Number(pieces[1]) : a;
    return [a, b] as [number, number];
  });
}

export function formatIntervals(intervals: Array<[number, number]>): string {
  return intervals.map(([a, b]) => (a === b ? String(a) : `${a}:${b}`)).join(",");
}

export function parseListInput(raw: string): string[] {
  return raw.split(",").map((p) => p.trim()).filter((p) => p !== "");
}

interface OverviewCacheEntry {
  values: Map<string, string>;
  stats: { nodes: number; values: number };
}

export class ExplorerApp {
  private selectedTuple: SkylineTuple | null = null;
  // values seen for the currently rendered overview, keyed by attribute;
  // lets an attribute switch recolor without another fetch
  private overviewKey: string | null = null;
  private overviewCache: Map<string, OverviewCacheEntry> = new Map();

  constructor(
    private doc: Document,
    private client: ExplorerClient,
  ) {}

  async start(): Promise<void> {
    const session = decodeSession(this.win()?.location.search ?? "");
    this.applySession(session);
    this.bind();
    try {
      const descriptors = await this.client.listDatasets();
      this.fillDatasetSelect(descriptors, session.dataset);
    } catch {
      // no dataset list yet; forms stay usable for manual retry
      return;
    }
    if (this.readSession().dataset !== "") {
      await this.refreshAll();
    }
  }

  readSession(): ExplorerSession {
    return {
      dataset: this.select("dataset-select").value,
      overview: {
        t: Number(this.input("overview-t").value) || 1,
        attribute: this.input("overview-attr").value,
        seed: Number(this.input("overview-seed").value) || 0,
        limit: Number(this.input("overview-limit").value) || 500,
      },
      aggregation: {
        operator: this.select("aggregate-operator").value,
        intervals: parseIntervalsInput(this.input("aggregate-intervals").value),
        attributes: parseListInput(this.input("aggregate-attrs").value),
        mode: this.select("aggregate-mode").value === "non-distinct" ? "non-distinct" : "distinct",
      },
      exploration: {
        event: this.select("explore-event").value,
        semantics: this.semanticsOf(this.select("explore-semantics").value),
        combo: {
          attributes: parseListInput(this.input("explore-attrs").value),
          source: parseListInput(this.input("explore-source").value),
          target: parseListInput(this.input("explore-target").value),
        },
        topK: Number(this.input("explore-topk").value) || 10,
        k: Number(this.input("threshold-k").value) || 1,
      },
    };
  }

  applySession(s: ExplorerSession): void {
    this.select("dataset-select").value = s.dataset;
    this.input("overview-t").value = String(s.overview.t);
    this.input("overview-attr").value = s.overview.attribute;
    this.input("overview-seed").value = String(s.overview.seed);
    this.input("overview-limit").value = String(s.overview.limit);
    this.select("aggregate-operator").value = s.aggregation.operator;
    this.input("aggregate-intervals").value = formatIntervals(s.aggregation.intervals);
    this.input("aggregate-attrs").value = s.aggregation.attributes.join(",");
    this.select("aggregate-mode").value = s.aggregation.mode;
    this.select("explore-event").value = s.exploration.event;
    this.select("explore-semantics").value = s.exploration.semantics ?? "";
    this.input("explore-attrs").value = s.exploration.combo.attributes.join(",");
    this.input("explore-source").value = s.exploration.combo.source.join(",");
    this.input("explore-target").value = s.exploration.combo.target.join(",");
    this.input("explore-topk").value = String(s.exploration.topK);
    this.input("threshold-k").value = String(s.exploration.k);
  }

  async runOverview(): Promise<void> {
    const s = this.syncUrl();
    const view = this.el("overview-view");
    const banner = this.el("overview-banner");
    clearBanner(banner);
    try {
      const payload = await this.client.overview(s.dataset, {
        t: s.overview.t,
        attr: s.overview.attribute,
        limit: s.overview.limit,
        seed: s.overview.seed,
      });
      renderOverview(view, payload, { seed: s.overview.seed + 1 });
      this.overviewKey = this.currentOverviewKey(s);
      this.overviewCache = new Map([
        [s.overview.attribute, this.cacheEntryOf(payload)],
      ]);
    } catch (err) {
      this.report(banner, err);
    }
  }

  /**
   * Attribute switch on an already rendered overview: reuse the cached
   * values when this attribute was seen before, otherwise fetch once.
   * The node sample is seed-determined and independent of the attribute,
   * so the layout and the edges are kept either way.
   */
  async switchOverviewAttribute(): Promise<void> {
    const s = this.syncUrl();
    if (this.overviewKey !== this.currentOverviewKey(s)) {
      await this.runOverview();
      return;
    }
    const view = this.el("overview-view");
    const banner = this.el("overview-banner");
    clearBanner(banner);
    const attr = s.overview.attribute;
    try {
      let entry = this.overviewCache.get(attr);
      if (!entry) {
        const payload = await this.client.overview(s.dataset, {
          t: s.overview.t,
          attr,
          limit: s.overview.limit,
          seed: s.overview.seed,
        });
        entry = this.cacheEntryOf(payload);
        this.overviewCache.set(attr, entry);
      }
      recolorOverview(view, entry.values);
      const bannerEl = view.querySelector(".stats-banner");
      if (bannerEl) {
        bannerEl.textContent =
          `${entry.stats.nodes} nodes in the largest component, ` +
          `${entry.stats.values} attribute values`;
      }
    } catch (err) {
      this.report(banner, err);
    }
  }

  async runAggregate(): Promise<void> {
    const s = this.syncUrl();
    const view = this.el("aggregate-view");
    const banner = this.el("aggregate-banner");
    clearBanner(banner);
    const req: AggregateRequest = {
      operator: s.aggregation.operator,
      intervals: s.aggregation.intervals,
      attributes: s.aggregation.attributes,
      mode: s.aggregation.mode,
    };
    try {
      const payload = await this.client.aggregate(s.dataset, req);
      clear(view);
      if (isEvolution(payload)) {
        const row = htmlEl("div", "evolution-row");
        for (const kind of ["stability", "growth", "shrinkage"] as const) {
          const panel = htmlEl("div", "evolution-panel");
          renderAggregate(panel, payload[kind], { title: kind, width: 300, height: 280 });
          row.appendChild(panel);
        }
        view.appendChild(row);
      } else {
        renderAggregate(view, payload);
      }
    } catch (err) {
      this.report(banner, err);
    }
  }

  async runSkyline(): Promise<void> {
    const s = this.syncUrl();
    const view = this.el("skyline-view");
    const banner = this.el("explore-banner");
    clearBanner(banner);
    const req = this.exploreRequest(s);
    try {
      const payload = await this.client.skyline(s.dataset, {
        ...req,
        top_k: s.exploration.topK,
      });
      this.selectedTuple = null;
      this.el("skyline-selection").hidden = true;
      renderSkyline(view, payload, { onSelect: (t) => this.selectTuple(t) });
    } catch (err) {
      this.report(banner, err);
    }
  }

  async runThreshold(): Promise<void> {
    const s = this.syncUrl();
    const view = this.el("threshold-view");
    const banner = this.el("threshold-banner");
    clearBanner(banner);
    const req = this.exploreRequest(s);
    try {
      const payload = await this.client.threshold(s.dataset, {
        ...req,
        k: s.exploration.k,
      });
      renderThreshold(view, payload);
    } catch (err) {
      this.report(banner, err);
    }
  }

  async refreshAll(): Promise<void> {
    await Promise.all([
      this.runOverview(),
      this.runAggregate(),
      this.runSkyline(),
      this.runThreshold(),
    ]);
  }

  selectTuple(tuple: SkylineTuple): void {
    this.selectedTuple = tuple;
    const box = this.el("skyline-selection");
    box.hidden = false;
    const text = box.querySelector(".selection-text");
    if (text) {
      text.textContent =
        `t_r ${tuple.t_r}, window [${tuple.interval[0]}, ${tuple.interval[1]}], ` +
        `count ${tuple.count}`;
    }
  }

  /** The two-step workflow: the picked tuple's count becomes the k field. */
  prefillK(): void {
    if (this.selectedTuple === null) return;
    this.input("threshold-k").value = String(this.selectedTuple.count);
    this.syncUrl();
  }

  private exploreRequest(s: ExplorerSession): ExploreRequest {
    const req: ExploreRequest = {
      event: s.exploration.event,
      attributes: s.exploration.combo.attributes,
      source_combo: s.exploration.combo.source,
      target_combo: s.exploration.combo.target,
    };
    if (s.exploration.semantics !== null) {
      req.semantics = s.exploration.semantics;
    }
    return req;
  }

  private syncUrl(): ExplorerSession {
    const s = this.readSession();
    const win = this.win();
    if (win) {
      const params = new URLSearchParams(encodeSession(s));
      const api = new URLSearchParams(win.location.search).get("api");
      if (api !== null) params.set("api", api);
      win.history.replaceState(null, "", `?${params.toString()}`);
    }
    return s;
  }

  private report(banner: HTMLElement, err: unknown): void {
    if (err instanceof ApiFault) {
      showBanner(banner, { code: err.code, message: err.message });
    } else if (err instanceof DOMException && err.name === "AbortError") {
      // superseded by a newer request for the same view
    } else {
      showBanner(banner, { code: "network_error", message: String(err) });
    }
  }

  private bind(): void {
    this.form("overview-form").addEventListener("submit", (e) => {
      e.preventDefault();
      void this.runOverview();
    });
    this.input("overview-attr").addEventListener("change", () => {
      if (this.overviewKey !== null) {
        void this.switchOverviewAttribute();
      }
    });
    this.form("aggregate-form").addEventListener("submit", (e) => {
      e.preventDefault();
      void this.runAggregate();
    });
    this.form("explore-form").addEventListener("submit", (e) => {
      e.preventDefault();
      void this.runSkyline();
    });
    this.form("threshold-form").addEventListener("submit", (e) => {
      e.preventDefault();
      void this.runThreshold();
    });
    this.el("prefill-k").addEventListener("click", () => this.prefillK());
    this.select("dataset-select").addEventListener("change", () => {
      this.overviewKey = null;
      this.overviewCache.clear();
      this.syncUrl();
    });
  }

  private fillDatasetSelect(descriptors: DatasetDescriptor[], wanted: string): void {
    const select = this.select("dataset-select");
    clear(select);
    for (const d of descriptors) {
      const option = this.doc.createElement("option");
      option.value = d.id;
      option.textContent = `${d.name} (${d.nodes} nodes, ${d.instants} instants)`;
      select.appendChild(option);
    }
    if (wanted !== "" && descriptors.some((d) => d.id === wanted)) {
      select.value = wanted;
    }
  }

  private cacheEntryOf(payload: OverviewPayload): OverviewCacheEntry {
    return {
      values: new Map(payload.nodes.map((n) => [n.id, n.value])),
      stats: payload.stats,
    };
  }

  private currentOverviewKey(s: ExplorerSession): string {
    return `${s.dataset}|${s.overview.t}|${s.overview.seed}|${s.overview.limit}`;
  }

  private semanticsOf(raw: string): "strict" | "loose" | null {
    return raw === "strict" || raw === "loose" ? raw : null;
  }

  private win(): Window | null {
    return this.doc.defaultView;
  }

  private el(id: string): HTMLElement {
    const found = this.doc.getElementById(id);
    if (!found) throw new Error(`missing element #${id}`);
    return found;
  }

  private input(id: string): HTMLInputElement {
    return this.el(id) as HTMLInputElement;
  }

  private select(id: string): HTMLSelectElement {
    return this.el(id) as HTMLSelectElement;
  }

  private form(id: string): HTMLFormElement {
    return this.el(id) as HTMLFormElement;
  }
}

function apiBase(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("api") ?? "";
}

if (typeof document !== "undefined" && document.getElementById("app") !== null) {
  void new ExplorerApp(document, new ApiClient(apiBase())).start();
}
