import type {
  AggregatePayload,
  ApiErrorBody,
  DatasetDescriptor,
  EvolutionPayload,
  OverviewPayload,
  SkylinePayload,
  StatsRow,
  ThresholdPayload,
} from "./types.js";

export class ApiFault extends Error {
  code: string;
  detail?: unknown;

  constructor(body: ApiErrorBody) {
    super(body.message);
    this.name = "ApiFault";
    this.code = body.code;
    this.detail = body.detail;
  }
}

export interface OverviewQuery {
  t: number;
  attr: string;
  limit?: number;
  seed?: number;
}

export interface AggregateRequest {
  operator: string;
  intervals: Array<[number, number]>;
  attributes: string[];
  mode?: string;
  semantics?: string;
}

export interface ExploreRequest {
  event: string;
  attributes: string[];
  source_combo: string[];
  target_combo: string[];
  semantics?: string;
}

/**
 * Fetch wrapper around the exploration service.  At most one request is in
 * flight per view: issuing a new one aborts the previous request for the
 * same view, so a slow stale response can never overwrite a newer render.
 */
export class ApiClient {
  private inflight: Map<string, AbortController> = new Map();

  constructor(private base: string = "") {}

  listDatasets(): Promise<DatasetDescriptor[]> {
    return this.request("datasets", "/api/datasets");
  }

  stats(dataset: string): Promise<StatsRow[]> {
    return this.request("stats", `/api/${encodeURIComponent(dataset)}/stats`);
  }

  overview(dataset: string, q: OverviewQuery): Promise<OverviewPayload> {
    const params = new URLSearchParams({ t: String(q.t), attr: q.attr });
    if (q.limit !== undefined) params.set("limit", String(q.limit));
    if (q.seed !== undefined) params.set("seed", String(q.seed));
    const path = `/api/${encodeURIComponent(dataset)}/overview?${params}`;
    return this.request("overview", path);
  }

  aggregate(
    dataset: string,
    req: AggregateRequest,
  ): Promise<AggregatePayload | EvolutionPayload> {
    return this.post("aggregate", `/api/${encodeURIComponent(dataset)}/aggregate`, req);
  }

  skyline(
    dataset: string,
    req: ExploreRequest & { top_k: number },
  ): Promise<SkylinePayload> {
    const path = `/api/${encodeURIComponent(dataset)}/explore/skyline`;
    return this.post("skyline", path, req);
  }

  threshold(
    dataset: string,
    req: ExploreRequest & { k: number },
  ): Promise<ThresholdPayload> {
    const path = `/api/${encodeURIComponent(dataset)}/explore/threshold`;
    return this.post("threshold", path, req);
  }

  private post<T>(view: string, path: string, body: unknown): Promise<T> {
    return this.request(view, path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  private async request<T>(view: string, path: string, init?: RequestInit): Promise<T> {
    this.inflight.get(view)?.abort();
    const controller = new AbortController();
    this.inflight.set(view, controller);
    try {
      const res = await fetch(this.base + path, { ...init, signal: controller.signal });
      const body = (await res.json()) as unknown;
      if (!res.ok) {
        throw new ApiFault(body as ApiErrorBody);
      }
      return body as T;
    } finally {
      // a superseding request may already own the slot
      if (this.inflight.get(view) === controller) {
        this.inflight.delete(view);
      }
    }
  }
}
