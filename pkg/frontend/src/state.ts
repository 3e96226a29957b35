// Session state and its URL encoding.  Every request the app issues is
// constructible from an ExplorerSession, and the query-string round trip
// is lossless, so any view is deep-linkable.

export interface OverviewState {
  t: number;
  attribute: string;
  seed: number;
  limit: number;
}

export interface AggregationState {
  operator: string;
  intervals: Array<[number, number]>;
  attributes: string[];
  mode: "distinct" | "non-distinct";
}

export interface ComboState {
  attributes: string[];
  source: string[];
  target: string[];
}

export interface ExplorationState {
  event: string;
  // null means "use the per-event default", which the service applies
  semantics: "strict" | "loose" | null;
  combo: ComboState;
  topK: number;
  k: number;
}

export interface ExplorerSession {
  dataset: string;
  overview: OverviewState;
  aggregation: AggregationState;
  exploration: ExplorationState;
}

export function defaultSession(): ExplorerSession {
  return {
    dataset: "",
    overview: { t: 1, attribute: "", seed: 0, limit: 500 },
    aggregation: { operator: "project", intervals: [[1, 1]], attributes: [], mode: "distinct" },
    exploration: {
      event: "stability",
      semantics: null,
      combo: { attributes: [], source: [], target: [] },
      topK: 10,
      k: 1,
    },
  };
}

// Lists are comma-joined with element-wise escaping, so a value that
// itself contains a comma (or a percent sign) survives the round trip.
// An empty list is encoded as an absent parameter; a list holding one
// empty string is a present-but-empty parameter.  URLSearchParams keeps
// the two apart.
function packList(xs: string[]): string {
  return xs.map(encodeURIComponent).join(",");
}

function unpackList(raw: string): string[] {
  return raw.split(",").map(decodeURIComponent);
}

function packIntervals(intervals: Array<[number, number]>): string {
  return intervals.map(([a, b]) => `${a}:${b}`).join(",");
}

function unpackIntervals(raw: string): Array<[number, number]> {
  return raw.split(",").map((part) => {
    const [a, b] = part.split(":");
    return [Number(a), Number(b)];
  });
}

function setList(params: URLSearchParams, key: string, xs: string[]): void {
  if (xs.length > 0) {
    params.set(key, packList(xs));
  }
}

function getList(params: URLSearchParams, key: string): string[] {
  const raw = params.get(key);
  return raw === null ? [] : unpackList(raw);
}

function getInt(params: URLSearchParams, key: string, fallback: number): number {
  const raw = params.get(key);
  if (raw === null) return fallback;
  const n = Number(raw);
  return Number.isFinite(n) ? n : fallback;
}

export function encodeSession(s: ExplorerSession): string {
  const p = new URLSearchParams();
  p.set("d", s.dataset);
  p.set("ot", String(s.overview.t));
  p.set("oa", s.overview.attribute);
  p.set("os", String(s.overview.seed));
  p.set("ol", String(s.overview.limit));
  p.set("ao", s.aggregation.operator);
  p.set("ai", packIntervals(s.aggregation.intervals));
  setList(p, "aa", s.aggregation.attributes);
  p.set("am", s.aggregation.mode);
  p.set("xe", s.exploration.event);
  if (s.exploration.semantics !== null) {
    p.set("xs", s.exploration.semantics);
  }
  setList(p, "xa", s.exploration.combo.attributes);
  setList(p, "xc", s.exploration.combo.source);
  setList(p, "xt", s.exploration.combo.target);
  p.set("xk", String(s.exploration.topK));
  p.set("xh", String(s.exploration.k));
  return p.toString();
}

export function decodeSession(query: string): ExplorerSession {
  const p = new URLSearchParams(query);
  const base = defaultSession();
  const semantics = p.get("xs");
  return {
    dataset: p.get("d") ?? base.dataset,
    overview: {
      t: getInt(p, "ot", base.overview.t),
      attribute: p.get("oa") ?? base.overview.attribute,
      seed: getInt(p, "os", base.overview.seed),
      limit: getInt(p, "ol", base.overview.limit),
    },
    aggregation: {
      operator: p.get("ao") ?? base.aggregation.operator,
      intervals: p.has("ai") ? unpackIntervals(p.get("ai")!) : base.aggregation.intervals,
      attributes: getList(p, "aa"),
      mode: p.get("am") === "non-distinct" ? "non-distinct" : "distinct",
    },
    exploration: {
      event: p.get("xe") ?? base.exploration.event,
      semantics: semantics === "strict" || semantics === "loose" ? semantics : null,
      combo: {
        attributes: getList(p, "xa"),
        source: getList(p, "xc"),
        target: getList(p, "xt"),
      },
      topK: getInt(p, "xk", base.exploration.topK),
      k: getInt(p, "xh", base.exploration.k),
    },
  };
}
