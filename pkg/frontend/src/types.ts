// JSON contracts of the HTTP service, mirrored field by field.

export interface AttributeDef {
  name: string;
  kind: "static" | "time-varying";
  domain: string[];
}

export interface DatasetDescriptor {
  id: string;
  name: string;
  directed: boolean;
  format: string;
  instants: number;
  time_labels: string[] | null;
  attributes: AttributeDef[];
  nodes: number;
  edges: number;
}

export interface StatsRow {
  t: number;
  nodes: number;
  edges: number;
}

export interface OverviewNode {
  id: string;
  value: string;
}

export type OverviewEdge = [string, string];

export interface OverviewPayload {
  nodes: OverviewNode[];
  edges: OverviewEdge[];
  stats: { nodes: number; values: number };
}

export interface AggregateNode {
  combo: string[];
  weight: number;
}

export interface AggregateEdge {
  source: string[];
  target: string[];
  weight: number;
}

export interface AggregatePayload {
  nodes: AggregateNode[];
  edges: AggregateEdge[];
}

export interface EvolutionPayload {
  stability: AggregatePayload;
  growth: AggregatePayload;
  shrinkage: AggregatePayload;
}

export interface SkylineTuple {
  t_r: number;
  interval: [number, number];
  count: number;
  dod: number;
}

export interface SkylinePayload {
  skyline: SkylineTuple[];
  top_k: SkylineTuple[];
}

export interface ThresholdHit {
  t_r: number;
  interval: [number, number];
  count: number;
}

export interface ThresholdPayload {
  hits: ThresholdHit[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: unknown;
}

export function isEvolution(
  payload: AggregatePayload | EvolutionPayload,
): payload is EvolutionPayload {
  return "stability" in payload;
}
