"""JSON-shaped result builders shared by the CLI and the HTTP service.

Value combinations cross the wire in the order the request listed its
attributes; internally everything is schema-ordered, so these builders
permute on the way in and out.
"""
from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from . import explore, ops
from .aggregate import AggregateGraph, aggregate, check_mode
from .errors import ContractError
from .graph import Combo, EVENT_KINDS, GraphView, Interval, TemporalGraph
from .overview import DEFAULT_SAMPLE_LIMIT, overview

SET_OPERATORS = ("project", "union", "intersection", "difference")
OPERATORS = SET_OPERATORS + EVENT_KINDS + ("evolution",)


def resolve_semantics(event: str, semantics: Optional[str]) -> str:
    if semantics is None:
        try:
            return ops.DEFAULT_SEMANTICS[event]
        except KeyError:
            raise ContractError(f"unknown event kind {event!r}")
    ops._check_semantics(semantics)
    return semantics


def parse_interval(pair: Sequence[int]) -> Interval:
    if (not isinstance(pair, (list, tuple)) or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)):
        raise ContractError(f"interval must be an integer pair [start, end], got {pair!r}")
    return Interval(pair[0], pair[1])


def _combo_out(combo: Combo, normalized: Tuple[str, ...],
               requested: Sequence[str]) -> List[str]:
    by_name = dict(zip(normalized, combo))
    return [by_name[a] for a in requested]


def dataset_descriptor(g: TemporalGraph, fmt: str) -> dict:
    return {
        "id": g.name,
        "name": g.name,
        "directed": g.directed,
        "format": fmt,
        "instants": g.instants,
        "time_labels": list(g.labels) if g.labels is not None else None,
        "attributes": [{"name": a.name, "kind": a.kind, "domain": list(a.domain)}
                       for a in g.schema.attributes],
        "nodes": len(g.nodes),
        "edges": len(g.edges),
    }


def stats_payload(g: TemporalGraph) -> List[dict]:
    return [{"t": t, "nodes": n, "edges": m} for t, n, m in g.per_time_stats()]


def overview_payload(g: TemporalGraph, t: int, attribute: str,
                     limit: int = DEFAULT_SAMPLE_LIMIT, seed: int = 0) -> dict:
    result = overview(g, t, attribute, limit, seed)
    return {
        "nodes": [{"id": nid, "value": value} for nid, value in result.nodes],
        "edges": [[u, v] for u, v in result.edges],
        "stats": {"nodes": result.stats[0], "values": result.stats[1]},
    }


def _aggregate_out(agg: AggregateGraph, requested: Sequence[str]) -> dict:
    normalized = agg.attributes
    nodes = [{"combo": _combo_out(c, normalized, requested), "weight": w}
             for c, w in sorted(agg.nodes.items())]
    edges = [{"source": _combo_out(c, normalized, requested),
              "target": _combo_out(cp, normalized, requested),
              "weight": w}
             for (c, cp), w in sorted(agg.edges.items())]
    return {"nodes": nodes, "edges": edges}


def _operator_view(g: TemporalGraph, operator: str,
                   intervals: List[Interval], semantics: Optional[str]) -> GraphView:
    if operator == "project":
        if len(intervals) != 1:
            raise ContractError("project takes exactly one interval")
        return ops.flatten(g, intervals[0], ops.LOOSE)
    if len(intervals) != 2:
        raise ContractError(f"{operator} takes exactly two intervals")
    t1, t2 = intervals
    if operator == "union":
        return ops.union(g, t1, t2)
    if operator == "intersection":
        return ops.intersection(g, t1, t2)
    if operator == "difference":
        return ops.difference(g, t1, t2)
    # event operators: the second interval is the degenerate reference point
    if t2.start != t2.end:
        raise ContractError(
            "event operators take a window and a single reference point "
            "given as a degenerate interval [t_r, t_r]")
    return ops.event_graph(g, operator, t2.start, t1,
                           resolve_semantics(operator, semantics))


def aggregate_payload(g: TemporalGraph, operator: str,
                      intervals: Sequence[Sequence[int]],
                      attributes: Sequence[str], mode: str,
                      semantics: Optional[str] = None) -> dict:
    if operator not in OPERATORS:
        raise ContractError(f"unknown operator {operator!r}")
    check_mode(mode)
    parsed = [parse_interval(p) for p in intervals]
    if operator == "evolution":
        if len(parsed) != 2:
            raise ContractError("evolution takes exactly two intervals")
        window, ref = parsed
        if ref.start != ref.end:
            raise ContractError(
                "evolution takes a window and a single reference point "
                "given as a degenerate interval [t_r, t_r]")
        out = {}
        for kind in EVENT_KINDS:
            view = ops.event_graph(g, kind, ref.start, window,
                                   resolve_semantics(kind, semantics))
            out[kind] = _aggregate_out(aggregate(view, attributes, mode), attributes)
        return out
    view = _operator_view(g, operator, parsed, semantics)
    return _aggregate_out(aggregate(view, attributes, mode), attributes)


def _candidate_out(c: explore.Candidate, dod: Optional[Dict] = None) -> dict:
    item = {"t_r": c.reference,
            "interval": [c.window.start, c.window.end],
            "count": c.count}
    if dod is not None:
        item["dod"] = dod[c]
    return item


def skyline_payload(g: TemporalGraph, event: str, semantics: Optional[str],
                    attributes: Sequence[str], source_combo: Sequence[str],
                    target_combo: Sequence[str], top_k: int) -> dict:
    s = resolve_semantics(event, semantics)
    result = explore.skyline(g, event, s, attributes, source_combo,
                             target_combo, top_k)
    return {
        "skyline": [_candidate_out(c, result.dod) for c in result.skyline],
        "top_k": [_candidate_out(c, result.dod) for c in result.top_k],
    }


def threshold_payload(g: TemporalGraph, event: str, semantics: Optional[str],
                      attributes: Sequence[str], source_combo: Sequence[str],
                      target_combo: Sequence[str], k: int) -> dict:
    s = resolve_semantics(event, semantics)
    result = explore.threshold_search(g, event, s, attributes, source_combo,
                                      target_combo, k)
    return {"hits": [_candidate_out(c) for c in result.hits]}
