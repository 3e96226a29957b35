"""Attribute aggregation of graph views into weighted quotient graphs.

A view is aggregated over a non-empty selection of schema attributes.
Every node resolves to one value combination per exhibited instant (see
``node_combos``), combinations become aggregate nodes, and each source
edge adds one unit of weight to the aggregate edge joining its endpoint
combinations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ContractError, SchemaError
from .graph import (Combo, GraphView, Interval, Provenance, TemporalGraph,
                    TemporalNode, points_from_mask)

DISTINCT = "distinct"
NON_DISTINCT = "non-distinct"
MODES = (DISTINCT, NON_DISTINCT)


def check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ContractError(f"unknown aggregation mode {mode!r}")


def combo_pair(c: Combo, cp: Combo, directed: bool) -> Tuple[Combo, Combo]:
    """Canonical aggregate-edge key; unordered for undirected graphs."""
    if directed or c <= cp:
        return (c, cp)
    return (cp, c)


def validated_combo(g: TemporalGraph, attributes: Sequence[str],
                    combo: Sequence[str]) -> Combo:
    """Reorder ``combo`` (given in ``attributes`` order) into schema order.

    Values are checked against the attribute domains.
    """
    if len(combo) != len(attributes):
        raise ContractError(
            f"combination has {len(combo)} values for {len(attributes)} attributes")
    by_name = {}
    for name, value in zip(attributes, combo):
        attr = g.schema.attribute(name)
        if value not in attr.domain:
            raise SchemaError(f"value {value!r} outside domain of {name!r}")
        by_name[name] = value
    return tuple(by_name[a] for a in g.schema.normalize(attributes))


@dataclass(frozen=True)
class AggregateGraph:
    """Weighted quotient graph over value combinations."""

    attributes: Tuple[str, ...]
    mode: str
    directed: bool
    nodes: Dict[Combo, int]
    edges: Dict[Tuple[Combo, Combo], int]
    provenance: Provenance

    def node_weight(self, c: Combo) -> int:
        return self.nodes.get(c, 0)

    def edge_weight(self, c: Combo, cp: Combo) -> int:
        return self.edges.get(combo_pair(c, cp, self.directed), 0)


def _event_anchor(p: Provenance) -> Optional[Tuple[int, Interval]]:
    if p.reference is None:
        return None
    return p.reference, p.intervals[0]


def _resolve_instant(node: TemporalNode, reference: int,
                     window: Interval) -> Optional[int]:
    # anchored at the reference point, falling back into the window
    if node.valid_at(reference):
        return reference
    return node.latest_valid_in(window.start, window.end)


def node_combos(view: GraphView, node_id: str,
                attributes: Tuple[str, ...]) -> List[Combo]:
    """Combinations the node exhibits within the view's provenance.

    Event-derived views resolve time-varying values at the reference point
    when the node is valid there, else at its latest valid instant inside
    the window; other views collect the combination at every provenance
    instant the node is valid at.  All-static selections always yield at
    most one combination.
    """
    g = view.graph
    node = g.nodes[node_id]
    anchor = _event_anchor(view.provenance)
    if anchor is not None:
        t = _resolve_instant(node, *anchor)
        if t is None:
            return []
        combo = g.node_combo_at(node_id, attributes, t)
        return [combo] if combo is not None else []
    mask = view.provenance.instants_mask() & node.mask
    combos: List[Combo] = []
    seen = set()
    for t in points_from_mask(mask):
        combo = g.node_combo_at(node_id, attributes, t)
        if combo is not None and combo not in seen:
            seen.add(combo)
            combos.append(combo)
    return combos


def _edge_pairs(view: GraphView, key: Tuple[str, str],
                attributes: Tuple[str, ...]) -> List[Tuple[Combo, Combo]]:
    g = view.graph
    u, v = key
    anchor = _event_anchor(view.provenance)
    if anchor is not None:
        cu = node_combos(view, u, attributes)
        cv = node_combos(view, v, attributes)
        if not cu or not cv:
            return []
        return [combo_pair(cu[0], cv[0], g.directed)]
    # an edge links two combinations only where they hold simultaneously,
    # so resolution walks the edge's own valid instants
    mask = view.provenance.instants_mask() & g.edges[key].mask
    pairs: List[Tuple[Combo, Combo]] = []
    seen = set()
    for t in points_from_mask(mask):
        cu = g.node_combo_at(u, attributes, t)
        cv = g.node_combo_at(v, attributes, t)
        if cu is None or cv is None:
            continue
        pair = combo_pair(cu, cv, g.directed)
        if pair not in seen:
            seen.add(pair)
            pairs.append(pair)
    return pairs


def aggregate(view: GraphView, attributes: Sequence[str],
              mode: str = DISTINCT) -> AggregateGraph:
    """Aggregate ``view`` over the selected attributes.

    Node weights count distinct node ids per combination under ``distinct``
    and distinct (node id, combination) pairs under ``non-distinct``; the
    two coincide because a node contributes each exhibited combination once
    either way.  Edge weights count distinct source edges per combination
    pair and do not depend on the mode.  Zero-weight entries are omitted.
    """
    check_mode(mode)
    g = view.graph
    attrs = g.schema.normalize(attributes)
    nodes: Dict[Combo, int] = {}
    for nid in sorted(view.nodes):
        for combo in node_combos(view, nid, attrs):
            nodes[combo] = nodes.get(combo, 0) + 1
    edges: Dict[Tuple[Combo, Combo], int] = {}
    for key in sorted(view.edges):
        for pair in _edge_pairs(view, key, attrs):
            edges[pair] = edges.get(pair, 0) + 1
    return AggregateGraph(attrs, mode, g.directed, nodes, edges,
                          view.provenance)


def event_count(g: TemporalGraph, kind: str, reference: int, window: Interval,
                semantics: str, attributes: Sequence[str],
                source: Sequence[str], target: Sequence[str],
                mode: str = DISTINCT) -> int:
    """Weight of the (source, target) edge in the aggregated event graph.

    ``source`` and ``target`` are given in ``attributes`` order; for
    undirected graphs the pair is unordered.  Returns 0 when the pair is
    absent.
    """
    from .ops import event_graph

    c = validated_combo(g, attributes, source)
    cp = validated_combo(g, attributes, target)
    view = event_graph(g, kind, reference, window, semantics)
    agg = aggregate(view, attributes, mode)
    return agg.edge_weight(c, cp)
