"""Temporal operators: project, flatten, set operators, event graphs.

``flatten`` collapses an interval into a static view under one of two
semantics: ``strict`` keeps elements valid at *every* instant of the
interval, ``loose`` keeps elements valid at *some* instant.  The set
operators and event graphs are defined element-wise on such views.
"""
from __future__ import annotations

from typing import Tuple

from .errors import ContractError, DomainError
from .graph import (EVENT_KINDS, GraphView, Interval, Provenance,
                    TemporalEdge, TemporalGraph, TemporalNode)

STRICT = "strict"
LOOSE = "loose"
SEMANTICS = (STRICT, LOOSE)

#: default flattening semantics per event kind
DEFAULT_SEMANTICS = {"stability": STRICT, "growth": LOOSE, "shrinkage": LOOSE}


def _check_semantics(semantics: str) -> None:
    if semantics not in SEMANTICS:
        raise ContractError(f"unknown semantics {semantics!r}")


def project(g: TemporalGraph, tp: Interval) -> TemporalGraph:
    """Sub-graph whose validities are restricted to ``tp``.

    Elements whose validity does not intersect ``tp`` are dropped; attribute
    series of the surviving nodes are trimmed to the restricted validity.
    The time domain itself is left unchanged, so instants keep their indices.
    """
    g.check_interval(tp)
    window = tp.mask()
    nodes = []
    for n in g.nodes.values():
        m = n.mask & window
        if not m:
            continue
        varying = {a: {t: s[t] for t in s if m >> (t - 1) & 1}
                   for a, s in n.varying_values.items()}
        nodes.append(TemporalNode(n.id, m, dict(n.static_values), varying))
    edges = []
    for e in g.edges.values():
        m = e.mask & window
        if m:
            edges.append(TemporalEdge(e.source, e.target, m))
    return TemporalGraph.build(g.schema, g.instants, nodes, edges,
                               directed=g.directed, labels=g.labels,
                               allow_self_loops=True, name=g.name)


def flatten(g: TemporalGraph, interval: Interval, semantics: str) -> GraphView:
    """Collapse ``interval`` into one static view under ``semantics``."""
    g.check_interval(interval)
    _check_semantics(semantics)
    window = interval.mask()
    if semantics == STRICT:
        nodes = frozenset(nid for nid, n in g.nodes.items()
                          if n.mask & window == window)
        edges = frozenset(k for k, e in g.edges.items()
                          if e.mask & window == window)
    else:
        nodes = frozenset(nid for nid, n in g.nodes.items() if n.mask & window)
        edges = frozenset(k for k, e in g.edges.items() if e.mask & window)
    return GraphView(g, nodes, edges,
                     Provenance("flatten", (interval,), semantics))


def _binary_views(g: TemporalGraph, t1: Interval, t2: Interval) -> Tuple[GraphView, GraphView]:
    return flatten(g, t1, LOOSE), flatten(g, t2, LOOSE)


def view_union(a: GraphView, b: GraphView, kind: str = "union") -> GraphView:
    _check_same_graph(a, b)
    return GraphView(a.graph, a.nodes | b.nodes, a.edges | b.edges,
                     Provenance(kind, a.provenance.intervals + b.provenance.intervals))


def view_intersection(a: GraphView, b: GraphView, kind: str = "intersection") -> GraphView:
    _check_same_graph(a, b)
    return GraphView(a.graph, a.nodes & b.nodes, a.edges & b.edges,
                     Provenance(kind, a.provenance.intervals + b.provenance.intervals))


def view_difference(a: GraphView, b: GraphView, kind: str = "difference") -> GraphView:
    """Elements of ``a`` absent from ``b``.

    Edges are subtracted set-wise.  A retained edge may touch nodes that are
    present in both operands; those endpoints stay in the view flagged as
    support so the result remains a well-formed graph.
    """
    _check_same_graph(a, b)
    pure = a.nodes - b.nodes
    edges = a.edges - b.edges
    touched = set()
    for u, v in edges:
        touched.add(u)
        touched.add(v)
    support = frozenset(touched - pure)
    return GraphView(a.graph, frozenset(pure) | support, edges,
                     Provenance(kind, a.provenance.intervals + b.provenance.intervals),
                     support=support)


def _check_same_graph(a: GraphView, b: GraphView) -> None:
    if a.graph is not b.graph:
        raise ContractError("set operators require views over the same graph")


def union(g: TemporalGraph, t1: Interval, t2: Interval) -> GraphView:
    a, b = _binary_views(g, t1, t2)
    return view_union(a, b)


def intersection(g: TemporalGraph, t1: Interval, t2: Interval) -> GraphView:
    a, b = _binary_views(g, t1, t2)
    return view_intersection(a, b)


def difference(g: TemporalGraph, t1: Interval, t2: Interval) -> GraphView:
    a, b = _binary_views(g, t1, t2)
    return view_difference(a, b)


def _check_event_args(g: TemporalGraph, kind: str, reference: int,
                      window: Interval, semantics: str) -> None:
    if kind not in EVENT_KINDS:
        raise ContractError(f"unknown event kind {kind!r}")
    _check_semantics(semantics)
    g.check_interval(window)
    g.check_instant(reference)
    if window.end + 1 != reference:
        raise ContractError(
            f"window [{window.start},{window.end}] must immediately precede "
            f"reference point {reference}")


def event_graph(g: TemporalGraph, kind: str, reference: int,
                window: Interval, semantics: str) -> GraphView:
    """Stability, growth, or shrinkage of ``reference`` against ``window``.

    ``window`` must end exactly one instant before ``reference``:
    stability keeps what persisted, growth what is new at the reference
    point, shrinkage what disappeared from the window.
    """
    _check_event_args(g, kind, reference, window, semantics)
    past = flatten(g, window, semantics)
    now = g.snapshot(reference)
    if kind == "stability":
        raw = view_intersection(past, now)
    elif kind == "growth":
        raw = view_difference(now, past)
    else:
        raw = view_difference(past, now)
    # canonical provenance: window first, degenerate reference interval second
    prov = Provenance(kind, (window, Interval(reference, reference)),
                      semantics, reference)
    return GraphView(g, raw.nodes, raw.edges, prov, support=raw.support)


def evolution(g: TemporalGraph, reference: int, window: Interval,
              semantics: str) -> Tuple[GraphView, GraphView, GraphView]:
    """(stability, growth, shrinkage) for one reference point, one pass."""
    _check_event_args(g, "stability", reference, window, semantics)
    return (event_graph(g, "stability", reference, window, semantics),
            event_graph(g, "growth", reference, window, semantics),
            event_graph(g, "shrinkage", reference, window, semantics))
