"""Single-instant overview: largest component, sampling, display payload."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import ContractError
from .graph import EdgeKey, GraphView, NodeId, TemporalGraph

DEFAULT_SAMPLE_LIMIT = 500


@dataclass
class OverviewPayload:
    """Nodes with one attribute value each, plus the edge list and stats."""

    nodes: List[Tuple[NodeId, str]]
    edges: List[EdgeKey]
    stats: Tuple[int, int]   # (node count, distinct value count)


def _adjacency(view: GraphView) -> Dict[NodeId, List[NodeId]]:
    adj: Dict[NodeId, List[NodeId]] = {nid: [] for nid in view.nodes}
    for u, v in view.edges:
        adj[u].append(v)
        if u != v:
            adj[v].append(u)
    for nid in adj:
        adj[nid].sort()
    return adj


def _induced(view: GraphView, nodes: frozenset) -> GraphView:
    edges = frozenset(k for k in view.edges
                      if k[0] in nodes and k[1] in nodes)
    return GraphView(view.graph, nodes, edges, view.provenance,
                     support=view.support & nodes)


def max_connected_component(view: GraphView) -> GraphView:
    """Largest component under undirected reachability.

    Size ties fall to the component containing the smallest node id.
    """
    if not view.nodes:
        return view
    adj = _adjacency(view)
    seen = set()
    best_nodes = None
    best_size = 0
    # iterating ids in order makes the first maximal component the winner,
    # which is exactly the smallest-id tie rule
    for start in sorted(view.nodes):
        if start in seen:
            continue
        component = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    component.add(w)
                    queue.append(w)
        if len(component) > best_size:
            best_size = len(component)
            best_nodes = component
    return _induced(view, frozenset(best_nodes))


def snowball_sample(view: GraphView, limit: int, seed: int) -> GraphView:
    """Level-wise breadth-first sample of at most ``limit`` nodes.

    Starts from a seeded random node and adds whole neighbor levels; a
    level that would overshoot is truncated in id order so the sample hits
    the limit exactly.  When a component runs dry with room left, a fresh
    start is drawn from the remaining nodes.  Deterministic per seed.
    """
    if limit < 1:
        raise ContractError("sample limit must be at least 1")
    if len(view.nodes) <= limit:
        return view
    rng = random.Random(seed)
    adj = _adjacency(view)
    remaining = sorted(view.nodes)
    chosen: set = set()
    while len(chosen) < limit and remaining:
        start = rng.choice(remaining)
        chosen.add(start)
        frontier = [start]
        while frontier and len(chosen) < limit:
            level = sorted({w for u in frontier for w in adj[u]} - chosen)
            if not level:
                break
            room = limit - len(chosen)
            if len(level) > room:
                level = level[:room]
            chosen.update(level)
            frontier = level
        remaining = [n for n in remaining if n not in chosen]
    return _induced(view, frozenset(chosen))


def overview(g: TemporalGraph, t: int, attribute: str,
             limit: int = DEFAULT_SAMPLE_LIMIT, seed: int = 0) -> OverviewPayload:
    """Snapshot at ``t``, sampled when oversized, reduced to its core.

    The pipeline is snapshot, then snowball sampling when the snapshot
    exceeds ``limit`` nodes, then the largest connected component.  Every
    returned node carries its value of ``attribute`` at ``t``.
    """
    g.check_instant(t)
    attr = g.schema.attribute(attribute)
    view = g.snapshot(t)
    if len(view.nodes) > limit:
        view = snowball_sample(view, limit, seed)
    view = max_connected_component(view)
    nodes: List[Tuple[NodeId, str]] = []
    for nid in sorted(view.nodes):
        combo = g.node_combo_at(nid, (attr.name,), t)
        nodes.append((nid, combo[0]))
    values = {value for _, value in nodes}
    return OverviewPayload(nodes, sorted(view.edges), (len(nodes), len(values)))
