"""Brute-force counterparts of the exploration operations.

Every candidate is recomputed from scratch through the event-graph and
aggregation pipeline, skyline membership and domination degrees come from
quadratic scans, and threshold extrema from explicit per-chain argmax.
These exist to check the optimized routes, not to be fast.
"""
from __future__ import annotations

from typing import List, Sequence

from .aggregate import DISTINCT, aggregate, validated_combo
from .errors import ContractError
from .explore import (NON_INCREASING, Candidate, SkylineResult,
                      ThresholdResult, _ranking_key, dominates,
                      monotonicity_for)
from .graph import Interval, TemporalGraph
from .ops import event_graph


def naive_enumerate(g: TemporalGraph, kind: str, semantics: str,
                    attributes: Sequence[str], source: Sequence[str],
                    target: Sequence[str]) -> List[Candidate]:
    """One full event graph and aggregation per candidate window."""
    if g.instants < 2:
        raise ContractError("exploration needs at least two time points")
    c = validated_combo(g, attributes, source)
    cp = validated_combo(g, attributes, target)
    out: List[Candidate] = []
    for t_r in range(2, g.instants + 1):
        for a in range(1, t_r):
            window = Interval(a, t_r - 1)
            view = event_graph(g, kind, t_r, window, semantics)
            w = aggregate(view, attributes, DISTINCT).edge_weight(c, cp)
            if w > 0:
                out.append(Candidate(t_r, window, w))
    return out


def naive_skyline(g: TemporalGraph, kind: str, semantics: str,
                  attributes: Sequence[str], source: Sequence[str],
                  target: Sequence[str], top_k: int) -> SkylineResult:
    if top_k < 1:
        raise ContractError("top_k must be at least 1")
    monotonicity = monotonicity_for(kind, semantics)
    candidates = naive_enumerate(g, kind, semantics, attributes, source, target)
    members = [c for c in candidates
               if not any(dominates(o, c, monotonicity) for o in candidates)]
    dod = {s: sum(1 for x in candidates if dominates(s, x, monotonicity))
           for s in members}
    members.sort(key=lambda c: _ranking_key(c, dod))
    return SkylineResult(members, dod, members[:top_k], monotonicity)


def naive_threshold_search(g: TemporalGraph, kind: str, semantics: str,
                           attributes: Sequence[str], source: Sequence[str],
                           target: Sequence[str], k: int) -> ThresholdResult:
    if k < 1:
        raise ContractError("threshold must be at least 1")
    monotonicity = monotonicity_for(kind, semantics)
    candidates = naive_enumerate(g, kind, semantics, attributes, source, target)
    hits: List[Candidate] = []
    for t_r in sorted({c.reference for c in candidates}):
        qualifying = [c for c in candidates
                      if c.reference == t_r and c.count >= k]
        if not qualifying:
            continue
        if monotonicity == NON_INCREASING:
            hits.append(max(qualifying, key=lambda c: c.length))
        else:
            hits.append(min(qualifying, key=lambda c: c.length))
    return ThresholdResult(hits, monotonicity)
