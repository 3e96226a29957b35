"""Exploration over (reference point, past interval) candidate tuples.

For a reference point t_r the candidate intervals [a, t_r-1] form a chain
ordered by a, and the event count is monotone along that chain.  The
counting core exploits this: each edge either enters or leaves the event
graph at a single flip position as the window extends to the past, so one
difference array per chain yields every count in O(edges + instants).

Skylines are computed over the (length, count) plane with a sweep, and
domination degrees against the full candidate set with a Fenwick tree.
Brute-force counterparts live in ``oracle``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .aggregate import combo_pair, validated_combo
from .errors import ContractError
from .graph import Combo, Interval, TemporalGraph
from .ops import LOOSE, STRICT, _check_semantics

NON_INCREASING = "non-increasing"
NON_DECREASING = "non-decreasing"

_MONOTONICITY = {
    ("stability", STRICT): NON_INCREASING,
    ("growth", LOOSE): NON_INCREASING,
    ("shrinkage", STRICT): NON_INCREASING,
    ("stability", LOOSE): NON_DECREASING,
    ("growth", STRICT): NON_DECREASING,
    ("shrinkage", LOOSE): NON_DECREASING,
}


def monotonicity_for(kind: str, semantics: str) -> str:
    """How the event count behaves as the window extends to the past."""
    try:
        return _MONOTONICITY[(kind, semantics)]
    except KeyError:
        raise ContractError(f"unknown event/semantics pair ({kind!r}, {semantics!r})")


@dataclass(frozen=True)
class Candidate:
    """One explored tuple: reference point, past window, event count."""

    reference: int
    window: Interval
    count: int

    @property
    def length(self) -> int:
        return self.window.length


@dataclass
class SkylineResult:
    skyline: List[Candidate]
    dod: Dict[Candidate, int]
    top_k: List[Candidate]
    monotonicity: str


@dataclass
class ThresholdResult:
    hits: List[Candidate]
    monotonicity: str


# -- chain counting -----------------------------------------------------

def _run_start(mask: int, reference: int) -> Optional[int]:
    """Start of the valid run ending at reference-1, None without one."""
    s = reference - 1
    if not mask >> (s - 1) & 1:
        return None
    while s > 1 and mask >> (s - 2) & 1:
        s -= 1
    return s


def _last_valid_before(mask: int, reference: int) -> int:
    """Latest valid instant below the reference point, 0 if none."""
    return (mask & ((1 << (reference - 1)) - 1)).bit_length()


class _ComboResolver:
    """Resolved node combination per reference point, memoised.

    Resolution matches event-view aggregation: at the reference point when
    the node is valid there, else at its latest valid instant before it.
    """

    def __init__(self, g: TemporalGraph, attrs: Tuple[str, ...]):
        self.g = g
        self.attrs = attrs
        self.static_only = all(
            g.schema.attribute(a).kind == "static" for a in attrs)
        self._cache: Dict[object, Optional[Combo]] = {}

    def resolve(self, node_id: str, reference: int) -> Optional[Combo]:
        key = node_id if self.static_only else (node_id, reference)
        if key in self._cache:
            return self._cache[key]
        node = self.g.nodes[node_id]
        if node.valid_at(reference):
            t = reference
        else:
            t = _last_valid_before(node.mask, reference) or None
        combo = self.g.node_combo_at(node_id, self.attrs, t) if t else None
        if combo is not None or not self.static_only:
            # a static-only None depends on the reference point (the node may
            # become valid later), so it must not be cached under a bare id
            self._cache[key] = combo
        return combo


def _chain_counts(g: TemporalGraph, kind: str, semantics: str,
                  resolver: _ComboResolver, want: Tuple[Combo, Combo],
                  reference: int) -> List[int]:
    """Event counts for windows [a, reference-1], indexed by a-1.

    Each relevant edge is active on a prefix or a suffix of the a-axis,
    determined by its validity pattern alone; two difference arrays then
    produce the whole chain at once.
    """
    n_a = reference - 1
    starts_ge = [0] * (n_a + 2)   # edge active for a >= alpha
    ends_le = [0] * (n_a + 2)     # edge active for a <= beta
    for key, e in g.edges.items():
        in_snap = e.valid_at(reference)
        if (kind == "shrinkage") == in_snap:
            continue
        cu = resolver.resolve(key[0], reference)
        cv = resolver.resolve(key[1], reference)
        if cu is None or cv is None:
            continue
        if combo_pair(cu, cv, g.directed) != want:
            continue
        if semantics == STRICT:
            rs = _run_start(e.mask, reference)
            if kind == "growth":
                if rs is None:
                    starts_ge[1] += 1          # never flattened, always new
                elif rs > 1:
                    ends_le[rs - 1] += 1
            else:
                if rs is not None:
                    starts_ge[rs] += 1
        else:
            lv = _last_valid_before(e.mask, reference)
            if kind == "growth":
                if lv < n_a:
                    starts_ge[lv + 1] += 1
            else:
                if lv >= 1:
                    ends_le[lv] += 1
    counts = [0] * n_a
    acc = 0
    for a in range(1, n_a + 1):
        acc += starts_ge[a]
        counts[a - 1] = acc
    acc = 0
    for a in range(n_a, 0, -1):
        acc += ends_le[a]
        counts[a - 1] += acc
    return counts


def _prepare(g: TemporalGraph, kind: str, semantics: str,
             attributes: Sequence[str], source: Sequence[str],
             target: Sequence[str]) -> Tuple[_ComboResolver, Tuple[Combo, Combo]]:
    from .graph import EVENT_KINDS

    if kind not in EVENT_KINDS:
        raise ContractError(f"unknown event kind {kind!r}")
    _check_semantics(semantics)
    if g.instants < 2:
        raise ContractError("exploration needs at least two time points")
    c = validated_combo(g, attributes, source)
    cp = validated_combo(g, attributes, target)
    attrs = g.schema.normalize(attributes)
    return _ComboResolver(g, attrs), combo_pair(c, cp, g.directed)


def candidate_chains(g: TemporalGraph, kind: str, semantics: str,
                     attributes: Sequence[str], source: Sequence[str],
                     target: Sequence[str]) -> Dict[int, List[int]]:
    """Full count chains per reference point, zeros included.

    Mostly a testing surface: chain monotonicity is asserted on these.
    """
    resolver, want = _prepare(g, kind, semantics, attributes, source, target)
    return {t_r: _chain_counts(g, kind, semantics, resolver, want, t_r)
            for t_r in range(2, g.instants + 1)}


def enumerate_candidates(g: TemporalGraph, kind: str, semantics: str,
                         attributes: Sequence[str], source: Sequence[str],
                         target: Sequence[str]) -> List[Candidate]:
    """All positive-count candidates, ordered by (reference, start)."""
    resolver, want = _prepare(g, kind, semantics, attributes, source, target)
    out: List[Candidate] = []
    for t_r in range(2, g.instants + 1):
        counts = _chain_counts(g, kind, semantics, resolver, want, t_r)
        for a in range(1, t_r):
            w = counts[a - 1]
            if w > 0:
                out.append(Candidate(t_r, Interval(a, t_r - 1), w))
    return out


# -- domination ---------------------------------------------------------

def _level(c: Candidate, monotonicity: str) -> int:
    # orient length so that "greater" always means "preferred"
    return c.length if monotonicity == NON_INCREASING else -c.length


def dominates(a: Candidate, b: Candidate, monotonicity: str) -> bool:
    """Pareto domination in (oriented length, count); ties never dominate."""
    la, lb = _level(a, monotonicity), _level(b, monotonicity)
    return (la >= lb and a.count >= b.count
            and (la, a.count) != (lb, b.count))


class _Fenwick:
    def __init__(self, size: int):
        self.size = size
        self.tree = [0] * (size + 1)

    def add(self, i: int) -> None:
        while i <= self.size:
            self.tree[i] += 1
            i += i & -i

    def prefix(self, i: int) -> int:
        s = 0
        while i > 0:
            s += self.tree[i]
            i -= i & -i
        return s


def _skyline_members(candidates: List[Candidate], monotonicity: str) -> List[Candidate]:
    """Non-dominated candidates; equal (length, count) points all survive."""
    by_level: Dict[int, List[Candidate]] = {}
    for c in candidates:
        by_level.setdefault(_level(c, monotonicity), []).append(c)
    members: List[Candidate] = []
    best_above = -1
    for level in sorted(by_level, reverse=True):
        group = by_level[level]
        wmax = max(c.count for c in group)
        if wmax > best_above:
            members.extend(c for c in group if c.count == wmax)
        best_above = max(best_above, wmax)
    return members


def _domination_degrees(candidates: List[Candidate], queries: List[Candidate],
                        monotonicity: str) -> Dict[Candidate, int]:
    """dod(q) = number of candidates q dominates, via an L-ordered sweep."""
    ranks = {w: i + 1 for i, w in enumerate(sorted({c.count for c in candidates}))}
    fen = _Fenwick(len(ranks))
    same: Dict[Tuple[int, int], int] = {}
    for c in candidates:
        key = (_level(c, monotonicity), c.count)
        same[key] = same.get(key, 0) + 1
    ordered = sorted(candidates, key=lambda c: _level(c, monotonicity))
    pending = sorted(queries, key=lambda c: _level(c, monotonicity))
    dod: Dict[Candidate, int] = {}
    i = 0
    for q in pending:
        lq = _level(q, monotonicity)
        while i < len(ordered) and _level(ordered[i], monotonicity) <= lq:
            fen.add(ranks[ordered[i].count])
            i += 1
        dod[q] = fen.prefix(ranks[q.count]) - same[(lq, q.count)]
    return dod


def _ranking_key(c: Candidate, dod: Dict[Candidate, int]):
    return (-dod[c], -c.count, -c.length, c.reference, c.window.start)


def skyline(g: TemporalGraph, kind: str, semantics: str,
            attributes: Sequence[str], source: Sequence[str],
            target: Sequence[str], top_k: int) -> SkylineResult:
    """Evolution skyline with domination degrees and the top-k ranking.

    The skyline list is ordered by (dod desc, count desc, length desc,
    reference asc); top_k is its prefix.
    """
    if top_k < 1:
        raise ContractError("top_k must be at least 1")
    monotonicity = monotonicity_for(kind, semantics)
    candidates = enumerate_candidates(g, kind, semantics, attributes,
                                      source, target)
    if not candidates:
        return SkylineResult([], {}, [], monotonicity)
    members = _skyline_members(candidates, monotonicity)
    dod = _domination_degrees(candidates, members, monotonicity)
    members.sort(key=lambda c: _ranking_key(c, dod))
    return SkylineResult(members, dod, members[:top_k], monotonicity)


def threshold_search(g: TemporalGraph, kind: str, semantics: str,
                     attributes: Sequence[str], source: Sequence[str],
                     target: Sequence[str], k: int) -> ThresholdResult:
    """Per reference point, the extremal window whose count meets ``k``.

    Non-increasing counts admit a longest qualifying window, non-decreasing
    ones a shortest; chains are walked from the shortest window outward and
    abandoned as soon as monotonicity rules out further change.
    """
    if k < 1:
        raise ContractError("threshold must be at least 1")
    monotonicity = monotonicity_for(kind, semantics)
    resolver, want = _prepare(g, kind, semantics, attributes, source, target)
    hits: List[Candidate] = []
    for t_r in range(2, g.instants + 1):
        counts = _chain_counts(g, kind, semantics, resolver, want, t_r)
        hit: Optional[Candidate] = None
        for a in range(t_r - 1, 0, -1):
            w = counts[a - 1]
            if monotonicity == NON_INCREASING:
                if w < k:
                    break                  # extending further only shrinks w
                hit = Candidate(t_r, Interval(a, t_r - 1), w)
            else:
                if w >= k:
                    hit = Candidate(t_r, Interval(a, t_r - 1), w)
                    break                  # shortest qualifying window found
        if hit is not None:
            hits.append(hit)
    return ThresholdResult(hits, monotonicity)
