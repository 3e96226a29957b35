"""Core model: time domain, attribute schema, temporal nodes/edges, views.

Time points are 1-based integers.  Validity sets are stored as bitmasks
(bit ``t-1`` set means the element is valid at instant ``t``), which keeps
the flatten/intersection machinery cheap even for dense graphs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import ContractError, DomainError, ReferentialError, SchemaError

NodeId = str
EdgeKey = Tuple[NodeId, NodeId]
Combo = Tuple[str, ...]

STATIC = "static"
TIME_VARYING = "time-varying"

EVENT_KINDS = ("stability", "growth", "shrinkage")


def mask_from_points(points: Iterable[int]) -> int:
    m = 0
    for t in points:
        m |= 1 << (t - 1)
    return m


def points_from_mask(mask: int) -> List[int]:
    out = []
    t = 1
    while mask:
        if mask & 1:
            out.append(t)
        mask >>= 1
        t += 1
    return out


@dataclass(frozen=True, order=True)
class Interval:
    """Closed interval of time points, ``start <= end``, both 1-based."""

    start: int
    end: int

    def __post_init__(self):
        if not (isinstance(self.start, int) and isinstance(self.end, int)):
            raise ContractError("interval bounds must be integers")
        if self.start < 1 or self.start > self.end:
            raise ContractError(f"invalid interval [{self.start},{self.end}]")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def points(self) -> range:
        return range(self.start, self.end + 1)

    def mask(self) -> int:
        return ((1 << self.length) - 1) << (self.start - 1)

    def contains(self, t: int) -> bool:
        return self.start <= t <= self.end


@dataclass(frozen=True)
class Attribute:
    name: str
    kind: str
    domain: Tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (STATIC, TIME_VARYING):
            raise SchemaError(f"attribute {self.name!r}: unknown kind {self.kind!r}")
        if not self.domain:
            raise SchemaError(f"attribute {self.name!r}: empty value domain")
        if len(set(self.domain)) != len(self.domain):
            raise SchemaError(f"attribute {self.name!r}: duplicate domain values")


@dataclass(frozen=True)
class AttributeSchema:
    attributes: Tuple[Attribute, ...]

    def __post_init__(self):
        names = [a.name for a in self.attributes]
        if len(set(names)) != len(names):
            raise SchemaError("duplicate attribute names in schema")

    def attribute(self, name: str) -> Attribute:
        for a in self.attributes:
            if a.name == name:
                return a
        raise SchemaError(f"unknown attribute {name!r}")

    def names(self) -> Tuple[str, ...]:
        return tuple(a.name for a in self.attributes)

    def normalize(self, names: Sequence[str]) -> Tuple[str, ...]:
        """Validate a selection and return it in schema declaration order."""
        if not names:
            raise ContractError("attribute selection must not be empty")
        seen = set(names)
        if len(seen) != len(names):
            raise ContractError("duplicate attribute in selection")
        for n in names:
            self.attribute(n)
        return tuple(a.name for a in self.attributes if a.name in seen)


@dataclass(frozen=True)
class TemporalNode:
    id: NodeId
    mask: int
    static_values: Dict[str, str] = field(default_factory=dict)
    varying_values: Dict[str, Dict[int, str]] = field(default_factory=dict)

    def valid_at(self, t: int) -> bool:
        return bool(self.mask >> (t - 1) & 1)

    def latest_valid_in(self, lo: int, hi: int) -> Optional[int]:
        window = self.mask & Interval(lo, hi).mask() if lo <= hi else 0
        return window.bit_length() if window else None

    def value_at(self, attr: Attribute, t: int) -> str:
        if attr.kind == STATIC:
            return self.static_values[attr.name]
        return self.varying_values[attr.name][t]


@dataclass(frozen=True)
class TemporalEdge:
    source: NodeId
    target: NodeId
    mask: int

    @property
    def key(self) -> EdgeKey:
        return (self.source, self.target)

    def valid_at(self, t: int) -> bool:
        return bool(self.mask >> (t - 1) & 1)


@dataclass(frozen=True)
class Provenance:
    """How a view was produced; drives attribute resolution in aggregation."""

    kind: str
    intervals: Tuple[Interval, ...]
    semantics: Optional[str] = None
    reference: Optional[int] = None

    def instants_mask(self) -> int:
        m = 0
        for iv in self.intervals:
            m |= iv.mask()
        if self.reference is not None:
            m |= 1 << (self.reference - 1)
        return m


@dataclass(frozen=True)
class GraphView:
    """Static graph produced by an operator, tied back to its source graph.

    ``support`` marks nodes kept only because a retained edge touches them
    (difference-style views); they are part of the graph but excluded from
    pure node-difference counts.
    """

    graph: "TemporalGraph"
    nodes: frozenset
    edges: frozenset
    provenance: Provenance
    support: frozenset = frozenset()

    @property
    def pure_nodes(self) -> frozenset:
        return self.nodes - self.support

    def node_count(self) -> int:
        return len(self.nodes)

    def edge_count(self) -> int:
        return len(self.edges)


def canonical_pair(u: NodeId, v: NodeId, directed: bool) -> EdgeKey:
    if directed or u <= v:
        return (u, v)
    return (v, u)


class TemporalGraph:
    """Immutable-by-convention temporal attributed graph.

    Construct with :meth:`build`, which validates all structural invariants
    up front; queries never mutate state.
    """

    def __init__(self, schema: AttributeSchema, directed: bool, instants: int,
                 nodes: Dict[NodeId, TemporalNode], edges: Dict[EdgeKey, TemporalEdge],
                 labels: Optional[Tuple[str, ...]] = None, name: str = ""):
        self.schema = schema
        self.directed = directed
        self.instants = instants
        self.nodes = nodes
        self.edges = edges
        self.labels = labels
        self.name = name

    # -- construction ---------------------------------------------------

    @classmethod
    def build(cls, schema: AttributeSchema, instants: int,
              nodes: Iterable[TemporalNode], edges: Iterable[TemporalEdge],
              directed: bool = False, labels: Optional[Sequence[str]] = None,
              allow_self_loops: bool = False, name: str = "") -> "TemporalGraph":
        if instants < 1:
            raise ContractError("time domain must contain at least one instant")
        if labels is not None and len(labels) != instants:
            raise SchemaError("time label count does not match domain size")
        full = (1 << instants) - 1

        node_map: Dict[NodeId, TemporalNode] = {}
        for n in nodes:
            if n.id in node_map:
                raise SchemaError(f"duplicate node id {n.id!r}")
            if n.mask == 0:
                raise DomainError(f"node {n.id!r}: empty validity")
            if n.mask & ~full:
                raise DomainError(f"node {n.id!r}: validity outside the time domain")
            cls._check_node_values(schema, n)
            node_map[n.id] = n

        edge_map: Dict[EdgeKey, TemporalEdge] = {}
        for e in edges:
            if e.source not in node_map:
                raise ReferentialError(f"edge references unknown node {e.source!r}")
            if e.target not in node_map:
                raise ReferentialError(f"edge references unknown node {e.target!r}")
            if e.source == e.target and not allow_self_loops:
                raise ContractError(f"self-loop on {e.source!r} not allowed")
            key = canonical_pair(e.source, e.target, directed)
            if key != e.key:
                e = TemporalEdge(key[0], key[1], e.mask)
            if key in edge_map:
                raise SchemaError(f"duplicate edge {key}")
            if e.mask == 0:
                raise DomainError(f"edge {key}: empty validity")
            if e.mask & ~full:
                raise DomainError(f"edge {key}: validity outside the time domain")
            joint = node_map[e.source].mask & node_map[e.target].mask
            if e.mask & ~joint:
                raise DomainError(
                    f"edge {key}: valid at instants where an endpoint is not")
            edge_map[key] = e

        return cls(schema, directed, instants,
                   node_map, edge_map,
                   tuple(labels) if labels is not None else None, name)

    @staticmethod
    def _check_node_values(schema: AttributeSchema, node: TemporalNode) -> None:
        declared = {a.name for a in schema.attributes}
        given = set(node.static_values) | set(node.varying_values)
        if given - declared:
            extra = sorted(given - declared)
            raise SchemaError(f"node {node.id!r}: undeclared attributes {extra}")
        for attr in schema.attributes:
            if attr.kind == STATIC:
                if attr.name not in node.static_values:
                    raise SchemaError(f"node {node.id!r}: missing value for {attr.name!r}")
                value = node.static_values[attr.name]
                if value not in attr.domain:
                    raise DomainError(
                        f"node {node.id!r}: value {value!r} outside domain of {attr.name!r}")
            else:
                series = node.varying_values.get(attr.name)
                if series is None:
                    raise SchemaError(f"node {node.id!r}: missing series for {attr.name!r}")
                if mask_from_points(series) != node.mask:
                    raise SchemaError(
                        f"node {node.id!r}: series for {attr.name!r} does not cover "
                        f"exactly the node's validity")
                for t, value in series.items():
                    if value not in attr.domain:
                        raise DomainError(
                            f"node {node.id!r}: value {value!r} at t={t} outside domain "
                            f"of {attr.name!r}")

    # -- checks ---------------------------------------------------------

    def check_instant(self, t: int) -> None:
        if not (isinstance(t, int) and 1 <= t <= self.instants):
            raise DomainError(f"time point {t} outside domain [1,{self.instants}]")

    def check_interval(self, iv: Interval) -> None:
        if iv.end > self.instants:
            raise DomainError(
                f"interval [{iv.start},{iv.end}] outside domain [1,{self.instants}]")

    # -- queries --------------------------------------------------------

    def snapshot(self, t: int) -> GraphView:
        """All nodes and edges valid at instant ``t``."""
        self.check_instant(t)
        bit = 1 << (t - 1)
        nodes = frozenset(nid for nid, n in self.nodes.items() if n.mask & bit)
        edges = frozenset(k for k, e in self.edges.items() if e.mask & bit)
        return GraphView(self, nodes, edges,
                         Provenance("snapshot", (Interval(t, t),)))

    def per_time_stats(self) -> List[Tuple[int, int, int]]:
        """(t, node count, edge count) for every instant, ascending."""
        rows = []
        for t in range(1, self.instants + 1):
            bit = 1 << (t - 1)
            nc = sum(1 for n in self.nodes.values() if n.mask & bit)
            ec = sum(1 for e in self.edges.values() if e.mask & bit)
            rows.append((t, nc, ec))
        return rows

    def node_combo_at(self, node_id: NodeId, attrs: Sequence[str], t: int) -> Optional[Combo]:
        """Values of ``attrs`` (schema order assumed) on a node at ``t``."""
        node = self.nodes[node_id]
        if not node.valid_at(t):
            return None
        return tuple(node.value_at(self.schema.attribute(a), t) for a in attrs)

    def iter_instants(self) -> Iterator[int]:
        return iter(range(1, self.instants + 1))
