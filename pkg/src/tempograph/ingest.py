"""Dataset parsing, validation, and the canonical cache format.

Two source formats are supported.  ``snapshot-tsv`` datasets carry
pre-binned instants: a headered node table with the static attributes,
an edge file of ``src  dst  t`` rows, and optional companion files for
presence (``id  t``) and time-varying values (``id  t  attr  value``).
``contact-list`` datasets carry raw timestamped contacts ``t  i  j``
that are binned into instants by a declared bin width.

The cache is a self-describing JSON document with a magic version header
and a content digest; loading re-runs full graph validation, so a cache
never yields a partially valid graph.
"""
from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import (CacheIntegrityError, CacheVersionError, ContractError,
                     ParseError, ReferentialError, SchemaError)
from .graph import (STATIC, TIME_VARYING, Attribute, AttributeSchema,
                    TemporalEdge, TemporalGraph, TemporalNode, canonical_pair,
                    mask_from_points)

CACHE_MAGIC = "TEMPOGRAPH-CACHE v1"
FORMATS = ("snapshot-tsv", "contact-list")


@dataclass
class DatasetManifest:
    name: str
    directed: bool
    format: str
    schema: AttributeSchema
    nodes_path: str
    edges_path: str
    values_path: Optional[str] = None
    presence_path: Optional[str] = None
    bin_width: Optional[int] = None
    time_labels: Optional[List[str]] = None
    allow_self_loops: bool = False


def load_manifest(path: str) -> DatasetManifest:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"manifest {path}: {exc}")
    if not isinstance(raw, dict):
        raise ParseError(f"manifest {path}: expected a JSON object")
    return manifest_from_dict(raw, os.path.dirname(os.path.abspath(path)))


def manifest_from_dict(raw: dict, base_dir: str) -> DatasetManifest:
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        raise ContractError("manifest needs a non-empty name")
    fmt = raw.get("format")
    if fmt not in FORMATS:
        raise ContractError(f"manifest format must be one of {FORMATS}, got {fmt!r}")
    attrs = raw.get("attributes")
    if not isinstance(attrs, list) or not attrs:
        raise ContractError("manifest needs a non-empty attribute list")
    schema = AttributeSchema(tuple(
        Attribute(a.get("name", ""), a.get("kind", STATIC),
                  tuple(a.get("domain", ())))
        for a in attrs))
    files = raw.get("files")
    if not isinstance(files, dict) or "nodes" not in files or "edges" not in files:
        raise ContractError("manifest needs files.nodes and files.edges")

    def resolve(key: str) -> Optional[str]:
        rel = files.get(key)
        if rel is None:
            return None
        p = rel if os.path.isabs(rel) else os.path.join(base_dir, rel)
        if not os.path.exists(p):
            raise ContractError(f"manifest references missing file {rel!r}")
        return p

    labels = raw.get("time_labels")
    if labels is not None and (not isinstance(labels, list)
                               or not all(isinstance(x, str) for x in labels)):
        raise ContractError("time_labels must be a list of strings")
    bin_width = raw.get("bin_width")
    if bin_width is not None and (not isinstance(bin_width, int) or bin_width < 1):
        raise ContractError("bin_width must be a positive integer")
    return DatasetManifest(
        name=name,
        directed=bool(raw.get("directed", False)),
        format=fmt,
        schema=schema,
        nodes_path=resolve("nodes"),
        edges_path=resolve("edges"),
        values_path=resolve("values"),
        presence_path=resolve("presence"),
        bin_width=bin_width,
        time_labels=labels,
        allow_self_loops=bool(raw.get("allow_self_loops", False)),
    )


# -- row readers --------------------------------------------------------

def _rows(path: str, n_cols: int) -> Iterator[Tuple[int, List[str]]]:
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) != n_cols:
                raise ParseError(
                    f"expected {n_cols} tab-separated fields, got {len(cols)}",
                    line=lineno)
            yield lineno, cols


def _int_field(value: str, what: str, lineno: int, minimum: int = 1) -> int:
    try:
        n = int(value)
    except ValueError:
        raise ParseError(f"{what} {value!r} is not an integer", line=lineno)
    if n < minimum:
        raise ParseError(f"{what} {n} below {minimum}", line=lineno)
    return n


def _parse_node_table(path: str, schema: AttributeSchema) -> Dict[str, Dict[str, str]]:
    """Headered static-attribute table, one row per node."""
    static_names = [a.name for a in schema.attributes if a.kind == STATIC]
    expected = ["id"] + static_names
    statics: Dict[str, Dict[str, str]] = {}
    first = True
    for lineno, cols in _rows(path, len(expected)):
        if first:
            if cols != expected:
                raise ParseError(
                    f"node header {cols} does not match schema {expected}",
                    line=lineno)
            first = False
            continue
        nid = cols[0]
        if nid in statics:
            raise SchemaError(f"duplicate node id {nid!r} in node table")
        statics[nid] = dict(zip(static_names, cols[1:]))
    if first:
        raise ParseError("node table is empty, a header row is required", line=1)
    return statics


def _assemble(manifest: DatasetManifest, statics: Dict[str, Dict[str, str]],
              node_masks: Dict[str, int], edge_masks: Dict[Tuple[str, str], int],
              varying: Dict[str, Dict[str, Dict[int, str]]],
              instants: int) -> TemporalGraph:
    nodes = [TemporalNode(nid, node_masks.get(nid, 0), statics[nid],
                          varying.get(nid, {}))
             for nid in statics]
    edges = [TemporalEdge(u, v, m) for (u, v), m in edge_masks.items()]
    return TemporalGraph.build(
        manifest.schema, instants, nodes, edges,
        directed=manifest.directed, labels=manifest.time_labels,
        allow_self_loops=manifest.allow_self_loops, name=manifest.name)


def load_snapshot_tsv(manifest: DatasetManifest) -> TemporalGraph:
    """Pre-binned dataset; node validity derives from edge participation
    and, when given, an explicit presence file."""
    statics = _parse_node_table(manifest.nodes_path, manifest.schema)
    node_masks: Dict[str, int] = {}
    edge_masks: Dict[Tuple[str, str], int] = {}
    max_t = 0
    for lineno, (src, dst, t_raw) in _rows(manifest.edges_path, 3):
        t = _int_field(t_raw, "time point", lineno)
        max_t = max(max_t, t)
        bit = 1 << (t - 1)
        key = canonical_pair(src, dst, manifest.directed)
        edge_masks[key] = edge_masks.get(key, 0) | bit
        node_masks[src] = node_masks.get(src, 0) | bit
        node_masks[dst] = node_masks.get(dst, 0) | bit
    if manifest.presence_path:
        for lineno, (nid, t_raw) in _rows(manifest.presence_path, 2):
            if nid not in statics:
                raise ReferentialError(
                    f"presence row references unknown node {nid!r} (line {lineno})")
            t = _int_field(t_raw, "time point", lineno)
            max_t = max(max_t, t)
            node_masks[nid] = node_masks.get(nid, 0) | 1 << (t - 1)
    varying: Dict[str, Dict[str, Dict[int, str]]] = {}
    if manifest.values_path:
        for lineno, (nid, t_raw, attr, value) in _rows(manifest.values_path, 4):
            if nid not in statics:
                raise ReferentialError(
                    f"value row references unknown node {nid!r} (line {lineno})")
            if manifest.schema.attribute(attr).kind != TIME_VARYING:
                raise SchemaError(f"attribute {attr!r} is not time-varying")
            t = _int_field(t_raw, "time point", lineno)
            varying.setdefault(nid, {}).setdefault(attr, {})[t] = value
    instants = len(manifest.time_labels) if manifest.time_labels else max_t
    if instants == 0:
        raise ContractError("cannot determine the time domain: no edges, "
                            "presence rows, or time labels")
    return _assemble(manifest, statics, node_masks, edge_masks, varying, instants)


def load_contact_list(manifest: DatasetManifest) -> TemporalGraph:
    """Raw timestamped contacts, binned by the manifest's bin width."""
    if manifest.bin_width is None:
        raise ContractError("contact-list datasets need a bin_width")
    if manifest.values_path or manifest.presence_path:
        raise ContractError("contact-list datasets take only nodes and edges files")
    statics = _parse_node_table(manifest.nodes_path, manifest.schema)
    contacts: List[Tuple[int, str, str]] = []
    previous = None
    for lineno, (t_raw, i, j) in _rows(manifest.edges_path, 3):
        t = _int_field(t_raw, "timestamp", lineno, minimum=0)
        if previous is not None and t < previous:
            raise ParseError(f"timestamp {t} after {previous}: log must be "
                             f"sorted by time", line=lineno)
        previous = t
        contacts.append((t, i, j))
    node_masks: Dict[str, int] = {}
    edge_masks: Dict[Tuple[str, str], int] = {}
    instants = len(manifest.time_labels) if manifest.time_labels else 0
    if contacts:
        t_min = contacts[0][0]
        for t, i, j in contacts:
            instant = (t - t_min) // manifest.bin_width + 1
            instants = max(instants, instant)
            bit = 1 << (instant - 1)
            key = canonical_pair(i, j, manifest.directed)
            edge_masks[key] = edge_masks.get(key, 0) | bit
            node_masks[i] = node_masks.get(i, 0) | bit
            node_masks[j] = node_masks.get(j, 0) | bit
    if instants == 0:
        raise ContractError("cannot determine the time domain: no contacts "
                            "or time labels")
    return _assemble(manifest, statics, node_masks, edge_masks, {}, instants)


def load_dataset(path: str) -> Tuple[TemporalGraph, str]:
    """Load a dataset from a manifest file, dataset directory, or cache.

    Returns the graph and the source format tag.
    """
    if os.path.isdir(path):
        path = os.path.join(path, "manifest.json")
        if not os.path.exists(path):
            raise ContractError("dataset directory has no manifest.json")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            head = fh.read(512)
    except OSError as exc:
        raise ContractError(f"cannot read dataset {path}: {exc}")
    if CACHE_MAGIC in head:
        return load_cache(path), "cache"
    manifest = load_manifest(path)
    if manifest.format == "snapshot-tsv":
        return load_snapshot_tsv(manifest), manifest.format
    return load_contact_list(manifest), manifest.format


# -- cache --------------------------------------------------------------

def _canonical(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _graph_payload(g: TemporalGraph) -> dict:
    from .graph import points_from_mask

    return {
        "name": g.name,
        "directed": g.directed,
        "instants": g.instants,
        "labels": list(g.labels) if g.labels is not None else None,
        "attributes": [{"name": a.name, "kind": a.kind, "domain": list(a.domain)}
                       for a in g.schema.attributes],
        "nodes": [{
            "id": n.id,
            "validity": points_from_mask(n.mask),
            "static": dict(sorted(n.static_values.items())),
            "varying": {a: sorted([t, v] for t, v in series.items())
                        for a, series in sorted(n.varying_values.items())},
        } for n in (g.nodes[k] for k in sorted(g.nodes))],
        "edges": [{
            "source": e.source,
            "target": e.target,
            "validity": points_from_mask(e.mask),
        } for e in (g.edges[k] for k in sorted(g.edges))],
    }


def save_cache(g: TemporalGraph, path: str) -> None:
    payload = _graph_payload(g)
    doc = {
        "magic": CACHE_MAGIC,
        "sha256": hashlib.sha256(_canonical(payload).encode("utf-8")).hexdigest(),
        "payload": payload,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_cache(path: str) -> TemporalGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"cache {path}: {exc}")
    magic = doc.get("magic") if isinstance(doc, dict) else None
    if magic != CACHE_MAGIC:
        raise CacheVersionError(
            f"cache header {magic!r} is not {CACHE_MAGIC!r}")
    payload = doc.get("payload")
    digest = hashlib.sha256(_canonical(payload).encode("utf-8")).hexdigest()
    if digest != doc.get("sha256"):
        raise CacheIntegrityError("cache digest mismatch, refusing to load")
    schema = AttributeSchema(tuple(
        Attribute(a["name"], a["kind"], tuple(a["domain"]))
        for a in payload["attributes"]))
    nodes = [TemporalNode(
        n["id"], mask_from_points(n["validity"]), dict(n["static"]),
        {a: {t: v for t, v in series} for a, series in n["varying"].items()})
        for n in payload["nodes"]]
    edges = [TemporalEdge(e["source"], e["target"],
                          mask_from_points(e["validity"]))
             for e in payload["edges"]]
    return TemporalGraph.build(
        schema, payload["instants"], nodes, edges,
        directed=payload["directed"],
        labels=payload["labels"],
        allow_self_loops=True,
        name=payload["name"])
