"""Command-line driver mirroring the HTTP API for scripting and tests.

JSON output reuses the API response shapes verbatim; TSV output flattens
them into typed rows with combinations joined by ``|``.  Exit codes:
0 success, 1 failed operation, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Tuple

from . import payloads
from .errors import TempographError
from .ingest import (load_contact_list, load_dataset, load_manifest,
                     load_snapshot_tsv, save_cache)
from .overview import DEFAULT_SAMPLE_LIMIT


def _interval_arg(text: str) -> List[int]:
    parts = text.split(":")
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"interval {text!r} is not start:end")
    try:
        return [int(parts[0]), int(parts[1])]
    except ValueError:
        raise argparse.ArgumentTypeError(f"interval {text!r} is not numeric")


def _intervals_arg(text: str) -> List[List[int]]:
    return [_interval_arg(part) for part in text.split(",") if part != ""]


def _attrs_arg(text: str) -> List[str]:
    names = [a for a in text.split(",") if a]
    if not names:
        raise argparse.ArgumentTypeError("attribute list is empty")
    return names


def _combo_arg(text: str) -> Tuple[List[str], List[str]]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"combo {text!r} must be 'source,target' with values joined by |")
    return parts[0].split("|"), parts[1].split("|")


def _load(args) -> "TemporalGraph":
    g, _ = load_dataset(args.data)
    return g


# -- runners ------------------------------------------------------------

def _run_ingest(args):
    manifest = load_manifest(args.manifest)
    if manifest.format == "snapshot-tsv":
        g = load_snapshot_tsv(manifest)
    else:
        g = load_contact_list(manifest)
    if args.out:
        save_cache(g, args.out)
    payload = payloads.dataset_descriptor(g, manifest.format)
    if args.out:
        payload["cache"] = args.out
    return payload


def _run_stats(args):
    return payloads.stats_payload(_load(args))


def _run_overview(args):
    return payloads.overview_payload(_load(args), args.t, args.attr,
                                     args.limit, args.seed)


def _run_aggregate(args):
    return payloads.aggregate_payload(_load(args), args.operator,
                                      args.intervals, args.attrs, args.mode,
                                      args.semantics)


def _run_skyline(args):
    source, target = args.combo
    return payloads.skyline_payload(_load(args), args.event, args.semantics,
                                    args.attrs, source, target, args.top_k)


def _run_threshold(args):
    source, target = args.combo
    return payloads.threshold_payload(_load(args), args.event, args.semantics,
                                      args.attrs, source, target, args.k)


def _run_serve(args):
    from .service import serve

    serve(args.host, args.port, args.preload, args.sample_limit)
    return None


# -- output -------------------------------------------------------------

def _aggregate_rows(doc: dict, prefix: List[str]) -> List[List[str]]:
    rows = []
    for n in doc["nodes"]:
        rows.append(prefix + ["node", "|".join(n["combo"]), str(n["weight"])])
    for e in doc["edges"]:
        rows.append(prefix + ["edge", "|".join(e["source"]),
                              "|".join(e["target"]), str(e["weight"])])
    return rows


def _candidate_rows(items: List[dict], tag: str) -> List[List[str]]:
    rows = []
    for c in items:
        row = [tag, str(c["t_r"]), str(c["interval"][0]),
               str(c["interval"][1]), str(c["count"])]
        if "dod" in c:
            row.append(str(c["dod"]))
        rows.append(row)
    return rows


def _to_tsv(payload) -> List[List[str]]:
    if isinstance(payload, list):   # per-instant stats
        return [[str(r["t"]), str(r["nodes"]), str(r["edges"])] for r in payload]
    if "stats" in payload and "nodes" in payload:   # overview
        rows = [["node", n["id"], n["value"]] for n in payload["nodes"]]
        rows += [["edge", u, v] for u, v in payload["edges"]]
        rows.append(["stats", str(payload["stats"]["nodes"]),
                     str(payload["stats"]["values"])])
        return rows
    if "stability" in payload:      # evolution triple
        rows = []
        for kind in ("stability", "growth", "shrinkage"):
            rows += _aggregate_rows(payload[kind], [kind])
        return rows
    if "skyline" in payload:
        return (_candidate_rows(payload["skyline"], "skyline")
                + _candidate_rows(payload["top_k"], "top_k"))
    if "hits" in payload:
        return _candidate_rows(payload["hits"], "hit")
    if "edges" in payload and "nodes" in payload and isinstance(payload["nodes"], list) \
            and payload["nodes"] and "combo" in payload["nodes"][0]:
        return _aggregate_rows(payload, [])
    if "id" in payload:             # ingest summary
        keys = ["id", "format", "instants", "nodes", "edges"]
        rows = [[k, str(payload[k])] for k in keys]
        if "cache" in payload:
            rows.append(["cache", payload["cache"]])
        return rows
    # aggregate result with no realized combinations, or anything else
    if "edges" in payload and "nodes" in payload:
        return _aggregate_rows(payload, [])
    return [[json.dumps(payload)]]


def _emit(payload, fmt: str) -> None:
    if payload is None:
        return
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for row in _to_tsv(payload):
            print("\t".join(row))


# -- parser -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tempograph",
        description="Explore temporal attributed graphs: snapshots, event "
                    "graphs, aggregation, skyline and threshold search.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "tsv"), default="json",
                        help="output format (default json)")
    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("--data", required=True,
                      help="dataset: manifest file, dataset directory, or cache")

    p = sub.add_parser("ingest", parents=[common],
                       help="parse and validate a dataset, optionally cache it")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", help="write a validated cache file here")
    p.set_defaults(run=_run_ingest)

    p = sub.add_parser("stats", parents=[common, data],
                       help="per-instant node and edge counts")
    p.set_defaults(run=_run_stats)

    p = sub.add_parser("overview", parents=[common, data],
                       help="snapshot overview: largest component, one "
                            "attribute value per node")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--attr", required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_SAMPLE_LIMIT)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=_run_overview)

    p = sub.add_parser("aggregate", parents=[common, data],
                       help="aggregate an operator result by attributes")
    p.add_argument("--operator", required=True, choices=payloads.OPERATORS)
    p.add_argument("--intervals", type=_intervals_arg, required=True,
                   metavar="A:B[,C:D]")
    p.add_argument("--attrs", type=_attrs_arg, required=True, metavar="NAME[,NAME]")
    p.add_argument("--mode", choices=("distinct", "non-distinct"),
                   default="distinct")
    p.add_argument("--semantics", choices=("strict", "loose"))
    p.set_defaults(run=_run_aggregate)

    explore = sub.add_parser("explore", help="skyline and threshold search")
    esub = explore.add_subparsers(dest="explore_command", required=True)

    def explore_common(q):
        q.add_argument("--event", required=True,
                       choices=("stability", "growth", "shrinkage"))
        q.add_argument("--semantics", choices=("strict", "loose"),
                       help="defaults to strict for stability, loose otherwise")
        q.add_argument("--attrs", type=_attrs_arg, required=True)
        q.add_argument("--combo", type=_combo_arg, required=True,
                       metavar="SRC,TGT",
                       help="source and target combinations, values joined by |")

    p = esub.add_parser("skyline", parents=[common, data],
                        help="evolution skyline with domination degrees")
    explore_common(p)
    p.add_argument("--top-k", type=int, default=10, dest="top_k")
    p.set_defaults(run=_run_skyline)

    p = esub.add_parser("threshold", parents=[common, data],
                        help="per reference point, the extremal window with "
                            "at least k events")
    explore_common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(run=_run_threshold)

    p = sub.add_parser("serve", parents=[common],
                       help="run the HTTP service")
    p.add_argument("--host", default=os.environ.get("TEMPOGRAPH_HOST", "127.0.0.1"))
    p.add_argument("--port", type=int,
                   default=int(os.environ.get("TEMPOGRAPH_PORT", "8000")))
    p.add_argument("--preload",
                   default=os.environ.get("TEMPOGRAPH_PRELOAD"),
                   help="directory of dataset directories or caches to register")
    p.add_argument("--sample-limit", type=int, dest="sample_limit",
                   default=int(os.environ.get("TEMPOGRAPH_SAMPLE_LIMIT",
                                              str(DEFAULT_SAMPLE_LIMIT))))
    p.set_defaults(run=_run_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.run(args)
    except TempographError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
