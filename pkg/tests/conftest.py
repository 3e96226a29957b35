"""Shared fixtures: canonical small graphs and a random graph generator.

Graphs are first written down as plain dicts (the shape tests/oracle.py
consumes) and then built into engine objects, so brute-force and engine
routes always start from the same source description.
"""
from __future__ import annotations

import os
import random
from typing import Dict, List

import pytest

from tempograph import (Attribute, AttributeSchema, TemporalEdge,
                        TemporalGraph, TemporalNode, load_dataset,
                        mask_from_points)

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def graph_from_spec(spec: dict) -> TemporalGraph:
    schema = AttributeSchema(tuple(
        Attribute(name, kind, tuple(domain))
        for name, kind, domain in spec["attrs"]))
    nodes = [
        TemporalNode(nid, mask_from_points(d["valid"]),
                     dict(d["static"]),
                     {attr: dict(series) for attr, series in d["varying"].items()})
        for nid, d in spec["nodes"].items()
    ]
    edges = [TemporalEdge(u, v, mask_from_points(valid))
             for (u, v), valid in spec["edges"].items()]
    return TemporalGraph.build(schema, spec["instants"], nodes, edges,
                               directed=spec["directed"])


def fixture_a_spec() -> dict:
    return {
        "instants": 3,
        "directed": False,
        "attrs": [("gender", "static", ("f", "m"))],
        "nodes": {
            "u1": {"valid": {1, 2, 3}, "static": {"gender": "f"}, "varying": {}},
            "u2": {"valid": {1, 2}, "static": {"gender": "f"}, "varying": {}},
            "u3": {"valid": {1, 2, 3}, "static": {"gender": "m"}, "varying": {}},
            "u4": {"valid": {2, 3}, "static": {"gender": "m"}, "varying": {}},
        },
        "edges": {
            ("u1", "u2"): {1, 2},
            ("u1", "u3"): {2},
            ("u3", "u4"): {2, 3},
            ("u1", "u4"): {3},
        },
    }


def varying_spec() -> dict:
    """Small graph with a time-varying attribute for resolution-rule tests."""
    return {
        "instants": 4,
        "directed": False,
        "attrs": [("gender", "static", ("f", "m")),
                  ("grade", "time-varying", ("low", "high"))],
        "nodes": {
            "n1": {"valid": {1, 2, 3, 4}, "static": {"gender": "f"},
                   "varying": {"grade": {1: "low", 2: "low", 3: "high", 4: "high"}}},
            "n2": {"valid": {2, 3}, "static": {"gender": "m"},
                   "varying": {"grade": {2: "low", 3: "low"}}},
            "n3": {"valid": {1, 2, 4}, "static": {"gender": "f"},
                   "varying": {"grade": {1: "high", 2: "low", 4: "low"}}},
        },
        "edges": {
            ("n1", "n2"): {2, 3},
            ("n1", "n3"): {1, 2, 4},
            ("n2", "n3"): {2},
        },
    }


def fig2_spec() -> dict:
    """Three-instant graph where exactly two new f-m contacts appear at 3."""
    return {
        "instants": 3,
        "directed": False,
        "attrs": [("gender", "static", ("f", "m"))],
        "nodes": {
            "a1": {"valid": {1, 2, 3}, "static": {"gender": "f"}, "varying": {}},
            "a2": {"valid": {1, 2, 3}, "static": {"gender": "f"}, "varying": {}},
            "b1": {"valid": {1, 2, 3}, "static": {"gender": "m"}, "varying": {}},
            "b2": {"valid": {2, 3}, "static": {"gender": "m"}, "varying": {}},
        },
        "edges": {
            ("a1", "a2"): {2, 3},
            ("a1", "b1"): {3},
            ("a2", "b2"): {3},
            ("b1", "b2"): {2},
        },
    }


@pytest.fixture
def fixture_a() -> TemporalGraph:
    return graph_from_spec(fixture_a_spec())


@pytest.fixture
def varying_graph() -> TemporalGraph:
    return graph_from_spec(varying_spec())


@pytest.fixture
def fig2_graph() -> TemporalGraph:
    return graph_from_spec(fig2_spec())


@pytest.fixture(scope="session")
def school_graph() -> TemporalGraph:
    g, fmt = load_dataset(os.path.join(DATA_DIR, "primary_school"))
    assert fmt == "snapshot-tsv"
    return g


# -- random graph descriptions -----------------------------------------

def random_spec(rng: random.Random, max_instants: int = 8,
                max_nodes: int = 30, max_edge_instants: int = 120) -> dict:
    """Random well-formed description within the stated size bounds."""
    instants = rng.randint(2, max_instants)
    directed = rng.random() < 0.3
    attrs = [("color", "static", ("red", "blue"))]
    if rng.random() < 0.5:
        kind = "time-varying" if rng.random() < 0.6 else "static"
        attrs.append(("tone", kind, ("dark", "light")))
    n_nodes = rng.randint(2, max_nodes)
    nodes: Dict[str, dict] = {}
    for i in range(n_nodes):
        valid = {t for t in range(1, instants + 1) if rng.random() < 0.6}
        if not valid:
            valid = {rng.randint(1, instants)}
        static = {}
        varying: Dict[str, Dict[int, str]] = {}
        for name, akind, domain in attrs:
            if akind == "static":
                static[name] = rng.choice(domain)
            else:
                varying[name] = {t: rng.choice(domain) for t in sorted(valid)}
        nodes[f"n{i}"] = {"valid": valid, "static": static, "varying": varying}
    ids = sorted(nodes)
    edges: Dict[tuple, set] = {}
    budget = max_edge_instants
    for _ in range(rng.randint(0, 3 * n_nodes)):
        if budget <= 0:
            break
        u, v = rng.sample(ids, 2)
        if not directed and u > v:
            u, v = v, u
        if (u, v) in edges:
            continue
        joint = nodes[u]["valid"] & nodes[v]["valid"]
        if not joint:
            continue
        valid = {t for t in joint if rng.random() < 0.7}
        if not valid:
            valid = {rng.choice(sorted(joint))}
        if len(valid) > budget:
            valid = set(sorted(valid)[:budget])
        budget -= len(valid)
        edges[(u, v)] = valid
    return {"instants": instants, "directed": directed, "attrs": attrs,
            "nodes": nodes, "edges": edges}


def spec_combos(spec: dict) -> List[tuple]:
    """Every value combination over the full attribute selection."""
    combos = [()]
    for _, _, domain in spec["attrs"]:
        combos = [c + (v,) for c in combos for v in domain]
    return combos
