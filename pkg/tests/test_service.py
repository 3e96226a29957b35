"""HTTP endpoints: shapes, status codes, upload flow, determinism."""
from __future__ import annotations

import os

import pytest
from fastapi.testclient import TestClient

from tempograph import load_dataset
from tempograph.service import DatasetRegistry, create_app

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
FIXTURE_DIR = os.path.join(DATA_DIR, "fixture_a")


@pytest.fixture()
def client():
    registry = DatasetRegistry()
    registry.add(*load_dataset(FIXTURE_DIR))
    return TestClient(create_app(registry))


class TestDatasets:
    def test_listing(self, client):
        body = client.get("/api/datasets").json()
        assert len(body) == 1
        d = body[0]
        assert d["id"] == "fixture-a"
        assert d["instants"] == 3
        assert d["nodes"] == 4 and d["edges"] == 4
        assert d["attributes"] == [
            {"name": "gender", "kind": "static", "domain": ["f", "m"]}]

    def test_upload_and_query(self, client):
        def fh(name):
            return open(os.path.join(FIXTURE_DIR, name), "rb")

        manifest = (b'{"name": "uploaded", "format": "snapshot-tsv", '
                    b'"attributes": [{"name": "gender", "kind": "static", '
                    b'"domain": ["f", "m"]}]}')
        with fh("nodes.tsv") as nodes, fh("edges.tsv") as edges, \
                fh("presence.tsv") as presence:
            resp = client.post("/api/datasets", files={
                "manifest": ("manifest.json", manifest, "application/json"),
                "nodes": ("nodes.tsv", nodes, "text/tab-separated-values"),
                "edges": ("edges.tsv", edges, "text/tab-separated-values"),
                "presence": ("presence.tsv", presence,
                             "text/tab-separated-values"),
            })
        assert resp.status_code == 200
        assert resp.json() == {"id": "uploaded"}
        stats = client.get("/api/uploaded/stats").json()
        assert stats == client.get("/api/fixture-a/stats").json()

    def test_duplicate_upload_name(self, client):
        def fh(name):
            return open(os.path.join(FIXTURE_DIR, name), "rb")

        manifest = (b'{"name": "fixture-a", "format": "snapshot-tsv", '
                    b'"attributes": [{"name": "gender", "kind": "static", '
                    b'"domain": ["f", "m"]}]}')
        with fh("nodes.tsv") as nodes, fh("edges.tsv") as edges, \
                fh("presence.tsv") as presence:
            resp = client.post("/api/datasets", files={
                "manifest": ("manifest.json", manifest, "application/json"),
                "nodes": ("nodes.tsv", nodes, "text/plain"),
                "edges": ("edges.tsv", edges, "text/plain"),
                "presence": ("presence.tsv", presence, "text/plain"),
            })
        assert resp.status_code == 400
        assert resp.json()["code"] == "contract_error"


class TestStats:
    def test_rows(self, client):
        assert client.get("/api/fixture-a/stats").json() == [
            {"t": 1, "nodes": 3, "edges": 1},
            {"t": 2, "nodes": 4, "edges": 3},
            {"t": 3, "nodes": 3, "edges": 2},
        ]

    def test_unknown_dataset(self, client):
        resp = client.get("/api/nope/stats")
        assert resp.status_code == 404
        assert resp.json()["code"] == "not_found"


class TestOverview:
    def test_payload_shape(self, client):
        body = client.get("/api/fixture-a/overview",
                          params={"t": 1, "attr": "gender"}).json()
        assert body == {
            "nodes": [{"id": "u1", "value": "f"}, {"id": "u2", "value": "f"}],
            "edges": [["u1", "u2"]],
            "stats": {"nodes": 2, "values": 1},
        }

    def test_bad_instant(self, client):
        resp = client.get("/api/fixture-a/overview",
                          params={"t": 12, "attr": "gender"})
        assert resp.status_code == 400
        assert resp.json()["code"] == "domain_error"


class TestAggregate:
    def test_project(self, client):
        body = client.post("/api/fixture-a/aggregate", json={
            "operator": "project", "intervals": [[2, 2]],
            "attributes": ["gender"]}).json()
        assert body == {
            "nodes": [{"combo": ["f"], "weight": 2},
                      {"combo": ["m"], "weight": 2}],
            "edges": [
                {"source": ["f"], "target": ["f"], "weight": 1},
                {"source": ["f"], "target": ["m"], "weight": 1},
                {"source": ["m"], "target": ["m"], "weight": 1},
            ],
        }

    def test_difference(self, client):
        body = client.post("/api/fixture-a/aggregate", json={
            "operator": "difference", "intervals": [[2, 2], [1, 1]],
            "attributes": ["gender"]}).json()
        weights = {(tuple(e["source"]), tuple(e["target"])): e["weight"]
                   for e in body["edges"]}
        assert weights == {(("f",), ("m",)): 1, (("m",), ("m",)): 1}

    def test_growth_event(self, client):
        body = client.post("/api/fixture-a/aggregate", json={
            "operator": "growth", "intervals": [[2, 2], [3, 3]],
            "attributes": ["gender"]}).json()
        assert body["edges"] == [
            {"source": ["f"], "target": ["m"], "weight": 1}]

    def test_evolution_triple(self, client):
        body = client.post("/api/fixture-a/aggregate", json={
            "operator": "evolution", "intervals": [[2, 2], [3, 3]],
            "attributes": ["gender"]}).json()
        assert set(body) == {"stability", "growth", "shrinkage"}
        assert body["growth"]["edges"] == [
            {"source": ["f"], "target": ["m"], "weight": 1}]
        stability = {(tuple(e["source"]), tuple(e["target"])): e["weight"]
                     for e in body["stability"]["edges"]}
        assert stability == {(("m",), ("m",)): 1}

    def test_unknown_operator(self, client):
        resp = client.post("/api/fixture-a/aggregate", json={
            "operator": "teleport", "intervals": [[1, 1]],
            "attributes": ["gender"]})
        assert resp.status_code == 400
        assert resp.json()["code"] == "contract_error"

    def test_bad_interval_shape(self, client):
        resp = client.post("/api/fixture-a/aggregate", json={
            "operator": "project", "intervals": [[1, 2, 3]],
            "attributes": ["gender"]})
        assert resp.status_code == 400
        assert resp.json()["code"] == "contract_error"

    def test_invalid_combo_value(self, client):
        resp = client.post("/api/fixture-a/explore/skyline", json={
            "event": "stability", "attributes": ["gender"],
            "source_combo": ["x"], "target_combo": ["m"], "top_k": 3})
        assert resp.status_code == 400
        assert resp.json()["code"] == "schema_error"


class TestExplore:
    def test_skyline(self, client):
        body = client.post("/api/fixture-a/explore/skyline", json={
            "event": "stability", "semantics": "strict",
            "attributes": ["gender"], "source_combo": ["m"],
            "target_combo": ["m"], "top_k": 3}).json()
        assert body == {
            "skyline": [{"t_r": 3, "interval": [2, 2], "count": 1, "dod": 0}],
            "top_k": [{"t_r": 3, "interval": [2, 2], "count": 1, "dod": 0}],
        }

    def test_threshold(self, client):
        body = client.post("/api/fixture-a/explore/threshold", json={
            "event": "stability", "semantics": "strict",
            "attributes": ["gender"], "source_combo": ["f"],
            "target_combo": ["f"], "k": 1}).json()
        assert body == {
            "hits": [{"t_r": 2, "interval": [1, 1], "count": 1}]}

    def test_zero_threshold(self, client):
        resp = client.post("/api/fixture-a/explore/threshold", json={
            "event": "stability", "attributes": ["gender"],
            "source_combo": ["f"], "target_combo": ["f"], "k": 0})
        assert resp.status_code == 400
        assert resp.json()["code"] == "contract_error"

    def test_missing_field(self, client):
        resp = client.post("/api/fixture-a/explore/threshold", json={
            "event": "stability", "attributes": ["gender"],
            "source_combo": ["f"], "target_combo": ["f"]})
        assert resp.status_code == 400
        body = resp.json()
        assert body["code"] == "contract_error"
        assert "detail" in body

    def test_repeat_is_byte_identical(self, client):
        payload = {"event": "stability", "semantics": "strict",
                   "attributes": ["gender"], "source_combo": ["m"],
                   "target_combo": ["m"], "top_k": 3}
        first = client.post("/api/fixture-a/explore/skyline", json=payload)
        second = client.post("/api/fixture-a/explore/skyline", json=payload)
        assert first.content == second.content
