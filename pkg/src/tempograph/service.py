"""HTTP facade over the library for the web explorer and external clients.

The server holds a registry of immutable datasets; uploads register new
ones atomically.  Every error response carries a stable ``code`` from the
error hierarchy so clients can branch without parsing messages.
"""
from __future__ import annotations

import json
import os
import tempfile
import threading
from typing import Dict, List, Optional, Tuple

from fastapi import FastAPI, File, Request, UploadFile
from fastapi.encoders import jsonable_encoder
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import payloads
from .errors import ContractError, NotFoundError, TempographError
from .graph import TemporalGraph
from .ingest import load_dataset, manifest_from_dict, load_snapshot_tsv, load_contact_list
from .overview import DEFAULT_SAMPLE_LIMIT


class DatasetRegistry:
    """Name-keyed dataset store; registration is atomic under a lock."""

    def __init__(self, sample_limit: int = DEFAULT_SAMPLE_LIMIT):
        self._lock = threading.Lock()
        self._datasets: Dict[str, Tuple[TemporalGraph, str]] = {}
        self.sample_limit = sample_limit

    def add(self, g: TemporalGraph, fmt: str) -> str:
        if not g.name:
            raise ContractError("datasets must be named")
        with self._lock:
            if g.name in self._datasets:
                raise ContractError(f"dataset {g.name!r} already registered")
            self._datasets[g.name] = (g, fmt)
        return g.name

    def get(self, name: str) -> TemporalGraph:
        with self._lock:
            entry = self._datasets.get(name)
        if entry is None:
            raise NotFoundError(f"no dataset named {name!r}")
        return entry[0]

    def descriptors(self) -> List[dict]:
        with self._lock:
            entries = list(self._datasets.values())
        return [payloads.dataset_descriptor(g, fmt) for g, fmt in entries]

    def preload_directory(self, root: str) -> List[str]:
        """Register every dataset directory (manifest.json) or cache under root."""
        added = []
        for entry in sorted(os.listdir(root)):
            path = os.path.join(root, entry)
            if os.path.isdir(path) and os.path.exists(os.path.join(path, "manifest.json")):
                g, fmt = load_dataset(path)
            elif entry.endswith(".json") and not os.path.isdir(path):
                g, fmt = load_dataset(path)
            else:
                continue
            added.append(self.add(g, fmt))
        return added


class AggregateRequest(BaseModel):
    operator: str
    intervals: List[List[int]]
    attributes: List[str]
    mode: str = "distinct"
    semantics: Optional[str] = None


class SkylineRequest(BaseModel):
    event: str
    semantics: Optional[str] = None
    attributes: List[str]
    source_combo: List[str]
    target_combo: List[str]
    top_k: int = 10


class ThresholdRequest(BaseModel):
    event: str
    semantics: Optional[str] = None
    attributes: List[str]
    source_combo: List[str]
    target_combo: List[str]
    k: int


def create_app(registry: Optional[DatasetRegistry] = None) -> FastAPI:
    registry = registry or DatasetRegistry()
    app = FastAPI(title="tempograph", docs_url=None, redoc_url=None)
    app.state.registry = registry
    # the browser client is served from elsewhere (any static host)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(TempographError)
    def _on_domain_error(request: Request, exc: TempographError):
        status = 404 if isinstance(exc, NotFoundError) else 400
        return JSONResponse(status_code=status,
                            content={"code": exc.code, "message": str(exc)})

    @app.exception_handler(RequestValidationError)
    def _on_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400,
                            content={"code": "contract_error",
                                     "message": "invalid request body",
                                     "detail": jsonable_encoder(exc.errors())})

    @app.get("/api/datasets")
    def list_datasets():
        return registry.descriptors()

    @app.post("/api/datasets")
    def upload_dataset(manifest: UploadFile = File(...),
                       nodes: UploadFile = File(...),
                       edges: UploadFile = File(...),
                       values: Optional[UploadFile] = File(None),
                       presence: Optional[UploadFile] = File(None)):
        try:
            raw = json.loads(manifest.file.read().decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ContractError(f"manifest is not valid JSON: {exc}")
        if not isinstance(raw, dict):
            raise ContractError("manifest must be a JSON object")
        with tempfile.TemporaryDirectory() as tmp:
            files = {"nodes": nodes, "edges": edges}
            if values is not None:
                files["values"] = values
            if presence is not None:
                files["presence"] = presence
            raw["files"] = {}
            for key, upload in files.items():
                path = os.path.join(tmp, key)
                with open(path, "wb") as fh:
                    fh.write(upload.file.read())
                raw["files"][key] = path
            m = manifest_from_dict(raw, tmp)
            if m.format == "snapshot-tsv":
                g = load_snapshot_tsv(m)
            else:
                g = load_contact_list(m)
        return {"id": registry.add(g, m.format)}

    @app.get("/api/{dataset}/stats")
    def stats(dataset: str):
        return payloads.stats_payload(registry.get(dataset))

    @app.get("/api/{dataset}/overview")
    def dataset_overview(dataset: str, t: int, attr: str,
                         limit: Optional[int] = None, seed: int = 0):
        g = registry.get(dataset)
        effective = registry.sample_limit if limit is None else limit
        return payloads.overview_payload(g, t, attr, effective, seed)

    @app.post("/api/{dataset}/aggregate")
    def aggregate(dataset: str, body: AggregateRequest):
        g = registry.get(dataset)
        return payloads.aggregate_payload(g, body.operator, body.intervals,
                                          body.attributes, body.mode,
                                          body.semantics)

    @app.post("/api/{dataset}/explore/skyline")
    def explore_skyline(dataset: str, body: SkylineRequest):
        g = registry.get(dataset)
        return payloads.skyline_payload(g, body.event, body.semantics,
                                        body.attributes, body.source_combo,
                                        body.target_combo, body.top_k)

    @app.post("/api/{dataset}/explore/threshold")
    def explore_threshold(dataset: str, body: ThresholdRequest):
        g = registry.get(dataset)
        return payloads.threshold_payload(g, body.event, body.semantics,
                                          body.attributes, body.source_combo,
                                          body.target_combo, body.k)

    return app


def serve(host: str, port: int, preload: Optional[str],
          sample_limit: int = DEFAULT_SAMPLE_LIMIT) -> None:
    import uvicorn

    registry = DatasetRegistry(sample_limit)
    if preload:
        registry.preload_directory(preload)
    uvicorn.run(create_app(registry), host=host, port=port)
