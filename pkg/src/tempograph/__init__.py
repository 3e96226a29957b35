"""Exploration engine for interval-based temporal attributed graphs.

The library models graphs whose nodes, edges, and attribute values live
on a discrete 1-based time domain, and layers on top of them temporal
operators, event graphs (stability, growth, shrinkage), attribute
aggregation into weighted quotient graphs, and two exploration modes:
evolution skylines ranked by domination degree and threshold search.
"""
from __future__ import annotations

from .aggregate import (AggregateGraph, DISTINCT, NON_DISTINCT, aggregate,
                        event_count)
from .errors import (CacheIntegrityError, CacheVersionError, ContractError,
                     DomainError, NotFoundError, ParseError, ReferentialError,
                     SchemaError, TempographError)
from .explore import (Candidate, SkylineResult, ThresholdResult, dominates,
                      enumerate_candidates, monotonicity_for, skyline,
                      threshold_search)
from .graph import (Attribute, AttributeSchema, GraphView, Interval,
                    Provenance, TemporalEdge, TemporalGraph, TemporalNode,
                    canonical_pair, mask_from_points, points_from_mask)
from .ingest import (DatasetManifest, load_cache, load_contact_list,
                     load_dataset, load_manifest, load_snapshot_tsv,
                     save_cache)
from .ops import (LOOSE, STRICT, difference, event_graph, evolution, flatten,
                  intersection, project, union)
from .oracle import naive_enumerate, naive_skyline, naive_threshold_search
from .overview import (OverviewPayload, max_connected_component, overview,
                       snowball_sample)

__version__ = "0.1.0"
