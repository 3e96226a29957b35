"""Aggregation of views into weighted quotient graphs, and event counts."""
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from tempograph import (ContractError, Interval, SchemaError, aggregate,
                        event_count, event_graph, flatten, intersection)
from tempograph.aggregate import combo_pair, validated_combo

import oracle
from conftest import graph_from_spec, random_spec, spec_combos


class TestComboHandling:
    def test_combo_pair_unordered_for_undirected(self):
        assert combo_pair(("m",), ("f",), directed=False) == (("f",), ("m",))
        assert combo_pair(("m",), ("f",), directed=True) == (("m",), ("f",))

    def test_validated_combo_reorders_to_schema(self, varying_graph):
        combo = validated_combo(varying_graph, ["grade", "gender"],
                                ["low", "f"])
        assert combo == ("f", "low")

    def test_validated_combo_arity(self, fixture_a):
        with pytest.raises(ContractError):
            validated_combo(fixture_a, ["gender"], ["f", "m"])

    def test_validated_combo_domain(self, fixture_a):
        with pytest.raises(SchemaError):
            validated_combo(fixture_a, ["gender"], ["x"])


class TestSnapshotAggregation:
    def test_fixture_a_snapshot2_by_gender(self, fixture_a):
        agg = aggregate(fixture_a.snapshot(2), ["gender"])
        assert agg.nodes == {("f",): 2, ("m",): 2}
        assert agg.edges == {(("f",), ("f",)): 1,
                             (("f",), ("m",)): 1,
                             (("m",), ("m",)): 1}

    def test_zero_weights_omitted(self, fixture_a):
        agg = aggregate(fixture_a.snapshot(1), ["gender"])
        assert agg.nodes == {("f",): 2, ("m",): 1}
        assert agg.edges == {(("f",), ("f",)): 1}
        assert agg.edge_weight(("f",), ("m",)) == 0

    def test_intersection_aggregation(self, fixture_a):
        view = intersection(fixture_a, Interval(1, 1), Interval(2, 2))
        agg = aggregate(view, ["gender"])
        assert agg.nodes == {("f",): 2, ("m",): 1}
        assert agg.edges == {(("f",), ("f",)): 1}

    def test_modes_coincide_for_static_schema(self, fixture_a):
        view = fixture_a.snapshot(2)
        a = aggregate(view, ["gender"], "distinct")
        b = aggregate(view, ["gender"], "non-distinct")
        assert a.nodes == b.nodes and a.edges == b.edges

    def test_unknown_mode(self, fixture_a):
        with pytest.raises(ContractError):
            aggregate(fixture_a.snapshot(2), ["gender"], "fancy")

    def test_edgeless_view_keeps_node_weights(self, fixture_a):
        view = event_graph(fixture_a, "stability", 3, Interval(1, 2), "strict")
        agg = aggregate(view, ["gender"])
        assert agg.nodes == {("f",): 1, ("m",): 1}
        assert agg.edges == {}

    def test_empty_view_empty_aggregate(self, fixture_a):
        # nothing disappears between 1 and 2, so this shrinkage view is empty
        view = event_graph(fixture_a, "shrinkage", 2, Interval(1, 1), "loose")
        assert not view.nodes and not view.edges
        agg = aggregate(view, ["gender"])
        assert agg.nodes == {} and agg.edges == {}


class TestVaryingResolution:
    """Time-varying values resolve against the view's provenance."""

    def test_windowed_view_collects_every_exhibited_combo(self, varying_graph):
        # n1 is low at 1-2 and high at 3-4, so a loose flatten over the whole
        # domain sees both combinations of n1 once each.
        view = flatten(varying_graph, Interval(1, 4), "loose")
        agg = aggregate(view, ["grade"])
        assert agg.nodes == {("low",): 3, ("high",): 2}

    def test_edge_combos_walk_edge_validity_only(self, varying_graph):
        # (n1, n3) exhibits (high, low) at both 1 and 4 but counts once;
        # (n1, n2) adds a second (high, low) at 3.  All three edges pass
        # through (low, low) at instant 2.
        view = flatten(varying_graph, Interval(1, 4), "loose")
        agg = aggregate(view, ["grade"])
        assert agg.edges[(("high",), ("low",))] == 2
        assert agg.edges[(("low",), ("low",))] == 3

    def test_event_view_resolves_at_reference(self, varying_graph):
        view = event_graph(varying_graph, "stability", 3, Interval(2, 2),
                           "strict")
        agg = aggregate(view, ["gender", "grade"])
        # only (n1, n2) survives; n1 is high at 3, n2 low at 3
        assert agg.edges == {((("f", "high")), ("m", "low")): 1}

    def test_event_view_falls_back_into_window(self, varying_graph):
        # n3 is not valid at the reference 3; shrinkage resolves it at its
        # latest valid instant inside the window, instant 2, as low.
        view = event_graph(varying_graph, "shrinkage", 3, Interval(1, 2),
                           "loose")
        agg = aggregate(view, ["grade"])
        assert agg.node_weight(("low",)) >= 1
        _, edge_w = oracle.aggregate_event(varying_spec_dict(), "shrinkage",
                                           3, 1, 2, "loose", ["grade"])
        got = {k: v for k, v in agg.edges.items()}
        assert got == edge_w


def varying_spec_dict():
    from conftest import varying_spec
    return varying_spec()


class TestEventCount:
    def test_growth_count_fig2(self, fig2_graph):
        # two new f-m contacts appear at 3 relative to [2]
        assert event_count(fig2_graph, "growth", 3, Interval(2, 2), "loose",
                           ["gender"], ["f"], ["m"]) == 2

    def test_growth_count_fixture_a(self, fixture_a):
        assert event_count(fixture_a, "growth", 3, Interval(2, 2), "loose",
                           ["gender"], ["f"], ["m"]) == 1

    def test_stability_zero(self, fixture_a):
        assert event_count(fixture_a, "stability", 3, Interval(1, 2), "strict",
                           ["gender"], ["f"], ["f"]) == 0

    def test_symmetric_for_undirected(self, fixture_a):
        a = event_count(fixture_a, "growth", 3, Interval(2, 2), "loose",
                        ["gender"], ["f"], ["m"])
        b = event_count(fixture_a, "growth", 3, Interval(2, 2), "loose",
                        ["gender"], ["m"], ["f"])
        assert a == b == 1


# -- properties over random graphs --------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_event_aggregation_matches_brute_force(seed):
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    t_r = spec["instants"]
    for kind in ("stability", "growth", "shrinkage"):
        for semantics in ("strict", "loose"):
            view = event_graph(g, kind, t_r, Interval(1, t_r - 1), semantics)
            agg = aggregate(view, attrs)
            node_w, edge_w = oracle.aggregate_event(
                spec, kind, t_r, 1, t_r - 1, semantics, attrs)
            assert agg.nodes == node_w, (kind, semantics)
            assert agg.edges == edge_w, (kind, semantics)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_flatten_aggregation_matches_brute_force(seed):
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    b = spec["instants"]
    view = flatten(g, Interval(1, b), "loose")
    agg = aggregate(view, attrs)
    node_w, edge_w = oracle.aggregate_view(
        spec, view.nodes, view.edges, set(range(1, b + 1)), attrs)
    assert agg.nodes == node_w
    assert agg.edges == edge_w


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_modes_always_coincide(seed):
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    view = flatten(g, Interval(1, spec["instants"]), "loose")
    a = aggregate(view, attrs, "distinct")
    b = aggregate(view, attrs, "non-distinct")
    assert a.nodes == b.nodes and a.edges == b.edges


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_edge_weights_partition_event_edges(seed):
    """Each event edge lands in exactly one combination pair, provided both
    endpoints resolve (they always do for event views: every retained
    element is valid at the reference or inside the window)."""
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    t_r = spec["instants"]
    for kind in ("stability", "growth", "shrinkage"):
        view = event_graph(g, kind, t_r, Interval(1, t_r - 1), "loose")
        agg = aggregate(view, attrs)
        assert sum(agg.edges.values()) == len(view.edges), kind


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_event_count_agrees_with_oracle_per_combo(seed):
    spec = random_spec(random.Random(seed), max_nodes=8)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    t_r = spec["instants"]
    combos = spec_combos(spec)
    for c in combos[:3]:
        for cp in combos[:3]:
            got = event_count(g, "growth", t_r, Interval(1, t_r - 1), "loose",
                              attrs, list(c), list(cp))
            want = oracle.event_count(spec, "growth", t_r, 1, t_r - 1,
                                      "loose", attrs, c, cp)
            assert got == want, (c, cp)
