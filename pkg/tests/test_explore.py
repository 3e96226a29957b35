"""Exploration: candidate counts, domination, skylines, threshold search."""
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from tempograph import (Candidate, ContractError, Interval, SchemaError,
                        dominates, enumerate_candidates, monotonicity_for,
                        naive_enumerate, naive_skyline, naive_threshold_search,
                        skyline, threshold_search)
from tempograph.explore import candidate_chains

import oracle
from conftest import graph_from_spec, random_spec, spec_combos

EVENT_PAIRS = [(kind, semantics)
               for kind in ("stability", "growth", "shrinkage")
               for semantics in ("strict", "loose")]


class TestMonotonicity:
    @pytest.mark.parametrize("kind,semantics,expected", [
        ("stability", "strict", "non-increasing"),
        ("stability", "loose", "non-decreasing"),
        ("growth", "strict", "non-decreasing"),
        ("growth", "loose", "non-increasing"),
        ("shrinkage", "strict", "non-increasing"),
        ("shrinkage", "loose", "non-decreasing"),
    ])
    def test_direction_table(self, kind, semantics, expected):
        assert monotonicity_for(kind, semantics) == expected

    def test_unknown_combination(self):
        with pytest.raises(ContractError):
            monotonicity_for("stability", "wobbly")


class TestCandidates:
    def test_fixture_a_mm_stability(self, fixture_a):
        cands = enumerate_candidates(fixture_a, "stability", "strict",
                                     ["gender"], ["m"], ["m"])
        assert [(c.reference, (c.window.start, c.window.end), c.count)
                for c in cands] == [(3, (2, 2), 1)]

    def test_zero_counts_are_excluded(self, fixture_a):
        cands = enumerate_candidates(fixture_a, "stability", "strict",
                                     ["gender"], ["m"], ["m"])
        windows = {(c.reference, c.window.start) for c in cands}
        assert (2, 1) not in windows and (3, 1) not in windows

    def test_chains_include_zeros(self, fixture_a):
        chains = candidate_chains(fixture_a, "stability", "strict",
                                  ["gender"], ["m"], ["m"])
        assert chains == {2: [0], 3: [0, 1]}

    def test_needs_two_instants(self):
        g = graph_from_spec({
            "instants": 1, "directed": False,
            "attrs": [("gender", "static", ("f", "m"))],
            "nodes": {"u": {"valid": {1}, "static": {"gender": "f"},
                            "varying": {}}},
            "edges": {},
        })
        with pytest.raises(ContractError):
            enumerate_candidates(g, "stability", "strict",
                                 ["gender"], ["f"], ["f"])

    def test_bad_combo_value(self, fixture_a):
        with pytest.raises(SchemaError):
            enumerate_candidates(fixture_a, "stability", "strict",
                                 ["gender"], ["zz"], ["m"])


class TestDominates:
    def test_equal_length_greater_count(self):
        a = Candidate(3, Interval(2, 2), 1)
        b = Candidate(2, Interval(1, 1), 0)
        assert dominates(a, b, "non-increasing")
        assert not dominates(b, a, "non-increasing")

    def test_identical_points_never_dominate(self):
        a = Candidate(3, Interval(2, 2), 1)
        b = Candidate(2, Interval(1, 1), 1)
        assert not dominates(a, b, "non-increasing")
        assert not dominates(b, a, "non-increasing")

    def test_orientation_flips_with_direction(self):
        longer = Candidate(4, Interval(1, 3), 2)
        shorter = Candidate(4, Interval(3, 3), 2)
        assert dominates(longer, shorter, "non-increasing")
        assert dominates(shorter, longer, "non-decreasing")


class TestSkyline:
    def test_fixture_a_singleton(self, fixture_a):
        res = skyline(fixture_a, "stability", "strict", ["gender"],
                      ["m"], ["m"], top_k=3)
        assert [(c.reference, (c.window.start, c.window.end), c.count)
                for c in res.skyline] == [(3, (2, 2), 1)]
        assert res.dod[res.skyline[0]] == 0
        assert res.top_k == res.skyline

    def test_empty_when_no_candidates(self, fixture_a):
        res = skyline(fixture_a, "stability", "strict", ["gender"],
                      ["f"], ["m"], top_k=3)
        assert res.skyline == [] and res.top_k == []

    def test_top_k_must_be_positive(self, fixture_a):
        with pytest.raises(ContractError):
            skyline(fixture_a, "stability", "strict", ["gender"],
                    ["m"], ["m"], top_k=0)


class TestThreshold:
    def test_fixture_a_ff(self, fixture_a):
        res = threshold_search(fixture_a, "stability", "strict", ["gender"],
                               ["f"], ["f"], k=1)
        assert [(h.reference, (h.window.start, h.window.end), h.count)
                for h in res.hits] == [(2, (1, 1), 1)]

    def test_k_must_be_positive(self, fixture_a):
        with pytest.raises(ContractError):
            threshold_search(fixture_a, "stability", "strict", ["gender"],
                             ["f"], ["f"], k=0)

    def test_unreachable_threshold(self, fixture_a):
        res = threshold_search(fixture_a, "stability", "strict", ["gender"],
                               ["f"], ["f"], k=99)
        assert res.hits == []


# -- equivalence of the chain-count route and the per-window route ------

def _combo_pairs_for(spec):
    combos = spec_combos(spec)
    return [(combos[0], combos[0]), (combos[0], combos[-1]),
            (combos[-1], combos[-1])]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_chain_counts_match_brute_force(seed):
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    for c, cp in _combo_pairs_for(spec):
        for kind, semantics in EVENT_PAIRS:
            chains = candidate_chains(g, kind, semantics, attrs,
                                      list(c), list(cp))
            for t_r, counts in chains.items():
                want = oracle.chain(spec, kind, semantics, attrs, c, cp, t_r)
                assert counts == want, (kind, semantics, t_r)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_optimized_equals_naive_enumeration(seed):
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    c, cp = _combo_pairs_for(spec)[1]
    for kind, semantics in EVENT_PAIRS:
        fast = enumerate_candidates(g, kind, semantics, attrs,
                                    list(c), list(cp))
        slow = naive_enumerate(g, kind, semantics, attrs, list(c), list(cp))
        assert fast == slow, (kind, semantics)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_chains_respect_monotonicity(seed):
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    c, cp = _combo_pairs_for(spec)[0]
    for kind, semantics in EVENT_PAIRS:
        direction = monotonicity_for(kind, semantics)
        chains = candidate_chains(g, kind, semantics, attrs, list(c), list(cp))
        for t_r, counts in chains.items():
            # counts[a - 1] is the window [a, t_r - 1]; decreasing a extends
            # the window, so walk from the back for extension order
            ordered = counts[::-1]
            for prev, nxt in zip(ordered, ordered[1:]):
                if direction == "non-increasing":
                    assert nxt <= prev, (kind, semantics, t_r, counts)
                else:
                    assert nxt >= prev, (kind, semantics, t_r, counts)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_skyline_matches_naive_and_oracle(seed):
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    c, cp = _combo_pairs_for(spec)[1]
    for kind, semantics in EVENT_PAIRS[:3]:
        fast = skyline(g, kind, semantics, attrs, list(c), list(cp), top_k=4)
        slow = naive_skyline(g, kind, semantics, attrs, list(c), list(cp),
                             top_k=4)
        assert fast.skyline == slow.skyline, (kind, semantics)
        assert fast.dod == slow.dod
        assert fast.top_k == slow.top_k
        direction = oracle.DIRECTIONS[(kind, semantics)]
        cands = oracle.candidates(spec, kind, semantics, attrs, c, cp)
        want = oracle.pareto(cands, direction)
        got = {(m.reference, m.window.start, m.count) for m in fast.skyline}
        assert got == want, (kind, semantics)
        for m in fast.skyline:
            assert fast.dod[m] == oracle.domination_degree(
                cands, (m.reference, m.window.start, m.count), direction)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_threshold_matches_naive_and_oracle(seed):
    spec = random_spec(random.Random(seed), max_nodes=10)
    g = graph_from_spec(spec)
    attrs = [a[0] for a in spec["attrs"]]
    c, cp = _combo_pairs_for(spec)[0]
    for kind, semantics in EVENT_PAIRS:
        for k in (1, 2):
            fast = threshold_search(g, kind, semantics, attrs,
                                    list(c), list(cp), k=k)
            slow = naive_threshold_search(g, kind, semantics, attrs,
                                          list(c), list(cp), k=k)
            assert fast.hits == slow.hits, (kind, semantics, k)
            want = oracle.extremal_hits(spec, kind, semantics, attrs,
                                        c, cp, k)
            got = {h.reference: (h.window.start, h.count) for h in fast.hits}
            assert got == want, (kind, semantics, k)
