#!/usr/bin/env python3
"""Build the bundled school contact dataset.

Synthetic two-day contact study in a primary school: 232 students in ten
classes plus 10 teachers, 17 hourly instants.  Contact runs (maximal
stretches of consecutive instants on one pair) are laid out first so the
gender and class exploration queries used by the test suite have known
answers; the remainder is deterministic filler that hits exact
per-instant node and edge totals without disturbing any of those
answers (filler pairs only ever recur two or more instants apart, so
they never survive a strict flatten over a window of length >= 1).

Rerunning the script reproduces the output files byte for byte.  The
second half re-parses the emitted files and asserts every per-instant
total and every exploration result the tests rely on, so a generation
bug fails here rather than later and slower in pytest.
"""
from __future__ import annotations

import itertools
import json
import os
import random
from typing import Dict, Iterable, List, Sequence, Set, Tuple

SEED = 8571
N_INSTANTS = 17
NODES_PER_T = [228, 231, 233, 220, 118, 217, 215, 232,
               238, 235, 235, 236, 147, 119, 211, 175, 187]
EDGES_PER_T = [857, 2124, 1765, 1890, 1253, 1560, 1051, 1971,
               1170, 1230, 2039, 1556, 1654, 1336, 1457, 1065, 1767]
TIME_LABELS = [f"d1h{h}" for h in range(1, 10)] + [f"d2h{h}" for h in range(1, 9)]

CLASSES = ["1A", "1B", "2A", "2B", "3A", "3B", "4A", "4B", "5A", "5B"]
EXTRA_BOYS = {"1A", "5A"}

Pair = Tuple[str, str]
Run = Tuple[int, int]

# -- designed contact runs, as (start, end, multiplicity) ---------------

GIRL_RUNS = [(2, 12, 4), (4, 12, 4), (5, 12, 6), (6, 12, 11), (7, 12, 7),
             (8, 12, 5), (9, 12, 2), (10, 12, 4), (11, 12, 11), (7, 11, 3),
             (2, 17, 1)]
BOY_RUNS = [(1, 12, 4), (2, 15, 2), (2, 17, 1), (3, 12, 2), (4, 12, 1),
            (5, 12, 5), (6, 12, 15), (7, 12, 9), (8, 12, 3), (9, 12, 3),
            (10, 12, 5), (11, 12, 10)]
CLASS_1A_RUNS = [(1, 4, 16), (5, 7, 16), (6, 9, 16), (8, 11, 16),
                 (9, 12, 16), (12, 13, 16), (14, 16, 16), (16, 17, 16),
                 (3, 10, 8), (2, 12, 3), (1, 15, 2), (1, 17, 1)]
CLASS_5A_TOWER_RUNS = [(6, 12, 15), (7, 12, 3), (8, 12, 3), (9, 12, 3),
                       (10, 12, 3), (11, 12, 6), (5, 12, 1)]
CLASS_5A_TAIL_RUNS = [(4, 13, 9), (3, 15, 2), (2, 16, 1), (1, 17, 1)]
# Short overlapping runs share pairs; one column of starts per pair keeps
# consecutive runs on the same pair at least one instant apart.
CLASS_5A_SHINGLE_COLUMNS = [
    [(1, 2), (4, 6), (8, 10), (12, 14), (16, 17)],
    [(1, 3), (5, 7), (9, 11), (13, 15)],
    [(2, 4), (6, 8), (10, 12), (14, 16)],
    [(3, 5), (7, 9), (11, 13), (15, 17)],
]
CROSS_1A_1B_RUNS = [(11, 12, 9), (9, 12, 3)]
CROSS_5A_5B_RUNS = [(11, 12, 14), (10, 12, 4), (9, 12, 3), (8, 12, 2)]

# -- results the test suite freezes, re-derived here from the files -----
# skyline tuples are (t_r, start, end, count); threshold maps t_r -> (start, count)

EXPECTED_SKYLINES = {
    "gender-FF": {(12, 11, 11, 55), (12, 10, 11, 44), (11, 8, 10, 41),
                  (12, 8, 11, 38), (12, 7, 11, 33), (12, 6, 11, 26),
                  (12, 5, 11, 15), (12, 4, 11, 9), (12, 2, 11, 5),
                  (17, 2, 16, 1)},
    "gender-MM": {(12, 11, 11, 60), (12, 10, 11, 50), (12, 9, 11, 45),
                  (12, 8, 11, 42), (12, 7, 11, 39), (12, 6, 11, 30),
                  (12, 5, 11, 15), (12, 4, 11, 10), (12, 3, 11, 9),
                  (12, 2, 11, 7), (12, 1, 11, 4), (15, 2, 14, 3),
                  (17, 2, 16, 1)},
    "class-1A": {(7, 6, 6, 46), (9, 8, 8, 46), (10, 9, 9, 46),
                 (11, 9, 10, 38), (9, 6, 8, 30), (10, 3, 9, 14),
                 (12, 2, 11, 6), (15, 1, 14, 3), (17, 1, 16, 1)},
    "class-5A": {(12, 11, 11, 63), (12, 10, 11, 49), (12, 9, 11, 38),
                 (12, 8, 11, 35), (12, 7, 11, 32), (12, 6, 11, 29),
                 (12, 5, 11, 14), (13, 4, 12, 13), (15, 3, 14, 4),
                 (16, 2, 15, 2), (17, 1, 16, 1)},
    "class-1A-1B": {(12, 11, 11, 12), (12, 9, 11, 3)},
    "class-5A-5B": {(12, 11, 11, 23), (12, 10, 11, 9), (12, 9, 11, 5),
                    (12, 8, 11, 2)},
}

EXPECTED_THRESHOLDS = {
    ("gender-FF", 30): {8: (7, 36), 9: (7, 36), 10: (7, 36), 11: (7, 36),
                        12: (7, 33)},
    ("gender-FF", 35): {8: (7, 36), 9: (7, 36), 10: (7, 36), 11: (7, 36),
                        12: (8, 38)},
    ("gender-MM", 35): {8: (7, 39), 9: (7, 39), 10: (7, 39), 11: (7, 39),
                        12: (7, 39)},
    ("class-1A", 15): {2: (1, 19), 3: (1, 19), 4: (1, 19), 6: (5, 30),
                       7: (5, 30), 8: (6, 30), 9: (6, 30), 10: (8, 30),
                       11: (8, 22), 12: (9, 22), 13: (12, 19), 15: (14, 19),
                       16: (14, 17), 17: (16, 17)},
    ("class-5A", 15): {2: (1, 17), 3: (2, 18), 4: (3, 20), 5: (4, 29),
                       6: (4, 21), 7: (5, 22), 8: (6, 37), 9: (6, 29),
                       10: (6, 29), 11: (6, 29), 12: (6, 29), 13: (11, 21),
                       14: (13, 20), 15: (14, 20), 16: (15, 18),
                       17: (16, 17)},
}


def canonical(u: str, v: str) -> Pair:
    return (u, v) if u < v else (v, u)


def expand(spec: Sequence[Tuple[int, int, int]]) -> List[Run]:
    runs: List[Run] = []
    for start, end, mult in spec:
        runs.extend([(start, end)] * mult)
    return runs


def build_population() -> Tuple[List[Tuple[str, str, str]],
                                Dict[str, List[str]], Dict[str, List[str]]]:
    """242 people: 12 girls per class, 11 or 12 boys, 10 teachers."""
    people: List[Tuple[str, str, str]] = []
    girls: Dict[str, List[str]] = {}
    boys: Dict[str, List[str]] = {}
    serial = 0
    for cls in CLASSES:
        girls[cls] = []
        boys[cls] = []
        for _ in range(12):
            serial += 1
            nid = f"s{serial:03d}"
            people.append((nid, "F", cls))
            girls[cls].append(nid)
        n_boys = 12 if cls in EXTRA_BOYS else 11
        for _ in range(n_boys):
            serial += 1
            nid = f"s{serial:03d}"
            people.append((nid, "M", cls))
            boys[cls].append(nid)
    for i in range(1, 11):
        gender = "F" if i <= 4 else ("M" if i <= 8 else "U")
        people.append((f"t{i:02d}", gender, "Teachers"))
    return people, girls, boys


def assign_runs(girls: Dict[str, List[str]],
                boys: Dict[str, List[str]]) -> Dict[Pair, List[Run]]:
    designed: Dict[Pair, List[Run]] = {}

    def place_each(pool: List[Pair], runs: List[Run]) -> None:
        # one run per pair; pools are big enough by construction
        assert len(pool) >= len(runs), (len(pool), len(runs))
        for pair, run in zip(pool, runs):
            designed.setdefault(pair, []).append(run)

    ff_pool = list(itertools.combinations(sorted(girls["2A"] + girls["2B"]), 2))
    place_each(ff_pool, expand(GIRL_RUNS))

    mm_pool = list(itertools.combinations(sorted(boys["3A"] + boys["3B"]), 2))
    place_each(mm_pool, expand(BOY_RUNS))

    a1_pool = [canonical(f, m) for f in girls["1A"] for m in boys["1A"]]
    place_each(a1_pool, expand(CLASS_1A_RUNS))

    a5_pool = [canonical(f, m) for f in girls["5A"] for m in boys["5A"]]
    idx = 0
    for column in CLASS_5A_SHINGLE_COLUMNS:
        for _ in range(8):
            pair = a5_pool[idx]
            idx += 1
            for run in column:
                designed.setdefault(pair, []).append(run)
    for run in expand(CLASS_5A_TOWER_RUNS) + expand(CLASS_5A_TAIL_RUNS):
        designed.setdefault(a5_pool[idx], []).append(run)
        idx += 1
    assert idx <= len(a5_pool)

    ab1_pool = [canonical(f, m) for f in girls["1A"] for m in boys["1B"]]
    place_each(ab1_pool, expand(CROSS_1A_1B_RUNS))

    ab5_pool = [canonical(f, m) for f in girls["5A"] for m in boys["5B"]]
    place_each(ab5_pool, expand(CROSS_5A_5B_RUNS))

    # runs sharing a pair must stay non-adjacent or they would merge
    for pair, runs in designed.items():
        runs.sort()
        for (_, e1), (s2, _) in zip(runs, runs[1:]):
            assert s2 >= e1 + 2, (pair, runs)
    return designed


def run_masks(designed: Dict[Pair, List[Run]]) -> Dict[Pair, int]:
    masks: Dict[Pair, int] = {}
    for pair, runs in designed.items():
        m = 0
        for start, end in runs:
            m |= ((1 << (end - start + 1)) - 1) << (start - 1)
        masks[pair] = m
    return masks


def pad_instants(designed_masks: Dict[Pair, int],
                 roster: List[str]) -> List[Set[Pair]]:
    """Fill every instant to its exact node and edge totals.

    Filler pairs are locked to one parity of instants on first use, so a
    filler pair is never valid at two consecutive instants and cannot
    contribute to any window of two or more consecutive instants.
    """
    designed_pairs = set(designed_masks)
    pair_parity: Dict[Pair, int] = {}
    roster = sorted(roster)
    rot = 0

    def next_filler(exclude: Set[str]) -> str:
        nonlocal rot
        for _ in range(len(roster)):
            nid = roster[rot % len(roster)]
            rot += 1
            if nid not in exclude:
                return nid
        raise AssertionError("roster exhausted")

    per_instant: List[Set[Pair]] = []
    for t in range(1, N_INSTANTS + 1):
        par = t % 2
        edges: Set[Pair] = {p for p, m in designed_masks.items()
                            if m >> (t - 1) & 1}
        present: Set[str] = set()
        for u, v in edges:
            present.add(u)
            present.add(v)
        n_target = NODES_PER_T[t - 1]
        m_target = EDGES_PER_T[t - 1]
        assert len(edges) <= m_target and len(present) <= n_target, t
        covered = set(present)
        while len(present) < n_target:
            present.add(next_filler(present))

        def usable(u: str, v: str) -> bool:
            if u == v:
                return False
            p = canonical(u, v)
            if p in designed_pairs or p in edges:
                return False
            return pair_parity.get(p, par) == par

        def add(u: str, v: str) -> None:
            p = canonical(u, v)
            edges.add(p)
            pair_parity.setdefault(p, par)

        # every filler node needs at least one contact this instant
        pending = sorted(present - covered)
        members = sorted(present)
        while pending:
            u = pending.pop(0)
            mate = None
            for j, v in enumerate(pending):
                if usable(u, v):
                    mate = v
                    del pending[j]
                    break
            if mate is None:
                for v in members:
                    if usable(u, v):
                        mate = v
                        break
            assert mate is not None, (t, u)
            add(u, mate)

        rng = random.Random(SEED * 1000 + t)
        guard = 0
        while len(edges) < m_target:
            guard += 1
            assert guard < 400 * m_target, t
            u, v = rng.sample(members, 2)
            if usable(u, v):
                add(u, v)
        per_instant.append(edges)
    return per_instant


def write_dataset(out_dir: str, people: List[Tuple[str, str, str]],
                  per_instant: List[Set[Pair]]) -> None:
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "nodes.tsv"), "w", encoding="utf-8") as fh:
        fh.write("id\tgender\tclass\n")
        for nid, gender, cls in sorted(people):
            fh.write(f"{nid}\t{gender}\t{cls}\n")
    with open(os.path.join(out_dir, "edges.tsv"), "w", encoding="utf-8") as fh:
        for t, edges in enumerate(per_instant, start=1):
            for u, v in sorted(edges):
                fh.write(f"{u}\t{v}\t{t}\n")
    manifest = {
        "name": "primary-school",
        "format": "snapshot-tsv",
        "directed": False,
        "attributes": [
            {"name": "gender", "kind": "static", "domain": ["F", "M", "U"]},
            {"name": "class", "kind": "static",
             "domain": CLASSES + ["Teachers"]},
        ],
        "files": {"nodes": "nodes.tsv", "edges": "edges.tsv"},
        "time_labels": TIME_LABELS,
    }
    with open(os.path.join(out_dir, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")


# -- independent verification over the emitted files --------------------

def window_counts(masks: Iterable[int]) -> Dict[Tuple[int, int], int]:
    """counts[(t_r, a)] = how many masks cover every instant of [a, t_r]."""
    counts: Dict[Tuple[int, int], int] = {}
    for m in masks:
        t = 1
        while t <= N_INSTANTS:
            if not (m >> (t - 1) & 1):
                t += 1
                continue
            start = t
            while t <= N_INSTANTS and (m >> (t - 1) & 1):
                t += 1
            end = t - 1
            for tr in range(start + 1, end + 1):
                for a in range(start, tr):
                    counts[(tr, a)] = counts.get((tr, a), 0) + 1
    return counts


def pareto_skyline(counts: Dict[Tuple[int, int], int]) -> Set[Tuple[int, int, int, int]]:
    cands = [(tr, a, w) for (tr, a), w in counts.items()]
    keep = set()
    for tr, a, w in cands:
        length = tr - a
        if not any(do - ao >= length and wo >= w
                   and (do - ao, wo) != (length, w)
                   for do, ao, wo in cands):
            keep.add((tr, a, tr - 1, w))
    return keep


def longest_hits(counts: Dict[Tuple[int, int], int],
                 k: int) -> Dict[int, Tuple[int, int]]:
    hits: Dict[int, Tuple[int, int]] = {}
    for tr in range(2, N_INSTANTS + 1):
        for a in range(1, tr):
            w = counts.get((tr, a), 0)
            if w >= k:
                hits[tr] = (a, w)
                break
    return hits


def check_dataset(out_dir: str, designed_masks: Dict[Pair, int]) -> None:
    gender: Dict[str, str] = {}
    cls: Dict[str, str] = {}
    with open(os.path.join(out_dir, "nodes.tsv"), encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        assert header == ["id", "gender", "class"], header
        for line in fh:
            nid, g, c = line.rstrip("\n").split("\t")
            gender[nid] = g
            cls[nid] = c
    assert len(gender) == 242

    masks: Dict[Pair, int] = {}
    seen_nodes = [set() for _ in range(N_INSTANTS)]
    edge_totals = [0] * N_INSTANTS
    with open(os.path.join(out_dir, "edges.tsv"), encoding="utf-8") as fh:
        for line in fh:
            u, v, ts = line.rstrip("\n").split("\t")
            t = int(ts)
            assert (u, v) == canonical(u, v) and u != v
            p = (u, v)
            bit = 1 << (t - 1)
            assert not masks.get(p, 0) & bit, (p, t)
            masks[p] = masks.get(p, 0) | bit
            edge_totals[t - 1] += 1
            seen_nodes[t - 1].add(u)
            seen_nodes[t - 1].add(v)

    assert edge_totals == EDGES_PER_T, edge_totals
    node_totals = [len(s) for s in seen_nodes]
    assert node_totals == NODES_PER_T, node_totals

    touched = set().union(*seen_nodes)
    assert touched == set(gender), "every person must appear at least once"

    for p, m in masks.items():
        if p in designed_masks:
            assert m == designed_masks[p], p
        else:
            assert m & (m >> 1) == 0, ("filler pair spans adjacent instants", p)

    def group(pred) -> List[int]:
        return [m for (u, v), m in masks.items() if pred(u, v)]

    groups = {
        "gender-FF": group(lambda u, v: gender[u] == "F" and gender[v] == "F"),
        "gender-MM": group(lambda u, v: gender[u] == "M" and gender[v] == "M"),
        "class-1A": group(lambda u, v: cls[u] == "1A" and cls[v] == "1A"),
        "class-5A": group(lambda u, v: cls[u] == "5A" and cls[v] == "5A"),
        "class-1A-1B": group(lambda u, v: {cls[u], cls[v]} == {"1A", "1B"}),
        "class-5A-5B": group(lambda u, v: {cls[u], cls[v]} == {"5A", "5B"}),
    }
    for name, expected in EXPECTED_SKYLINES.items():
        got = pareto_skyline(window_counts(groups[name]))
        assert got == expected, (name, sorted(got ^ expected))
    for (name, k), expected_hits in EXPECTED_THRESHOLDS.items():
        got_hits = longest_hits(window_counts(groups[name]), k)
        assert got_hits == expected_hits, (name, k, got_hits)
    print("check: all per-instant totals and exploration results verified")


def main() -> None:
    here = os.path.dirname(os.path.abspath(__file__))
    out_dir = os.path.join(here, os.pardir, "data", "primary_school")
    people, girls, boys = build_population()
    designed = assign_runs(girls, boys)
    masks = run_masks(designed)
    per_instant = pad_instants(masks, [p[0] for p in people])
    write_dataset(out_dir, people, per_instant)
    total = sum(len(e) for e in per_instant)
    print(f"wrote {out_dir}: 242 people, {total} edge instants")
    check_dataset(out_dir, masks)


if __name__ == "__main__":
    main()
