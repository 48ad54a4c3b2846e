import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

import choosa.constructive as constructive
from choosa.constructive import (
    ConstructionError,
    ResidueClasses,
    SetFamily,
    find_sdr,
    hall_violator,
    knn_interval2_coloring,
    knn_lemma1_coloring,
    knn_lemma2_coloring,
    knn_route,
    residue_coloring,
)
from choosa.graph import Graph, enumerate_graphs, gen_complete_bipartite, gen_cycle
from choosa.lists import (
    IntervalList,
    ListAssignment,
    enumerate_interval_assignments,
    is_proper,
    respects_lists,
)
from choosa.solvers import chromatic_number, exists_list_coloring
from oracles import hall_holds, sdr_exists

DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
DIAMOND_LISTS = ListAssignment.from_intervals([(2, 4), (3, 5), (1, 3), (4, 6)])
SUBSETS = [frozenset(c) for r in range(1, 5) for c in itertools.combinations(range(1, 5), r)]


def _knn_lists(v_side, w_side):
    return ListAssignment.from_intervals(list(v_side) + list(w_side))


def _valid_sdr(sets, sdr):
    return len(sdr) == len(sets) and len(set(sdr)) == len(sdr) and all(x in s for x, s in zip(sdr, sets))


def _deficient(sets, idx):
    return bool(idx) and len(frozenset().union(*(sets[i] for i in idx))) < len(idx)


# residues


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_residue_classes_partition(k):
    rc = ResidueClasses(k)
    for x in range(-20, 20):
        assert sum(rc.contains(r, x) for r in range(k)) == 1
        assert rc.contains(rc.class_of(x), x)


def test_residue_representative_negative_interval():
    rc = ResidueClasses(3)
    iv = IntervalList(-4, -2)
    assert [rc.representative(iv, r) for r in range(3)] == [-3, -2, -4]
    with pytest.raises(ValueError):
        rc.representative(IntervalList(0, 1), 0)
    with pytest.raises(ValueError):
        ResidueClasses(0)


def test_diamond_example():
    f = residue_coloring(DIAMOND, (0, 1, 2, 1), DIAMOND_LISTS)
    assert f == (3, 4, 2, 4)


@pytest.mark.parametrize("graph", [gen_cycle(5), DIAMOND, gen_complete_bipartite(2, 3)])
def test_identity_interval(graph):
    k, base = chromatic_number(graph)
    lists = ListAssignment.from_intervals([(0, k - 1)] * graph.n)
    assert residue_coloring(graph, base, lists) == base


def test_residue_random_instances():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 10)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        k, base = chromatic_number(g)
        lists = ListAssignment.from_intervals(
            [IntervalList.of_size(rng.randint(-5, 3 * n), k + rng.randint(0, 2)) for _ in range(n)]
        )
        f = residue_coloring(g, base, lists, k=k)
        assert is_proper(g, f) and respects_lists(f, lists)
        assert all((x - c) % k == 0 for x, c in zip(f, base))
        assert exists_list_coloring(g, lists) is not None


@pytest.mark.parametrize("n", range(1, 5))
def test_residue_covers_every_normalized_assignment(n):
    for g in enumerate_graphs(n):
        k, base = chromatic_number(g)
        for lists in enumerate_interval_assignments(n, k):
            f = residue_coloring(g, base, lists, k=k)
            assert is_proper(g, f) and respects_lists(f, lists)


@pytest.mark.parametrize(
    "base, lists, k",
    [
        ((0, 0, 1, 2), DIAMOND_LISTS, None),  # improper
        ((0, 1, 3, 1), DIAMOND_LISTS, 3),  # color beyond k
        ((0, 1, 2, 1), ListAssignment.general([[2, 3, 4], [3, 4, 5], [1, 2, 3], [4, 5, 6]]), None),
        ((0, 1, 2, 1), ListAssignment.from_intervals([(2, 4), (3, 4), (1, 3), (4, 6)]), None),
        ((0, 1, 2), DIAMOND_LISTS, None),
    ],
)
def test_residue_errors(base, lists, k):
    with pytest.raises(ValueError):
        residue_coloring(DIAMOND, base, lists, k=k)


# distinct representatives


def test_sdr_examples():
    family = SetFamily.of([{1, 2}, {2, 3}, {1, 3}])
    assert _valid_sdr(family.sets, find_sdr(family))
    assert hall_violator(family) is None
    assert find_sdr(SetFamily.of([{1}, {1}])) is None
    assert hall_violator(SetFamily.of([{1}, {1}])) == frozenset({0, 1})
    assert hall_violator(SetFamily.of([{1, 2}] * 3)) == frozenset({0, 1, 2})


def test_empty_set_rejected():
    with pytest.raises(ValueError):
        SetFamily.of([{1}, set()])


@pytest.mark.parametrize("m", range(0, 5))
def test_sdr_hall_duality_exhaustive(m):
    for sets in itertools.product(SUBSETS, repeat=m):
        family = SetFamily(sets)
        sdr, bad = find_sdr(family), hall_violator(family)
        assert (sdr is None) != (bad is None)
        assert (sdr is not None) == sdr_exists(sets) == hall_holds(sets)
        if sdr is not None:
            assert _valid_sdr(sets, sdr)
        else:
            assert _deficient(sets, bad)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.frozensets(st.integers(0, 7), min_size=1, max_size=4), max_size=7))
def test_sdr_hall_duality_random(sets):
    family = SetFamily(tuple(sets))
    sdr, bad = find_sdr(family), hall_violator(family)
    assert (sdr is None) != (bad is None)
    assert (sdr is not None) == sdr_exists(sets)
    assert sdr is None or _valid_sdr(sets, sdr)
    assert bad is None or _deficient(sets, bad)


def test_size_two_interval_families():
    rng = random.Random(5)
    for _ in range(12):
        m = rng.randint(1, 6)
        sets = [frozenset({g, g + 1}) for g in (rng.randint(0, 5) for _ in range(m))]
        assert (find_sdr(SetFamily(tuple(sets))) is not None) == sdr_exists(sets)


# K_{n,n}


def test_shared_lists_examples():
    assert knn_lemma1_coloring(1, [(1, 2)]) == (1, 2)
    assert knn_lemma1_coloring(2, [(1, 2), (2, 3)]) == (1, 3, 2, 2)
    lists = [(1, 2), (2, 3), (3, 4), (4, 5)]
    f = knn_lemma1_coloring(4, lists)
    assert is_proper(gen_complete_bipartite(4, 4), f)
    assert respects_lists(f, _knn_lists(lists, lists))


def test_shared_lists_unsorted_input():
    lists = [(7, 8), (2, 3), (3, 4), (1, 2)]
    f = knn_lemma1_coloring(4, lists)
    assert respects_lists(f, _knn_lists(lists, lists))
    assert is_proper(gen_complete_bipartite(4, 4), f)


def test_shared_lists_errors():
    with pytest.raises(ValueError):
        knn_lemma1_coloring(2, [(1, 2), (1, 2)])
    with pytest.raises(ValueError):
        knn_lemma1_coloring(2, [(1, 2), (2, 4)])
    with pytest.raises(ValueError):
        knn_lemma1_coloring(3, [(1, 2), (2, 3)])


@pytest.mark.parametrize(
    "n, v_side, w_side",
    [
        (1, [(1, 2)], [(3, 4)]),
        (2, [(1, 2), (1, 2)], [(2, 3), (3, 4)]),
        (3, [(1, 2), (3, 4), (5, 6)], [(2, 3), (4, 5), (6, 7)]),
    ],
)
def test_disjoint_lists_examples(n, v_side, w_side):
    f = knn_lemma2_coloring(n, v_side, w_side)
    assert is_proper(gen_complete_bipartite(n, n), f)
    assert respects_lists(f, _knn_lists(v_side, w_side))
    # vertices with the same list share its representative, different lists differ
    rep = {}
    for iv, c in zip(v_side + w_side, f):
        assert rep.setdefault(iv, c) == c
    assert len(set(rep.values())) == len(rep)


def test_disjoint_lists_errors():
    with pytest.raises(ValueError):
        knn_lemma2_coloring(1, [(1, 2)], [(1, 2)])
    with pytest.raises(ValueError):
        knn_lemma2_coloring(1, [(1, 3)], [(4, 5)])


def test_route_selection():
    assert knn_route(2, _knn_lists([(1, 2), (2, 3)], [(2, 3), (1, 2)])) == "lemma1"
    assert knn_route(2, _knn_lists([(1, 2), (1, 2)], [(2, 3), (3, 4)])) == "lemma2"
    assert knn_route(2, _knn_lists([(1, 2), (2, 3)], [(1, 2), (5, 6)])) == "residue"
    assert knn_route(2, _knn_lists([(5, 6)] * 2, [(5, 6)] * 2)) == "residue"


def test_uniform_lists_use_residue():
    lists = _knn_lists([(5, 6)] * 3, [(5, 6)] * 3)
    assert knn_interval2_coloring(3, lists) == (6, 6, 6, 5, 5, 5)


def test_shared_lists_configuration():
    # v_i and w_i carry the same list, lists in sequence
    v_side = [(1, 2), (2, 3), (3, 4), (4, 5), (6, 7)]
    w_side = [(2, 3), (1, 2), (4, 5), (6, 7), (3, 4)]
    lists = _knn_lists(v_side, w_side)
    f = knn_interval2_coloring(5, lists)
    assert is_proper(gen_complete_bipartite(5, 5), f) and respects_lists(f, lists)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dispatcher_random(n):
    rng = random.Random(n)
    graph = gen_complete_bipartite(n, n)
    for _ in range(100):
        lists = ListAssignment.from_intervals([IntervalList.of_size(rng.randint(0, 2 * n), 2) for _ in range(2 * n)])
        f = knn_interval2_coloring(n, lists)
        assert is_proper(graph, f) and respects_lists(f, lists)


def _spy(monkeypatch, calls, name):
    real = getattr(constructive, name)

    def wrapper(*args, **kwargs):
        calls.append(name)
        return real(*args, **kwargs)

    monkeypatch.setattr(constructive, name, wrapper)


def test_dispatcher_routes(monkeypatch):
    calls = []
    for name in ("knn_lemma1_coloring", "knn_lemma2_coloring", "residue_coloring"):
        _spy(monkeypatch, calls, name)
    knn_interval2_coloring(2, _knn_lists([(1, 2), (2, 3)], [(2, 3), (1, 2)]))
    knn_interval2_coloring(2, _knn_lists([(1, 2), (1, 2)], [(2, 3), (3, 4)]))
    knn_interval2_coloring(2, _knn_lists([(1, 2), (2, 3)], [(1, 2), (5, 6)]))
    assert calls == ["knn_lemma1_coloring", "knn_lemma2_coloring", "residue_coloring"]


def test_dispatcher_errors():
    with pytest.raises(ValueError):
        knn_interval2_coloring(2, ListAssignment.from_intervals([(1, 2)] * 3))
    with pytest.raises(ValueError):
        knn_interval2_coloring(2, ListAssignment.from_intervals([(1, 3)] * 4))
    with pytest.raises(ValueError):
        knn_interval2_coloring(1, ListAssignment.general([[1, 3], [2, 4]]))


def test_construction_error_is_runtime_error():
    assert issubclass(ConstructionError, RuntimeError)
