import pytest

from choosa.choosability import (
    EnumerationCapExceeded,
    canonical_assignment_count,
    choice_number,
    gamma_mu_choice_number,
    is_k_choosable,
    is_k_gamma_mu_choosable,
)
from choosa.graph import (
    Graph,
    enumerate_graphs,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_random_tree,
)
from choosa.lists import (
    ListAssignment,
    canonical_list_assignments,
    count_interval_assignments,
    default_offset_bound,
    parse_lists,
)
from choosa.solvers import chromatic_number, exists_list_coloring
from oracles import product_colorable

K24 = gen_complete_bipartite(2, 4)
SMALL = [g for n in range(1, 5) for g in enumerate_graphs(n)]


def _check_witness(graph, verdict):
    if verdict.answer:
        assert verdict.witness is None
    else:
        assert verdict.witness is not None and verdict.witness.n == graph.n
        assert verdict.witness.min_size >= verdict.k
        assert exists_list_coloring(graph, verdict.witness) is None
        assert not product_colorable(graph, verdict.witness)


def test_k2_one_color():
    v = is_k_choosable(gen_complete(2), 1)
    assert not v.answer and v.witness == ListAssignment.general([[1], [1]])
    assert v.checked_count == 1


def test_c4_two_choosable():
    v = is_k_choosable(gen_cycle(4), 2)
    assert v.answer and v.checked_count == canonical_assignment_count(4, 2) == 139


def test_k24_separation():
    v = is_k_choosable(K24, 2)
    assert not v.answer
    _check_witness(K24, v)
    assert v.witness == ListAssignment.general([[1, 2], [3, 4], [1, 3], [1, 4], [2, 3], [2, 4]])
    assert is_k_gamma_mu_choosable(K24, 2).answer


def test_known_witness_uncolorable():
    lists = ListAssignment.general([[1, 2], [3, 4], [1, 3], [1, 4], [2, 3], [2, 4]])
    assert not product_colorable(K24, lists)


def test_c5_uniform_interval_witness():
    v = is_k_gamma_mu_choosable(gen_cycle(5), 2)
    assert not v.answer and v.mode == "interval"
    # colors are 0-based, so the all-equal lists are [0, 1]
    assert v.witness == ListAssignment.from_intervals([(0, 1)] * 5)
    assert v.checked_count == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_knn_interval_two_choosable(n):
    v = is_k_gamma_mu_choosable(gen_complete_bipartite(n, n), 2)
    assert v.answer
    assert v.checked_count == count_interval_assignments(2 * n, 2, default_offset_bound(2 * n, 2))


@pytest.mark.parametrize(
    "graph, expected",
    [(gen_random_tree(6, 1), 2), (gen_cycle(5), 3), (K24, 3), (gen_cycle(4), 2), (Graph.from_edges(3, []), 1)],
)
def test_choice_number_examples(graph, expected):
    assert choice_number(graph) == expected


@pytest.mark.parametrize(
    "graph, expected",
    [(gen_complete_bipartite(3, 3), 2), (gen_cycle(5), 3), (gen_complete(4), 4), (Graph.from_edges(0, []), 0)],
)
def test_gamma_mu_choice_number_examples(graph, expected):
    assert gamma_mu_choice_number(graph) == expected
    assert gamma_mu_choice_number(graph, fast=True) == expected


def test_choice_number_k_max_too_small():
    assert choice_number(gen_cycle(5), k_max=2) is None


@pytest.mark.parametrize("k", [1, 2])
def test_general_strategies_agree(k):
    for g in SMALL:
        a = is_k_choosable(g, k, strategy="memo")
        b = is_k_choosable(g, k, strategy="exhaustive")
        assert a == b
        _check_witness(g, a)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_interval_strategies_agree(k):
    for g in SMALL:
        verdicts = [is_k_gamma_mu_choosable(g, k, strategy=s) for s in ("memo", "exhaustive", "compressed")]
        assert verdicts[0] == verdicts[1] == verdicts[2]
        _check_witness(g, verdicts[0])


def test_interval_strategies_agree_wider_bound():
    for g in list(enumerate_graphs(3)):
        for bound in (0, 1, 5):
            verdicts = [is_k_gamma_mu_choosable(g, 2, bound, strategy=s) for s in ("memo", "exhaustive", "compressed")]
            assert verdicts[0] == verdicts[1] == verdicts[2]


def test_witness_is_first_failure():
    """The reported witness is the first uncolorable assignment in enumeration order."""
    for g in list(enumerate_graphs(3)):
        v = is_k_choosable(g, 2)
        stream = list(canonical_list_assignments(3, 2))
        failing = [i for i, L in enumerate(stream) if not product_colorable(g, L)]
        if failing:
            assert v.checked_count == failing[0] + 1 and v.witness == stream[failing[0]]
        else:
            assert v.answer and v.checked_count == len(stream)


def test_monotonicity():
    for g in SMALL:
        answers = [is_k_choosable(g, k).answer for k in (1, 2, 3)]
        assert answers == sorted(answers)
        interval = [is_k_gamma_mu_choosable(g, k).answer for k in (1, 2, 3)]
        assert interval == sorted(interval)


@pytest.mark.parametrize("n", range(1, 5))
def test_sandwich(n):
    for g in enumerate_graphs(n):
        chi = chromatic_number(g)[0]
        gm = gamma_mu_choice_number(g)
        assert chi == gm == gamma_mu_choice_number(g, fast=True)
        assert gm <= choice_number(g)


def test_cap_and_force():
    with pytest.raises(EnumerationCapExceeded) as err:
        is_k_choosable(gen_cycle(4), 2, cap=100)
    assert err.value.size == 139 and err.value.cap == 100
    assert is_k_choosable(gen_cycle(4), 2, cap=100, force=True).answer
    with pytest.raises(EnumerationCapExceeded):
        is_k_gamma_mu_choosable(gen_cycle(4), 2, cap=10)
    with pytest.raises(EnumerationCapExceeded):
        is_k_gamma_mu_choosable(gen_cycle(4), 2, cap=10, strategy="memo")


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CHOOSA_CAP", "50")
    with pytest.raises(EnumerationCapExceeded):
        is_k_choosable(gen_cycle(4), 2)
    monkeypatch.setenv("CHOOSA_CAP", "1000")
    assert is_k_choosable(gen_cycle(4), 2).answer


def test_invalid_arguments():
    with pytest.raises(ValueError):
        is_k_choosable(gen_cycle(4), 0)
    with pytest.raises(ValueError):
        is_k_gamma_mu_choosable(gen_cycle(4), 0)
    with pytest.raises(ValueError):
        is_k_choosable(gen_cycle(4), 2, color_budget=1)
    with pytest.raises(ValueError):
        is_k_choosable(gen_cycle(4), 2, strategy="guess")


def test_small_palette_mode():
    v = is_k_choosable(gen_cycle(4), 2, paper_palette=True)
    assert v.answer and v.mode == "paper-palette" and v.checked_count == 6**4
    assert is_k_choosable(gen_cycle(4), 2, paper_palette=True, strategy="exhaustive") == v
    v = is_k_choosable(gen_cycle(3), 2, paper_palette=True)
    assert not v.answer
    _check_witness(gen_cycle(3), v)
    # no 3-subset of {1, 2}: nothing to check
    v = is_k_choosable(gen_complete(2), 3, paper_palette=True)
    assert v.answer and v.checked_count == 0


def test_small_palette_agrees_on_small_graphs():
    for g in SMALL:
        for k in (1, 2):
            assert is_k_choosable(g, k, paper_palette=True).answer == is_k_choosable(g, k).answer


def test_report_round_trips_witness():
    v = is_k_choosable(K24, 2)
    text = v.report()
    assert text.startswith("answer: NO\nmode: general\nk: 2\n")
    assert parse_lists(text.split("witness:\n", 1)[1]) == v.witness
    assert is_k_choosable(gen_cycle(4), 2).report().startswith("answer: YES")
