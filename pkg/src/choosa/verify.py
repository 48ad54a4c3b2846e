"""Desk-scale checks of the coloring results, grouped by graph family.

Each scope returns :class:`Row` objects; nothing here raises on a failed
check, failures are data.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .choosability import (
    choice_number,
    gamma_mu_choice_number,
    is_k_choosable,
    is_k_gamma_mu_choosable,
)
from .constructive import knn_interval2_coloring, residue_coloring
from .graph import (
    Graph,
    degeneracy_ordering,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_maximal_outerplanar,
    gen_random_tree,
    nonisomorphic_trees,
)
from .lists import ListAssignment, is_proper, respects_lists
from .solvers import (
    chromatic_number,
    exists_list_coloring,
    greedy_degeneracy_list_color,
    product_space_coloring,
)

SCOPES = ("trees", "cycles", "bipartite", "outerplanar", "planar", "theorem4")

# 4-vertex diamond: v0 adjacent to all, plus v1v2 and v2v3
DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
DIAMOND_BASE = (0, 1, 2, 1)
DIAMOND_LISTS = ListAssignment.from_intervals([(2, 4), (3, 5), (1, 3), (4, 6)])
DIAMOND_EXPECTED = (3, 4, 2, 4)


@dataclass(frozen=True)
class Row:
    scope: str
    name: str
    expected: str
    observed: str

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.scope}: {self.name}: expected {self.expected}, got {self.observed}"


def _gm(graph: Graph) -> int:
    return gamma_mu_choice_number(graph, force=True)


def random_intervals(rng: random.Random, n: int, k: int, spread: int) -> ListAssignment:
    return ListAssignment.from_intervals(
        (g, g + k - 1) for g in (rng.randint(0, spread) for _ in range(n))
    )


def check_trees(seed: int = 0, max_n: int = 7) -> list[Row]:
    rows = []
    for n in range(2, max_n + 1):
        trees = list(nonisomorphic_trees(n))
        values = sorted({_gm(t) for t in trees})
        rows.append(Row("trees", f"all {len(trees)} trees on {n} vertices, gm-choice", "[2]", str(values)))
    rng = random.Random(seed)
    trees = [gen_random_tree(rng.randint(2, 12), rng.randrange(2**31)) for _ in range(50)]
    ok = sum(
        greedy_degeneracy_list_color(t, random_intervals(rng, t.n, 2, 2 * t.n)) is not None
        for t in trees
    )
    rows.append(Row("trees", "greedy colors 50 random trees from size-2 intervals", "50", str(ok)))
    return rows


def check_cycles(seed: int = 0) -> list[Row]:
    rows = []
    for n in (4, 6, 8):
        c = gen_cycle(n)
        rows.append(Row("cycles", f"C_{n} choice number", "2", str(choice_number(c, force=True))))
        rows.append(Row("cycles", f"C_{n} gm-choice", "2", str(_gm(c))))
    for n in (3, 5, 7):
        rows.append(Row("cycles", f"C_{n} gm-choice", "3", str(_gm(gen_cycle(n)))))
    rows.append(Row("cycles", "C_5 choice number", "3", str(choice_number(gen_cycle(5)))))
    return rows


def check_bipartite(seed: int = 0) -> list[Row]:
    rows = []
    for n in (1, 2, 3):
        rows.append(Row("bipartite", f"K_{n},{n} gm-choice", "2", str(_gm(gen_complete_bipartite(n, n)))))
    k24 = gen_complete_bipartite(2, 4)
    general = is_k_choosable(k24, 2)
    witness_ok = general.witness is not None and product_space_coloring(k24, general.witness) is None
    rows.append(Row("bipartite", "K_2,4 2-choosable", "NO", "YES" if general.answer else "NO"))
    rows.append(Row("bipartite", "K_2,4 witness uncolorable by product space", "True", str(witness_ok)))
    interval = is_k_gamma_mu_choosable(k24, 2)
    rows.append(Row("bipartite", "K_2,4 2-(gamma,mu)-choosable", "YES", "YES" if interval.answer else "NO"))
    rows.append(Row("bipartite", "K_2,4 choice number", "3", str(choice_number(k24))))
    rng = random.Random(seed)
    total = ok = 0
    for n in (2, 3, 4):
        g = gen_complete_bipartite(n, n)
        for _ in range(100):
            lists = random_intervals(rng, 2 * n, 2, 2 * n)
            f = knn_interval2_coloring(n, lists)
            total += 1
            ok += is_proper(g, f) and respects_lists(f, lists)
    rows.append(Row("bipartite", "K_n,n size-2 interval construction, n=2..4", str(total), str(ok)))
    return rows


def check_outerplanar(seed: int = 0, instances: int = 500) -> list[Row]:
    rng = random.Random(seed)
    ok = degenerate = 0
    for _ in range(instances):
        n = rng.randint(3, 12)
        g = gen_maximal_outerplanar(n, rng.randrange(2**31))
        degenerate += degeneracy_ordering(g).degeneracy == 2 and g.m == 2 * n - 3
        lists = random_intervals(rng, n, 3, 3 * n)
        ok += greedy_degeneracy_list_color(g, lists) is not None
    rows = [
        Row("outerplanar", f"{instances} maximal outerplanar: 2-degenerate, 2n-3 edges", str(instances), str(degenerate)),
        Row("outerplanar", f"{instances} maximal outerplanar: greedy from size-3 intervals", str(instances), str(ok)),
    ]
    worst = 0
    for n in range(4, 7):
        for drop in (0.0, 0.3):
            g = gen_maximal_outerplanar(n, seed + n, drop=drop)
            worst = max(worst, _gm(g))
    rows.append(Row("outerplanar", "gm-choice of sampled outerplanar graphs, n=4..6, at most 3", "True", str(worst <= 3)))
    return rows


def check_planar(seed: int = 0) -> list[Row]:
    k4 = gen_complete(4)
    return [
        Row("planar", "K_4 chromatic number", "4", str(chromatic_number(k4)[0])),
        Row("planar", "K_4 gm-choice", "4", str(_gm(k4))),
        Row("planar", "diamond gm-choice", "3", str(_gm(DIAMOND))),
    ]


def check_residue(seed: int = 0, instances: int = 200) -> list[Row]:
    f = residue_coloring(DIAMOND, DIAMOND_BASE, DIAMOND_LISTS)
    rows = [Row("theorem4", "diamond residue coloring", str(DIAMOND_EXPECTED), str(f))]
    rng = random.Random(seed)
    ok = 0
    for _ in range(instances):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        k, base = chromatic_number(g)
        lists = random_intervals(rng, g.n, k + rng.randint(0, 2), 3 * g.n)
        f = residue_coloring(g, base, lists, k=k)
        good = is_proper(g, f) and respects_lists(f, lists)
        good = good and all((x - c) % k == 0 for x, c in zip(f, base))
        good = good and exists_list_coloring(g, lists) is not None
        ok += good
    rows.append(Row("theorem4", f"residue coloring on {instances} random instances", str(instances), str(ok)))
    return rows


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


CHECKS: dict[str, Callable[..., list[Row]]] = {
    "trees": check_trees,
    "cycles": check_cycles,
    "bipartite": check_bipartite,
    "outerplanar": check_outerplanar,
    "planar": check_planar,
    "theorem4": check_residue,
}


def run(scope: str = "all", seed: int = 0) -> list[Row]:
    scopes = SCOPES if scope == "all" else (scope,)
    rows: list[Row] = []
    for name in scopes:
        rows.extend(CHECKS[name](seed=seed))
    return rows
