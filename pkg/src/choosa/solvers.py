"""Exact list-coloring search, k-colorability and the degeneracy greedy."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, degeneracy_ordering
from .lists import Coloring, ListAssignment, is_proper, respects_lists

GIVEN = "given"
MOST_CONSTRAINED = "most-constrained-first"


@dataclass(frozen=True)
class SolveOptions:
    vertex_order: str = GIVEN
    color_order: str = "ascending"

    def __post_init__(self) -> None:
        if self.vertex_order not in (GIVEN, MOST_CONSTRAINED):
            raise ValueError(f"unknown vertex order {self.vertex_order!r}")
        if self.color_order != "ascending":
            raise ValueError("only ascending color order is supported")


def _check_domain(graph: Graph, lists: ListAssignment) -> None:
    if lists.n != graph.n:
        raise ValueError(f"lists cover {lists.n} vertices, graph has {graph.n}")


def exists_list_coloring(
    graph: Graph, lists: ListAssignment, opts: SolveOptions = SolveOptions()
) -> Coloring | None:
    """Depth-first list coloring with backtracking.

    Vertices are assigned one at a time and each color of the vertex's
    list is tried in ascending order; a color clashing with an already
    colored neighbour is skipped immediately.  With the default ``given``
    order the result is the lexicographically first list coloring.
    Returns ``None`` if no proper list coloring exists.
    """
    _check_domain(graph, lists)
    if opts.vertex_order == GIVEN:
        return first_list_coloring(graph.adjacency, lists.lists)
    n = graph.n
    adj = graph.adjacency
    colors: list[int | None] = [None] * n

    def available(v: int) -> list[int]:
        taken = {colors[u] for u in adj[v]}
        return [c for c in lists.lists[v] if c not in taken]

    def search(remaining: int) -> bool:
        if remaining == 0:
            return True
        best, best_avail = -1, None
        for v in range(n):
            if colors[v] is None:
                avail = available(v)
                if best_avail is None or len(avail) < len(best_avail):
                    best, best_avail = v, avail
                    if not avail:
                        return False
        for c in best_avail:
            colors[best] = c
            if search(remaining - 1):
                return True
        colors[best] = None
        return False

    return tuple(colors) if search(n) else None  # type: ignore[arg-type]


def first_list_coloring(
    adjacency: Sequence[Iterable[int]], lists: Sequence[Sequence[int]]
) -> Coloring | None:
    """Lexicographically first proper coloring with ``f[v]`` drawn from ``lists[v]``.

    Raw-sequence core of :func:`exists_list_coloring` for the given vertex
    order; the assignment lives on an explicit stack of
    (vertex, next color index) frames instead of the call stack.
    """
    n = len(lists)
    colors: list[int | None] = [None] * n
    next_idx = [0] * n
    pos = 0
    while 0 <= pos < n:
        allowed = lists[pos]
        while next_idx[pos] < len(allowed):
            c = allowed[next_idx[pos]]
            next_idx[pos] += 1
            if all(colors[u] != c for u in adjacency[pos]):
                colors[pos] = c
                pos += 1
                if pos < n:
                    next_idx[pos] = 0
                break
        else:
            colors[pos] = None
            pos -= 1
    if pos < 0:
        return None
    return tuple(colors)  # type: ignore[arg-type]


def product_space_coloring(graph: Graph, lists: ListAssignment) -> Coloring | None:
    """First proper coloring in the full Cartesian product of the lists.

    No pruning; meant as an oracle for small instances.
    """
    _check_domain(graph, lists)
    for f in itertools.product(*lists.lists):
        if is_proper(graph, f):
            return f
    return None


def k_colorable(graph: Graph, k: int) -> Coloring | None:
    """A proper coloring with colors ``0..k-1``, or ``None``."""
    if k < 1:
        raise ValueError("k must be positive")
    if graph.n == 0:
        return ()
    if k >= graph.n:
        return tuple(range(graph.n))
    lists = ListAssignment.uniform(graph.n, range(k))
    return exists_list_coloring(graph, lists, SolveOptions(MOST_CONSTRAINED))


def chromatic_number(graph: Graph) -> tuple[int, Coloring]:
    """Least k with a proper k-coloring, plus a witness (0 for the empty graph)."""
    if graph.n == 0:
        return 0, ()
    upper = degeneracy_ordering(graph).degeneracy + 1
    for k in range(1, upper + 1):
        witness = k_colorable(graph, k)
        if witness is not None:
            return k, witness
    raise AssertionError("degeneracy + 1 colors always suffice")


def greedy_degeneracy_list_color(graph: Graph, lists: ListAssignment) -> Coloring | None:
    """Color in reverse degeneracy order, taking each vertex's smallest free color.

    Each vertex sees at most ``degeneracy`` already colored neighbours, so
    this succeeds whenever every list has more than ``degeneracy`` colors.
    """
    _check_domain(graph, lists)
    order = degeneracy_ordering(graph).ordering
    colors: list[int | None] = [None] * graph.n
    for v in reversed(order):
        taken = {colors[u] for u in graph.adjacency[v]}
        free = next((c for c in lists.lists[v] if c not in taken), None)
        if free is None:
            return None
        colors[v] = free
    f = tuple(colors)
    assert is_proper(graph, f) and respects_lists(f, lists)  # type: ignore[arg-type]
    return f  # type: ignore[return-value]
